#include <gtest/gtest.h>

#include <queue>
#include <random>

#include "tribuild/building_local.hpp"
#include "tribuild/lattice.hpp"

using namespace tribuild;

namespace {

LatticeMap random_patch(const TrianglePresentation& p, int radius, std::uint64_t seed) {
  LatticeMap m(p);
  m.set({0, 0}, NormalForm{});
  std::mt19937_64 rng(seed);
  m.random_fill(hexagon_region({0, 0}, radius), rng);
  return m;
}

}  // namespace

TEST(Lattice, HexDistanceMatchesBfs) {
  std::map<Coord, int> dist{{{0, 0}, 0}};
  std::queue<Coord> todo;
  todo.push({0, 0});
  while (!todo.empty()) {
    const Coord c = todo.front();
    todo.pop();
    for (Coord s : kSteps) {
      const Coord n = c + s;
      if (std::abs(n.i) > 6 || std::abs(n.j) > 6 || dist.contains(n)) continue;
      dist[n] = dist[c] + 1;
      todo.push(n);
    }
  }
  for (const auto& [c, d] : dist) {
    if (std::abs(c.i) <= 3 && std::abs(c.j) <= 3) {
      EXPECT_EQ(hex_distance(c, {0, 0}), d) << c.i << "," << c.j;
    }
  }
  EXPECT_EQ(hexagon_region({0, 0}, 2).size(), 19u);
  EXPECT_EQ(triangle_region(3).size(), 10u);
}

TEST(Lattice, StepsAlternateGeneratorAndInverse) {
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(step_is_inverse(kSteps[k]), k % 2 == 1);
    EXPECT_NE(step_is_inverse(kSteps[k]), step_is_inverse(-kSteps[k]));
    EXPECT_TRUE(lattice_adjacent(kSteps[k], kSteps[(k + 1) % 6]));
  }
}

TEST(Lattice, CandidatesAroundIdentity) {
  const auto p = canonical_q2();
  LatticeMap m(p);
  m.set({0, 0}, NormalForm{});
  for (Coord s : kSteps) {
    const auto cands = m.candidates(s);
    EXPECT_EQ(cands.size(), 7u);
    for (const NormalForm& g : cands) {
      EXPECT_EQ(g.length(), 1u);
      EXPECT_EQ(g.xs.size() == 1, step_is_inverse(s));
    }
  }
  try {
    m.candidates({5, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(Lattice, RandomPatchesAreApartments) {
  for (const auto& p : {canonical_q2(), canonical_q3()}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const LatticeMap m = random_patch(p, 4, seed);
      ASSERT_TRUE(m.valid());
      std::set<NormalForm> distinct;
      for (const auto& [c, g] : m.vertices()) {
        distinct.insert(g);
        // Types rotate along R and L.
        EXPECT_EQ(vertex_type(g), static_cast<unsigned>(((c.i - c.j) % 3 + 3) % 3));
      }
      EXPECT_EQ(distinct.size(), m.size());
      for (const auto& [c, g] : m.vertices()) {
        if (!m.known(c + kR) || !m.known(c + kL)) continue;
        EXPECT_NO_THROW(chamber_from_vertices(p, {g, m.at(c + kR), m.at(c + kL)}));
      }
    }
  }
}

TEST(Lattice, InteriorPointIsForced) {
  const auto p = canonical_q2();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LatticeMap m = random_patch(p, 3, seed);
    const Coord target{1, 0};
    const NormalForm original = m.at(target);
    m.erase(target);
    EXPECT_TRUE(m.is_forced(target));
    EXPECT_EQ(m.forced_fill({target}), 1u);
    EXPECT_EQ(m.at(target), original);
  }
}

TEST(Lattice, CorruptionIsDetected) {
  const auto p = canonical_q2();
  LatticeMap m = random_patch(p, 2, 1);
  const NormalForm a = m.at({1, 0});
  const NormalForm b = m.at({0, 1});
  m.set({1, 0}, b);
  m.set({0, 1}, a);
  EXPECT_FALSE(m.valid());
}

TEST(Lattice, ContradictionIsReported) {
  const auto p = canonical_q2();
  LatticeMap m = random_patch(p, 2, 2);
  m.erase({0, 0});
  m.set({1, 0}, reduce(p, parse_word("0 3 5 0 3", 7)));
  try {
    m.forced_fill({{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FillContradiction);
  }
}

TEST(Lattice, EnumerateFillCountsTriangleCompletions) {
  // With e at the origin, the up triangle {0, R, L} is completed in as many
  // ways as there are chambers at e.
  const auto p = canonical_q2();
  LatticeMap m(p);
  m.set({0, 0}, NormalForm{});
  std::size_t count = 0;
  m.enumerate_fill({{1, 0}, {0, 1}}, [&](const LatticeMap& full) {
    EXPECT_TRUE(full.valid());
    ++count;
    return true;
  });
  EXPECT_EQ(count, 21u);
}
