#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "tribuild/sector_geometry.hpp"
#include "tribuild/verify.hpp"

using namespace tribuild;

namespace {

NormalForm el(const TrianglePresentation& p, const std::string& w) { return reduce(p, parse_word(w, p.num_points())); }

ChamberLabel lab(unsigned a, unsigned b) { return {PointId{a}, PointId{b}}; }

// Vertex images computed straight from the cells; nullopt if two cells
// disagree about a vertex, a vertex repeats, or a cell is not a label.
std::optional<std::map<Coord, NormalForm>> vertices_from_cells(const TrianglePresentation& p,
                                                               const std::map<Coord, ChamberLabel>& cells) {
  std::map<Coord, NormalForm> v{{{0, 0}, NormalForm{}}};
  auto put = [&](Coord c, const NormalForm& g) {
    auto [it, fresh] = v.emplace(c, g);
    return fresh || it->second == g;
  };
  for (const auto& [c, l] : cells) {
    if (!p.on_lambda(l.a, l.b)) return std::nullopt;
    const NormalForm& at = v.at(c);
    if (!put(c + kR, multiply(p, at, gen(l.b.value)))) return std::nullopt;
    if (!put(c + kL, multiply(p, at, inv(l.a.value)))) return std::nullopt;
  }
  std::set<NormalForm> distinct;
  for (const auto& [c, g] : v) distinct.insert(g);
  if (distinct.size() != v.size()) return std::nullopt;
  return v;
}

// All label assignments to the new layer of cells that give a valid sector.
std::set<std::map<Coord, ChamberLabel>> brute_force_extensions(const TrianglePresentation& p, const SectorDiagram& d) {
  const auto letters = alphabet(p);
  const int k = d.depth();
  std::set<std::map<Coord, ChamberLabel>> out;
  std::map<Coord, ChamberLabel> cells = d.cells();
  std::function<void(int)> rec = [&](int i) {
    if (i > k) {
      if (vertices_from_cells(p, cells)) out.insert(cells);
      return;
    }
    for (ChamberLabel l : letters) {
      cells[{i, k - i}] = l;
      rec(i + 1);
    }
    cells.erase({i, k - i});
  };
  rec(0);
  return out;
}

}  // namespace

TEST(SectorGeometry, BaseDiagram) {
  const auto p = canonical_q2();
  const SectorDiagram d = base_diagram(p, lab(0, 1));
  EXPECT_EQ(d.depth(), 1);
  EXPECT_EQ(d.vertex({0, 0}), NormalForm{});
  EXPECT_EQ(d.vertex({1, 0}), el(p, "1"));
  EXPECT_EQ(d.vertex({0, 1}), el(p, "0^-1"));
  EXPECT_THROW(base_diagram(p, lab(0, 3)), Error);
}

TEST(SectorGeometry, ExtensionsMatchBruteForce) {
  const auto p = canonical_q2();
  for (ChamberLabel l : alphabet(p)) {
    const SectorDiagram d = base_diagram(p, l);
    const auto ext = enumerate_extensions(p, d);
    const auto oracle = brute_force_extensions(p, d);
    ASSERT_EQ(ext.size(), oracle.size()) << to_string(l);
    EXPECT_EQ(ext.size(), 8u);
    for (const SectorDiagram& e : ext) EXPECT_TRUE(oracle.contains(e.cells()));
  }
}

TEST(SectorGeometry, SecondLayerMatchesBruteForce) {
  const auto p = canonical_q2();
  const SectorDiagram d = enumerate_extensions(p, base_diagram(p, lab(3, 5))).at(2);
  const auto ext = enumerate_extensions(p, d);
  const auto oracle = brute_force_extensions(p, d);
  ASSERT_EQ(ext.size(), oracle.size());
  EXPECT_EQ(ext.size(), 8u);
  for (const SectorDiagram& e : ext) EXPECT_TRUE(oracle.contains(e.cells()));
}

TEST(SectorGeometry, ExtensionCountsAreQCubed) {
  const auto p3 = canonical_q3();
  std::size_t n = 0;
  for_each_diagram(p3, alphabet(p3).front(), 2, [&](const SectorDiagram&) { ++n; });
  EXPECT_EQ(n, 27u);
  const auto p = canonical_q2();
  n = 0;
  for_each_diagram(p, lab(0, 1), 3, [&](const SectorDiagram& d) {
    EXPECT_EQ(d.truncated(1), base_diagram(p, lab(0, 1)));
    ++n;
  });
  EXPECT_EQ(n, 64u);
}

TEST(SectorGeometry, VertexShapesAreGeodesic) {
  const auto p = canonical_q2();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const SectorDiagram d = random_diagram(p, 6, rng);
    for (const auto& [c, g] : d.vertices()) EXPECT_EQ(g.shape(), (Shape{std::size_t(c.j), std::size_t(c.i)}));
    EXPECT_EQ(SectorDiagram::from_vertices(p, d.depth(), d.vertices()), d);
  }
}

TEST(SectorGeometry, InvalidDiagrams) {
  const auto p = canonical_q2();
  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([&] { SectorDiagram::from_cells(p, NormalForm{}, 0, {}); }), ErrorCode::InvalidDiagram);
  EXPECT_EQ(code([&] { SectorDiagram::from_cells(p, NormalForm{}, 2, {{{0, 0}, lab(0, 1)}}); }), ErrorCode::InvalidDiagram);
  EXPECT_EQ(code([&] { SectorDiagram::from_cells(p, NormalForm{}, 1, {{{0, 0}, lab(0, 3)}}); }), ErrorCode::InvalidDiagram);
  std::map<Coord, NormalForm> verts = base_diagram(p, lab(0, 1)).vertices();
  verts[{1, 0}] = el(p, "3");
  EXPECT_EQ(code([&] { SectorDiagram::from_vertices(p, 1, verts); }), ErrorCode::InvalidDiagram);
}

TEST(SectorGeometry, FillFromEmptyWalls) {
  const auto p = canonical_q2();
  EXPECT_EQ(fill_from_walls(p, lab(0, 1), {}, {}), base_diagram(p, lab(0, 1)));
}

TEST(SectorGeometry, FillFromWallsExample) {
  const auto p = canonical_q2();
  const SectorDiagram d = fill_from_walls(p, lab(0, 1), {lab(6, 0)}, {lab(0, 4)});
  EXPECT_EQ(d.depth(), 2);
  EXPECT_EQ(d.vertex({1, 1}), el(p, "0^-1 4"));
  EXPECT_TRUE(vertices_from_cells(p, d.cells()).has_value());
}

TEST(SectorGeometry, WallsDetermineDiagrams) {
  const auto p = canonical_q2();
  for (ChamberLabel l : alphabet(p)) {
    for_each_diagram(p, l, 3, [&](const SectorDiagram& d) {
      auto r = d.right_wall();
      auto lw = d.left_wall();
      r.erase(r.begin());
      lw.erase(lw.begin());
      EXPECT_EQ(fill_from_walls(p, l, r, lw), d);
    });
  }
}

TEST(SectorGeometry, WallPairCompatibility) {
  // Of the 16 pairs from A+ x A- exactly the 8 that occur in a depth-2
  // diagram fill.
  const auto p = canonical_q2();
  for (ChamberLabel l : alphabet(p)) {
    std::size_t ok = 0;
    for (ChamberLabel r : a_plus(p, l))
      for (ChamberLabel lw : a_minus(p, l)) {
        try {
          fill_from_walls(p, l, {r}, {lw});
          ++ok;
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::IncompatibleWalls);
        }
      }
    EXPECT_EQ(ok, 8u);
  }
}

TEST(SectorGeometry, FillErrors) {
  const auto p = canonical_q2();
  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([&] { fill_from_walls(p, lab(0, 1), {lab(0, 1)}, {lab(0, 4)}); }), ErrorCode::InadmissibleWall);
  EXPECT_EQ(code([&] { fill_from_walls(p, lab(0, 1), {lab(6, 0)}, {lab(6, 0)}); }), ErrorCode::InadmissibleWall);
  EXPECT_EQ(code([&] { fill_from_walls(p, lab(0, 1), {lab(6, 0)}, {}); }), ErrorCode::PreconditionFailed);
}

TEST(SectorGeometry, CylinderContains) {
  const auto p = canonical_q2();
  const SectorDiagram d = base_diagram(p, lab(0, 1));
  EXPECT_TRUE(cylinder_contains(p, d, NormalForm{}));
  EXPECT_TRUE(cylinder_contains(p, d, el(p, "1")));
  EXPECT_FALSE(cylinder_contains(p, d, el(p, "2")));
  try {
    cylinder_contains(p, d, el(p, "1 0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthInsufficient);
  }
}

TEST(SectorGeometry, TranslateByIdentity) {
  const auto p = canonical_q2();
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    const SectorDiagram d = random_diagram(p, 5, rng);
    EXPECT_EQ(translate(p, NormalForm{}, d), d);
    EXPECT_EQ(rebase(p, d.vertices(), d.depth(), NormalForm{}), d);
  }
}

TEST(SectorGeometry, TranslateAlongRightWall) {
  const auto p = canonical_q2();
  const NormalForm g = el(p, "1");
  for_each_diagram(p, lab(6, 0), 3, [&](const SectorDiagram& d) {
    const SectorDiagram t = translate(p, g, d);
    EXPECT_EQ(t.base_label(), lab(0, 1));
    // The translated vertices g * v lie in the result wherever it is deep
    // enough.
    for (const auto& [c, v] : d.vertices()) {
      const NormalForm w = multiply(p, g, v);
      if (w.length() <= static_cast<std::size_t>(t.depth())) {
        EXPECT_TRUE(cylinder_contains(p, t, w));
      }
    }
  });
  EXPECT_THROW(translate(p, g, base_diagram(p, lab(6, 0))), Error);
}

TEST(SectorGeometry, MinimalityWitnessExamples) {
  const auto p = canonical_q2();
  const NormalForm k = minimality_witness(p, el(p, "0"), lab(0, 1));
  EXPECT_EQ(k, el(p, "0 3"));
  EXPECT_TRUE(validate_witness(p, el(p, "0"), lab(0, 1), k));
  for (ChamberLabel l : alphabet(p)) {
    const NormalForm ke = minimality_witness(p, NormalForm{}, l);
    ASSERT_EQ(ke.length(), 1u);
    EXPECT_FALSE(p.on_lambda(ke.ys[0], l.b));
    EXPECT_TRUE(validate_witness(p, NormalForm{}, l, ke));
  }
}

TEST(SectorGeometry, MinimalityWitnessesForShortTargets) {
  const auto p = canonical_q2();
  const auto targets = ball(p, 1).elements;
  for (ChamberLabel l : alphabet(p))
    for (const NormalForm& v : targets) {
      const NormalForm k = minimality_witness(p, v, l);
      EXPECT_EQ(relative(p, v, k).xs.size(), 0u);
      EXPECT_TRUE(validate_witness(p, v, l, k)) << to_string(v) << " from " << to_string(l);
    }
}

TEST(SectorGeometry, RationalArithmetic) {
  EXPECT_EQ(Rational::make(2, 4), (Rational{1, 2}));
  EXPECT_EQ(Rational::make(2, 4).str(), "1/2");
  EXPECT_LT(Rational::make(1, 3), Rational::make(1, 2));
  EXPECT_DOUBLE_EQ(Rational::make(3, 4).value(), 0.75);
  EXPECT_EQ(overlap_lower_bound(10, 1), Rational::make(56, 110));
  EXPECT_EQ(overlap_lower_bound(10, 0), Rational::make(1, 1));
}

TEST(SectorGeometry, AmenabilityOverlap) {
  const auto p = canonical_q2();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 3; ++t) {
    const SectorDiagram omega = random_diagram(p, 43, rng);
    EXPECT_EQ(amenability_overlap(p, omega, NormalForm{}, 10), (Rational{1, 1}));
    Rational prev{0, 1};
    for (int i : {10, 20, 40}) {
      const Rational r = amenability_overlap(p, omega, el(p, "0"), i);
      EXPECT_LE(overlap_lower_bound(i, 1), r);
      EXPECT_LE(r, (Rational{1, 1}));
      EXPECT_LE(prev, r);
      prev = r;
    }
  }
}

TEST(SectorGeometry, AmenabilityErrors) {
  const auto p = canonical_q2();
  std::mt19937_64 rng(1);
  const SectorDiagram omega = random_diagram(p, 12, rng);
  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([&] { amenability_overlap(p, omega, el(p, "0"), 0); }), ErrorCode::PreconditionFailed);
  EXPECT_EQ(code([&] { amenability_overlap(p, omega, el(p, "0"), 10); }), ErrorCode::DepthInsufficient);
}
