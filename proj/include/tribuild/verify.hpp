#pragma once

// The invariant suite behind `verify all`: each check reports a name, a
// verdict and a one-line summary of what was counted.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "tribuild/apartment.hpp"
#include "tribuild/ck_subshift.hpp"

namespace tribuild {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

/// A random truncation of the given depth based at e.
template <class Rng>
SectorDiagram random_diagram(const TrianglePresentation& pres, int depth, Rng& rng) {
  const auto letters = alphabet(pres);
  SectorDiagram d = base_diagram(pres, letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)]);
  while (d.depth() < depth) {
    auto ext = enumerate_extensions(pres, d);
    d = ext[std::uniform_int_distribution<std::size_t>(0, ext.size() - 1)(rng)];
  }
  return d;
}

/// Number of triangles (hexagons of the incidence graph) in PG(2, q).
inline std::size_t plane_triangle_count(unsigned q) {
  const std::size_t n = static_cast<std::size_t>(q) * q + q + 1;
  return n * (n - 1) * q * q / 6;
}

inline std::vector<CheckResult> verify_all(const TrianglePresentation& pres, std::uint64_t seed = 0) {
  const unsigned q = pres.order();
  const std::size_t q2 = static_cast<std::size_t>(q) * q;
  std::vector<CheckResult> out;
  auto run = [&](std::string name, auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{std::move(name), false, "", 0};
    try {
      body(r);
    } catch (const Error& e) {
      r.ok = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  };
  const auto letters = alphabet(pres);

  run("plane axioms", [&](CheckResult& r) {
    std::vector<std::vector<PointId>> lines;
    for (std::uint32_t l = 0; l < pres.plane().size(); ++l) lines.push_back(pres.plane().points_on(LineId{l}));
    ProjectivePlane again(q, lines);
    r.ok = again.size() == q2 + q + 1;
    r.detail = std::to_string(again.size()) + " points and lines";
  });
  run("presentation axioms", [&](CheckResult& r) {
    r.ok = verify({pres.plane(), pres.lambda(), pres.triples()}).ok();
    r.detail = std::to_string(pres.triples().size()) + " triples";
  });
  run("relator products", [&](CheckResult& r) {
    std::size_t bad = 0;
    for (const Triple& t : pres.triples())
      bad += reduce(pres, {gen(t.x.value), gen(t.y.value), gen(t.z.value)}).is_identity() ? 0 : 1;
    r.ok = bad == 0;
    r.detail = std::to_string(pres.triples().size() - bad) + "/" + std::to_string(pres.triples().size()) + " reduce to e";
  });
  run("ball census", [&](CheckResult& r) {
    const std::size_t radius = q == 2 ? 4 : 3;
    const BallCensus c = ball(pres, radius, 10'000'000);
    r.ok = true;
    for (const auto& [s, count] : c.by_shape) r.ok = r.ok && count == shape_count_closed_form(q, s.n, s.m);
    r.detail = "spheres";
    for (std::size_t k = 1; k <= radius; ++k) r.detail += " " + std::to_string(c.sphere_sizes[k]);
  });
  run("hexagon count", [&](CheckResult& r) {
    const std::size_t h = hexagon_count(residue_graph(pres, NormalForm{}));
    r.ok = h == plane_triangle_count(q);
    r.detail = std::to_string(h) + " hexagons";
  });
  run("transition matrices", [&](CheckResult& r) {
    auto [plus, minus] = matrices(pres);
    r.ok = plus.strongly_connected() && minus.strongly_connected();
    for (std::size_t i = 0; i < plus.dim(); ++i)
      r.ok = r.ok && static_cast<std::size_t>(plus.row_sum(i)) == q2 && static_cast<std::size_t>(minus.row_sum(i)) == q2;
    r.detail = std::to_string(plus.dim()) + " labels, row sums q^2, strongly connected";
  });
  run("geometric binding", [&](CheckResult& r) {
    std::size_t bad = 0;
    for (ChamberLabel l : letters) {
      bad += wall_successors(pres, l, Direction::Plus) == a_plus(pres, l) ? 0 : 1;
      bad += wall_successors(pres, l, Direction::Minus) == a_minus(pres, l) ? 0 : 1;
      for (ChamberLabel n : a_plus(pres, l)) bad += shift_consistent(pres, Direction::Plus, l, n) ? 0 : 1;
      for (ChamberLabel n : a_minus(pres, l)) bad += shift_consistent(pres, Direction::Minus, l, n) ? 0 : 1;
    }
    r.ok = bad == 0;
    r.detail = std::to_string(bad) + " discrepancies";
  });
  run("generator decomposition", [&](CheckResult& r) {
    r.ok = true;
    for (std::uint32_t b = 0; b < pres.num_points(); ++b) {
      const auto d = decompose_generator(pres, PointId{b});
      r.ok = r.ok && d.words_ok && d.initial_partition_ok && d.final_partition_ok && d.family_a.size() == q + 1 &&
             d.family_b.size() == q + 1 && d.family_c.size() == q2 * (q + 1);
    }
    r.detail = "families (" + std::to_string(q + 1) + ", " + std::to_string(q + 1) + ", " + std::to_string(q2 * (q + 1)) +
               ") for every generator";
  });
  run("weak commutativity", [&](CheckResult& r) {
    const auto quads = admissible_quadruples(pres);
    std::size_t bad = 0;
    for (const Quadruple& x : quads) {
      const auto rep = weak_commutativity_check(pres, x.a, x.b, x.c, x.h);
      bad += rep.equal && rep.lhs_terms == q && rep.rhs_terms == q ? 0 : 1;
    }
    r.ok = bad == 0 && !quads.empty();
    r.detail = std::to_string(quads.size()) + " quadruples, " + std::to_string(bad) + " failures";
  });
  run("wall determinism", [&](CheckResult& r) {
    const int max_len = q == 2 ? 2 : 1;
    std::size_t filled = 0, incompatible = 0, mismatched = 0;
    for (ChamberLabel base : letters) {
      auto rec = [&](auto&& self, std::vector<ChamberLabel> right, std::vector<ChamberLabel> left) -> void {
        if (!right.empty()) {
          try {
            fill_from_walls(pres, base, right, left);
            ++filled;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::IncompatibleWalls) throw;
            ++incompatible;
          }
        }
        if (static_cast<int>(right.size()) == max_len) return;
        for (ChamberLabel rr : a_plus(pres, right.empty() ? base : right.back()))
          for (ChamberLabel ll : a_minus(pres, left.empty() ? base : left.back())) {
            auto r2 = right;
            auto l2 = left;
            r2.push_back(rr);
            l2.push_back(ll);
            self(self, r2, l2);
          }
      };
      rec(rec, {}, {});
      std::size_t count = 0;
      for_each_diagram(pres, base, max_len + 1, [&](const SectorDiagram&) { ++count; });
      std::size_t expect = 1;
      for (int k = 0; k < max_len; ++k) expect *= q2 * q;
      mismatched += count == expect ? 0 : 1;
    }
    r.ok = mismatched == 0;
    r.detail = std::to_string(filled) + " wall pairs filled, " + std::to_string(incompatible) +
               " incompatible, no contradictions; q^3 extensions per layer";
  });
  run("minimality witnesses", [&](CheckResult& r) {
    const std::size_t radius = q == 2 ? 2 : 1;
    const auto targets = ball(pres, radius, 1'000'000).elements;
    std::size_t bad = 0, longer = 0;
    for (ChamberLabel l : letters)
      for (const NormalForm& v : targets) {
        const NormalForm k = minimality_witness(pres, v, l);
        longer += k.length() > v.length() + 1 ? 1 : 0;
        bad += validate_witness(pres, v, l, k, 3) ? 0 : 1;
      }
    r.ok = bad == 0;
    r.detail = std::to_string(letters.size() * targets.size()) + " pairs, " + std::to_string(longer) +
               " needing |k| > |v|+1, " + std::to_string(bad) + " failures";
  });
  run("amenability overlaps", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const auto shorts = ball(pres, 1, 1000).elements;
    std::size_t bad = 0, count = 0;
    for (int sample = 0; sample < 3; ++sample) {
      const SectorDiagram omega = random_diagram(pres, 23, rng);
      for (int i : {10, 20})
        for (const NormalForm& s : shorts) {
          const Rational v = amenability_overlap(pres, omega, s, i);
          const Rational bound = overlap_lower_bound(i, s.length());
          bad += (bound <= v && v <= Rational{1, 1} && (!s.is_identity() || v == Rational{1, 1})) ? 0 : 1;
          ++count;
        }
    }
    r.ok = bad == 0;
    r.detail = std::to_string(count) + " overlaps, " + std::to_string(bad) + " outside the bound";
  });
  run("apartment growth", [&](CheckResult& r) {
    std::size_t bad = 0;
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const auto g = grow_apartment(pres, 1, seed + s);
      bad += g.all_contain_t && g.patch.valid(pres) ? 0 : 1;
    }
    r.ok = bad == 0;
    r.detail = "5 seeds, " + std::to_string(bad) + " failures";
  });
  run("free group matrix", [&](CheckResult& r) {
    r.ok = free_group_matrix(2) == std::vector<std::vector<int>>{{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}};
    r.detail = "rank 2";
  });
  return out;
}

}  // namespace tribuild
