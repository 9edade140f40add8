// Acceptance run: one PASS/FAIL line per criterion, with wall-clock time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "tribuild/tribuild.hpp"

using namespace tribuild;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string timing = std::to_string(s).substr(0, std::to_string(s).find('.') + 4) + " s";
  if (limit_s > 0) {
    timing += " (limit " + std::to_string(static_cast<int>(limit_s)) + " s)";
    if (s >= limit_s) {
      o.ok = false;
      o.detail += "; over time";
    }
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %s: %s [%s]\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), timing.c_str());
  std::fflush(stdout);
}

std::string str(std::size_t n) { return std::to_string(n); }

}  // namespace

int main() {
  const TrianglePresentation p = canonical_q2();
  const auto letters = alphabet(p);

  criterion(1, "canonical presentation", 1, [&] {
    const TrianglePresentation fresh = canonical_q2();
    const bool axioms = verify({fresh.plane(), fresh.lambda(), fresh.triples()}).ok();
    std::size_t identity = 0;
    for (const Triple& t : fresh.triples())
      identity += reduce(fresh, {gen(t.x.value), gen(t.y.value), gen(t.z.value)}).is_identity();
    return Outcome{axioms && fresh.triples().size() == 21 && identity == 21,
                   "|T| = " + str(fresh.triples().size()) + ", axioms " + (axioms ? "hold" : "fail") + ", " +
                       str(identity) + " relators reduce to e"};
  });

  criterion(2, "alphabet size", 0, [&] {
    const std::size_t a2 = alphabet(canonical_q2()).size();
    const std::size_t a3 = alphabet(canonical_q3()).size();
    return Outcome{a2 == 3 * 7 && a3 == 4 * 13, "q=2: " + str(a2) + ", q=3: " + str(a3)};
  });

  criterion(3, "transition matrices", 1, [&] {
    const auto [plus, minus] = matrices(p);
    bool rows = true;
    for (std::size_t i = 0; i < plus.dim(); ++i) rows = rows && plus.row_sum(i) == 4 && minus.row_sum(i) == 4;
    const bool sc = plus.strongly_connected() && minus.strongly_connected();
    return Outcome{rows && sc && plus.dim() == 21,
                   std::string("row sums ") + (rows ? "all 4" : "not all 4") + ", " +
                       (sc ? "both strongly connected" : "not strongly connected")};
  });

  criterion(4, "geometric binding", 10, [&] {
    std::size_t bad = 0;
    for (ChamberLabel l : letters) {
      std::set<ChamberLabel> right, left;
      for_each_diagram(p, l, 3, [&](const SectorDiagram& d) {
        right.insert(d.cell({1, 0}));
        left.insert(d.cell({0, 1}));
      });
      bad += right != a_plus(p, l);
      bad += left != a_minus(p, l);
    }
    return Outcome{bad == 0, str(letters.size()) + " labels, " + str(bad) + " discrepancies"};
  });

  criterion(5, "generator decomposition", 1, [&] {
    std::size_t bad = 0;
    for (std::uint32_t b = 0; b < 7; ++b) {
      const auto d = decompose_generator(p, PointId{b});
      const bool ok = d.family_a.size() == 3 && d.family_b.size() == 3 && d.family_c.size() == 12 && d.words_ok &&
                      d.initial_partition_ok && d.final_partition_ok && d.initial_count == 21 &&
                      d.final_count == 21;
      bad += !ok;
    }
    return Outcome{bad == 0, "7 generators, families (3, 3, 12), " + str(bad) + " failures"};
  });

  criterion(6, "weak commutativity", 5, [&] {
    const auto quads = admissible_quadruples(p);
    std::size_t bad = 0;
    for (const Quadruple& x : quads) {
      const auto r = weak_commutativity_check(p, x.a, x.b, x.c, x.h);
      bad += !(r.equal && r.lhs_terms == 2 && r.rhs_terms == 2);
    }
    return Outcome{bad == 0 && !quads.empty(), str(quads.size()) + " quadruples, " + str(bad) + " failures"};
  });

  criterion(7, "ball census", 30, [&] {
    const BallCensus c = ball(p, 4, 10'000'000);
    bool shapes = true;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n + m <= 4; ++m) {
        const auto it = c.by_shape.find(Shape{n, m});
        const std::size_t bfs = it == c.by_shape.end() ? 0 : it->second;
        shapes = shapes && bfs == shape_count_closed_form(2, n, m);
      }
    const std::vector<std::size_t> want{1, 14, 98, 560, 2912};
    std::string detail = "spheres";
    for (std::size_t k = 1; k < c.sphere_sizes.size(); ++k) detail += " " + str(c.sphere_sizes[k]);
    detail += shapes ? ", shapes agree with the closed form" : ", shape mismatch";
    return Outcome{shapes && c.sphere_sizes == want, detail};
  });

  criterion(8, "hexagons at e", 1, [&] {
    const std::size_t h = hexagon_count(residue_graph(p, NormalForm{}));
    return Outcome{h == 28, str(h) + " hexagons"};
  });

  criterion(9, "wall determinism", 60, [&] {
    // Every pair of right and left wall words of the given length, each
    // letter drawn from the q^2 successors of the previous one.
    std::size_t tried = 0, filled = 0, incompatible = 0;
    for (ChamberLabel base : letters) {
      auto rec = [&](auto&& self, std::vector<ChamberLabel> right, std::vector<ChamberLabel> left) -> void {
        if (right.size() == 1 || right.size() == 2) {
          ++tried;
          try {
            fill_from_walls(p, base, right, left);
            ++filled;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::IncompatibleWalls) throw;
            ++incompatible;
          }
        }
        if (right.size() == 2) return;
        for (ChamberLabel rr : a_plus(p, right.empty() ? base : right.back()))
          for (ChamberLabel ll : a_minus(p, left.empty() ? base : left.back())) {
            auto r2 = right;
            auto l2 = left;
            r2.push_back(rr);
            l2.push_back(ll);
            self(self, r2, l2);
          }
      };
      rec(rec, {}, {});
    }
    std::size_t layer2 = 0, layer3 = 0;
    for_each_diagram(p, letters.front(), 2, [&](const SectorDiagram&) { ++layer2; });
    for_each_diagram(p, letters.front(), 3, [&](const SectorDiagram&) { ++layer3; });
    const std::size_t expected_pairs = 21 * 16 + 21 * 256;
    const bool ok = tried == expected_pairs && filled == tried && layer2 == 16 && layer3 == 16 * 16;
    return Outcome{ok, str(filled) + "/" + str(tried) + " wall pairs filled (" + str(incompatible) +
                           " incompatible); extensions per layer " + str(layer2) + ", " + str(layer3 / layer2) +
                           " (expected q^4 = 16)"};
  });

  criterion(10, "minimality witnesses", 0, [&] {
    const auto targets = ball(p, 2, 1'000'000).elements;
    std::size_t bad = 0;
    for (ChamberLabel l : letters)
      for (const NormalForm& v : targets) bad += !validate_witness(p, v, l, minimality_witness(p, v, l), 3);
    return Outcome{bad == 0, str(letters.size() * targets.size()) + " (label, v) pairs, " + str(bad) + " failures"};
  });

  criterion(11, "amenability overlaps", 0, [&] {
    std::mt19937_64 rng(11);
    const auto shorts = ball(p, 1, 1000).elements;
    std::size_t bad = 0, count = 0;
    for (int sample = 0; sample < 20; ++sample) {
      const SectorDiagram omega = random_diagram(p, 23, rng);
      for (int i : {10, 20})
        for (const NormalForm& s : shorts) {
          const Rational v = amenability_overlap(p, omega, s, i);
          bool ok = overlap_lower_bound(i, s.length()) <= v && v <= Rational{1, 1};
          if (s.is_identity()) ok = ok && v == Rational{1, 1};
          bad += !ok;
          ++count;
        }
    }
    return Outcome{bad == 0, "20 diagrams of depth 23, " + str(count) + " overlaps, " + str(bad) + " outside the bounds"};
  });

  criterion(12, "apartment growth", 60, [&] {
    std::size_t bad = 0, exhausted = 0, case_a = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      try {
        const auto g = grow_apartment(p, 1, seed);
        bool contains = g.boundary.size() == 6 && g.patch.valid(p);
        for (const SectorDiagram& s : g.boundary)
          contains = contains && s.depth() >= 1 && s.truncated(g.t_cylinder.depth()) == g.t_cylinder;
        bad += !(contains && g.all_contain_t);
        case_a += g.b_lie_as_a;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BacktrackExhausted) throw;
        ++exhausted;
      }
    }
    return Outcome{bad == 0 && exhausted == 0, "20 seeds, " + str(bad) + " failures, " + str(exhausted) +
                                                   " exhausted, case A " + str(case_a) + " times"};
  });

  criterion(13, "free group matrix", 0, [&] {
    const auto m = free_group_matrix(2);
    return Outcome{m == std::vector<std::vector<int>>{{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}},
                   "rank 2, 4x4"};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
