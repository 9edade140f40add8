#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tribuild/projective_plane.hpp"

namespace tribuild {

/// Ordered triple (x, y, z); rotations are distinct values.
struct Triple {
  PointId x, y, z;
  constexpr auto operator<=>(const Triple&) const = default;

  constexpr Triple rotated() const { return {y, z, x}; }

  /// Lexicographically least rotation.
  constexpr Triple canonical_rotation() const {
    Triple best = *this;
    Triple r = rotated();
    if (r < best) best = r;
    r = r.rotated();
    if (r < best) best = r;
    return best;
  }
};

/// Raw input to verify(): not yet known to satisfy the axioms.
struct PresentationCandidate {
  ProjectivePlane plane;
  Lambda lambda;
  std::vector<Triple> triples;
};

enum class Axiom { Incidence, Cyclic, Uniqueness };

struct AxiomViolation {
  Axiom axiom;
  std::string detail;
};

struct VerificationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Incidence: return "(i) incidence";
    case Axiom::Cyclic: return "(ii) cyclic closure";
    case Axiom::Uniqueness: return "(iii) uniqueness";
  }
  return "?";
}

/// Checks the three triangle-presentation axioms. Reports the first failing
/// pair or triple for each axiom; violations are data, never thrown.
inline VerificationReport verify(const PresentationCandidate& c) {
  VerificationReport report;
  const std::size_t n = c.plane.size();
  auto pt = [](std::size_t i) { return PointId{static_cast<std::uint32_t>(i)}; };
  std::set<Triple> tset(c.triples.begin(), c.triples.end());
  std::vector<int> count(n * n, 0);
  for (const Triple& t : tset) {
    if (t.x.value >= n || t.y.value >= n || t.z.value >= n) {
      report.violations.push_back({Axiom::Incidence, "triple has point index out of range"});
      return report;
    }
    ++count[t.x.value * n + t.y.value];
  }
  // (i): a triple starts with (x, y) iff y lies on lambda(x).
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      const bool inc = c.plane.incident(pt(y), c.lambda(pt(x)));
      const bool has = count[x * n + y] > 0;
      if (inc != has) {
        report.violations.push_back(
            {Axiom::Incidence, "pair (" + std::to_string(x) + "," + std::to_string(y) + ") " +
                                   (inc ? "is incident but has no triple" : "has a triple but is not incident")});
        found = true;
      }
    }
    if (found) break;
  }
  for (const Triple& t : tset) {
    if (!tset.contains(t.rotated())) {
      report.violations.push_back(
          {Axiom::Cyclic, "(" + std::to_string(t.x.value) + "," + std::to_string(t.y.value) + "," +
                              std::to_string(t.z.value) + ") present but its rotation is missing"});
      break;
    }
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (count[i] > 1) {
      report.violations.push_back({Axiom::Uniqueness, "pair (" + std::to_string(i / n) + "," +
                                                          std::to_string(i % n) + ") has " +
                                                          std::to_string(count[i]) + " third points"});
      break;
    }
  }
  return report;
}

/// A triangle presentation compatible with lambda. Always satisfies the
/// axioms; stores the rotation-closed triple set and an O(1) lookup table.
class TrianglePresentation {
 public:
  TrianglePresentation(ProjectivePlane plane, Lambda lambda, std::vector<Triple> triples)
      : plane_(std::move(plane)), lambda_(std::move(lambda)) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    PresentationCandidate cand{plane_, lambda_, triples};
    auto report = verify(cand);
    if (!report.ok()) {
      throw Error(ErrorCode::InvalidPresentation,
                  std::string(to_string(report.violations.front().axiom)) + ": " +
                      report.violations.front().detail);
    }
    triples_ = std::move(triples);
    const std::size_t n = plane_.size();
    third_.assign(n * n, kNone);
    for (const Triple& t : triples_) third_[t.x.value * n + t.y.value] = t.z.value;
  }

  const ProjectivePlane& plane() const noexcept { return plane_; }
  const Lambda& lambda() const noexcept { return lambda_; }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  unsigned order() const noexcept { return plane_.order(); }
  std::size_t num_points() const noexcept { return plane_.size(); }

  /// The unique z with (x, y, z) in T, if y lies on lambda(x).
  std::optional<PointId> third(PointId x, PointId y) const {
    const auto z = third_.at(x.value * num_points() + y.value);
    if (z == kNone) return std::nullopt;
    return PointId{z};
  }

  bool contains(const Triple& t) const {
    auto z = third(t.x, t.y);
    return z && *z == t.z;
  }

  /// y lies on the line lambda(x).
  bool on_lambda(PointId x, PointId y) const { return plane_.incident(y, lambda_(x)); }

  /// One triple per rotation class, lexicographically least rotation, sorted.
  std::vector<Triple> canonical_triples() const {
    std::vector<Triple> out;
    for (const Triple& t : triples_) {
      if (t.canonical_rotation() == t) out.push_back(t);
    }
    return out;
  }

  bool operator==(const TrianglePresentation& o) const {
    return lambda_ == o.lambda_ && triples_ == o.triples_ && plane_.lines() == o.plane_.lines();
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  ProjectivePlane plane_;
  Lambda lambda_;
  std::vector<Triple> triples_;
  std::vector<std::uint32_t> third_;
};

inline std::vector<Triple> close_under_rotation(const std::vector<Triple>& ts) {
  std::set<Triple> out;
  for (const Triple& t : ts) {
    out.insert(t);
    out.insert(t.rotated());
    out.insert(t.rotated().rotated());
  }
  return {out.begin(), out.end()};
}

/// The q = 2 presentation with relations a_i a_{i+1} a_{i+3} = 1 (indices mod
/// 7) over the plane with lines {i+1, i+2, i+4}; lambda(i) is line i.
inline TrianglePresentation canonical_q2() {
  auto plane = build_plane(2);
  std::vector<Triple> base;
  for (std::uint32_t i = 0; i < 7; ++i) {
    base.push_back({PointId{i}, PointId{(i + 1) % 7}, PointId{(i + 3) % 7}});
  }
  return TrianglePresentation(plane, Lambda::identity(7), close_under_rotation(base));
}

/// A q = 3 presentation over the plane of {0,1,3,9} mod 13 with lambda the
/// identity: the fixed triples (i,i,i) and the rotations of (i,i+1,i+4).
inline TrianglePresentation canonical_q3() {
  auto plane = build_plane(3);
  std::vector<Triple> base;
  for (std::uint32_t i = 0; i < 13; ++i) {
    base.push_back({PointId{i}, PointId{i}, PointId{i}});
    base.push_back({PointId{i}, PointId{(i + 1) % 13}, PointId{(i + 4) % 13}});
  }
  return TrianglePresentation(plane, Lambda::identity(13), close_under_rotation(base));
}

/// The built-in presentation for q = 2 or q = 3.
inline TrianglePresentation canonical_presentation(unsigned q) {
  if (q == 2) return canonical_q2();
  if (q == 3) return canonical_q3();
  throw Error(ErrorCode::UnsupportedOrder, "no built-in presentation for q = " + std::to_string(q));
}

struct EnumerationResult {
  std::vector<TrianglePresentation> presentations;
  bool truncated = false;
  std::size_t nodes = 0;
};

/// Backtracking search for every triangle presentation compatible with
/// (plane, lambda). Incident pairs are taken in lexicographic order and
/// candidate third points in increasing order, so output order is stable.
/// Stops early (truncated = true) after `limit` results or `node_budget`
/// search nodes.
inline EnumerationResult enumerate(const ProjectivePlane& plane, const Lambda& lambda,
                                   std::size_t limit = static_cast<std::size_t>(-1),
                                   std::size_t node_budget = static_cast<std::size_t>(-1)) {
  const std::size_t n = plane.size();
  constexpr std::uint32_t none = 0xffffffffu;
  std::vector<std::uint32_t> table(n * n, none);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (plane.incident(PointId{y}, lambda(PointId{x}))) pairs.emplace_back(x, y);
    }
  }
  auto incident = [&](std::uint32_t x, std::uint32_t y) {
    return plane.incident(PointId{y}, lambda(PointId{x}));
  };

  EnumerationResult result;
  bool stop = false;

  auto emit = [&] {
    std::vector<Triple> ts;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        if (table[x * n + y] != none) ts.push_back({PointId{x}, PointId{y}, PointId{table[x * n + y]}});
    result.presentations.emplace_back(plane, lambda, std::move(ts));
  };

  auto search = [&](auto&& self, std::size_t idx) -> void {
    if (stop) return;
    if (result.nodes == node_budget) {
      result.truncated = true;
      stop = true;
      return;
    }
    ++result.nodes;
    while (idx < pairs.size() && table[pairs[idx].first * n + pairs[idx].second] != none) ++idx;
    if (idx == pairs.size()) {
      emit();
      if (result.presentations.size() >= limit) {
        result.truncated = true;
        stop = true;
      }
      return;
    }
    const auto [x, y] = pairs[idx];
    for (std::uint32_t z = 0; z < n && !stop; ++z) {
      // (y, z, x) and (z, x, y) must be admissible and unassigned.
      if (!incident(y, z) || !incident(z, x)) continue;
      if (table[y * n + z] != none || table[z * n + x] != none) continue;
      table[x * n + y] = z;
      table[y * n + z] = x;
      table[z * n + x] = y;
      self(self, idx + 1);
      table[x * n + y] = none;
      table[y * n + z] = none;
      table[z * n + x] = none;
    }
  };
  search(search, 0);
  return result;
}

}  // namespace tribuild
