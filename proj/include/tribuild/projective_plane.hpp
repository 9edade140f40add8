#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tribuild/types.hpp"

namespace tribuild {

/// Incidence structure of a finite projective plane PG(2, q) given by lines
/// as sets of points. Immutable after construction.
class ProjectivePlane {
 public:
  /// Builds the plane from explicit line point-sets and checks the axioms.
  /// Point lists are stored sorted; line order is kept as given.
  ProjectivePlane(unsigned q, std::vector<std::vector<PointId>> lines)
      : q_(q), line_points_(std::move(lines)) {
    const std::size_t n = static_cast<std::size_t>(q) * q + q + 1;
    if (q < 2) {
      throw Error(ErrorCode::UnsupportedOrder, "order must be >= 2");
    }
    if (line_points_.size() != n) {
      throw Error(ErrorCode::InvalidDifferenceSet,
                  "expected " + std::to_string(n) + " lines");
    }
    incidence_.assign(n * n, false);
    point_lines_.assign(n, {});
    for (std::size_t l = 0; l < n; ++l) {
      auto& pts = line_points_[l];
      std::sort(pts.begin(), pts.end());
      if (pts.size() != q + 1 ||
          std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw Error(ErrorCode::InvalidDifferenceSet,
                    "line " + std::to_string(l) + " does not have q+1 points");
      }
      for (PointId p : pts) {
        if (p.value >= n) {
          throw Error(ErrorCode::IndexOutOfRange, "point index in line");
        }
        incidence_[p.value * n + l] = true;
        point_lines_[p.value].push_back(LineId{static_cast<std::uint32_t>(l)});
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (point_lines_[p].size() != q + 1) {
        throw Error(ErrorCode::InvalidDifferenceSet,
                    "point " + std::to_string(p) + " is not on q+1 lines");
      }
    }
    // Two lines meet in exactly one point; with the counts above this also
    // gives that two points span exactly one line.
    for (std::size_t l1 = 0; l1 < n; ++l1) {
      for (std::size_t l2 = l1 + 1; l2 < n; ++l2) {
        std::size_t common = 0;
        for (PointId p : line_points_[l1]) {
          if (incidence_[p.value * n + l2]) ++common;
        }
        if (common != 1) {
          throw Error(ErrorCode::InvalidDifferenceSet,
                      "lines " + std::to_string(l1) + " and " +
                          std::to_string(l2) + " share " +
                          std::to_string(common) + " points");
        }
      }
    }
  }

  unsigned order() const noexcept { return q_; }
  std::size_t size() const noexcept { return line_points_.size(); }

  const std::vector<PointId>& points_on(LineId l) const {
    check(l);
    return line_points_[l.value];
  }
  const std::vector<LineId>& lines_through(PointId p) const {
    check(p);
    return point_lines_[p.value];
  }
  const std::vector<std::vector<PointId>>& lines() const noexcept {
    return line_points_;
  }

  bool incident(PointId p, LineId l) const {
    check(p);
    check(l);
    return incidence_[p.value * size() + l.value];
  }

  PointId meet(LineId l1, LineId l2) const {
    check(l1);
    check(l2);
    if (l1 == l2) throw Error(ErrorCode::EqualLines, "meet of a line with itself");
    for (PointId p : line_points_[l1.value]) {
      if (incidence_[p.value * size() + l2.value]) return p;
    }
    throw Error(ErrorCode::InvalidDifferenceSet, "lines do not meet");
  }

  LineId join(PointId p1, PointId p2) const {
    check(p1);
    check(p2);
    if (p1 == p2) throw Error(ErrorCode::EqualPoints, "join of a point with itself");
    for (LineId l : point_lines_[p1.value]) {
      if (incidence_[p2.value * size() + l.value]) return l;
    }
    throw Error(ErrorCode::InvalidDifferenceSet, "points are not joined");
  }

  /// Index of the line with exactly this point set, if any.
  std::optional<LineId> find_line(std::vector<PointId> pts) const {
    std::sort(pts.begin(), pts.end());
    for (std::size_t l = 0; l < size(); ++l) {
      if (line_points_[l] == pts) return LineId{static_cast<std::uint32_t>(l)};
    }
    return std::nullopt;
  }

 private:
  void check(PointId p) const {
    if (p.value >= size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(p.value));
  }
  void check(LineId l) const {
    if (l.value >= size()) throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(l.value));
  }

  unsigned q_;
  std::vector<std::vector<PointId>> line_points_;
  std::vector<std::vector<LineId>> point_lines_;
  std::vector<bool> incidence_;
};

/// Built-in perfect difference sets (Singer) for small orders.
inline std::optional<std::vector<unsigned>> builtin_difference_set(unsigned q) {
  switch (q) {
    case 2: return std::vector<unsigned>{1, 2, 4};
    case 3: return std::vector<unsigned>{0, 1, 3, 9};
    default: return std::nullopt;
  }
}

/// Plane whose line i is the translate {d + i : d in D} mod q^2+q+1.
inline ProjectivePlane build_plane(unsigned q, std::optional<std::vector<unsigned>> difference_set = std::nullopt) {
  if (!difference_set) difference_set = builtin_difference_set(q);
  if (!difference_set) {
    throw Error(ErrorCode::UnsupportedOrder,
                "no built-in difference set for q=" + std::to_string(q));
  }
  if (q < 2) throw Error(ErrorCode::UnsupportedOrder, "order must be >= 2");
  const unsigned n = q * q + q + 1;
  std::vector<std::vector<PointId>> lines(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned d : *difference_set) lines[i].push_back(PointId{(d + i) % n});
  }
  return ProjectivePlane(q, std::move(lines));
}

/// A point-line correspondence: a bijection from points to lines.
class Lambda {
 public:
  explicit Lambda(std::vector<LineId> map) : map_(std::move(map)), inverse_(map_.size()) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t p = 0; p < map_.size(); ++p) {
      const auto l = map_[p].value;
      if (l >= map_.size() || seen[l]) {
        throw Error(ErrorCode::InvalidPresentation, "lambda is not a bijection");
      }
      seen[l] = true;
      inverse_[l] = PointId{static_cast<std::uint32_t>(p)};
    }
  }

  /// lambda(i) = line i.
  static Lambda identity(std::size_t n) {
    std::vector<LineId> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = LineId{static_cast<std::uint32_t>(i)};
    return Lambda(std::move(m));
  }

  LineId operator()(PointId p) const { return map_.at(p.value); }
  PointId inverse(LineId l) const { return inverse_.at(l.value); }
  std::size_t size() const noexcept { return map_.size(); }
  const std::vector<LineId>& map() const noexcept { return map_; }

  bool operator==(const Lambda&) const = default;

 private:
  std::vector<LineId> map_;
  std::vector<PointId> inverse_;
};

}  // namespace tribuild
