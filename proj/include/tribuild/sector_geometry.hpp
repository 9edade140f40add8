#pragma once

// Finite truncations of sectors: the triangle of vertices
// base * (word of shape (j, i)) for i + j <= depth, with i steps along R and
// j steps along L.

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tribuild/labels.hpp"
#include "tribuild/lattice.hpp"

namespace tribuild {

class SectorDiagram {
 public:
  /// Builds a diagram from its cells; vertices are derived along the walls
  /// and rows and then checked for consistency.
  static SectorDiagram from_cells(const TrianglePresentation& pres, NormalForm base, int depth,
                                  std::map<Coord, ChamberLabel> cells) {
    if (depth < 1) throw Error(ErrorCode::InvalidDiagram, "depth must be at least 1");
    for (Coord p : triangle_region(depth - 1))
      if (!cells.contains(p)) throw Error(ErrorCode::InvalidDiagram, "missing cell");
    if (cells.size() != triangle_region(depth - 1).size()) throw Error(ErrorCode::InvalidDiagram, "cell outside the triangle");
    std::map<Coord, NormalForm> verts;
    verts[{0, 0}] = base;
    for (int j = 0; j <= depth; ++j) {
      if (j > 0) verts[{0, j}] = multiply(pres, verts.at({0, j - 1}), inv(cells.at({0, j - 1}).a.value));
      for (int i = 1; i + j <= depth; ++i)
        verts[{i, j}] = multiply(pres, verts.at({i - 1, j}), gen(cells.at({i - 1, j}).b.value));
    }
    SectorDiagram d(std::move(base), depth, std::move(cells), std::move(verts));
    d.validate(pres);
    return d;
  }

  /// Builds a diagram from vertex images of the triangle of the given depth.
  static SectorDiagram from_vertices(const TrianglePresentation& pres, int depth,
                                     const std::map<Coord, NormalForm>& verts) {
    if (depth < 1) throw Error(ErrorCode::InvalidDiagram, "depth must be at least 1");
    std::map<Coord, NormalForm> own;
    for (Coord p : triangle_region(depth)) {
      auto it = verts.find(p);
      if (it == verts.end()) throw Error(ErrorCode::InvalidDiagram, "missing vertex");
      own[p] = it->second;
    }
    std::map<Coord, ChamberLabel> cells;
    for (Coord p : triangle_region(depth - 1)) {
      const NormalForm a = relative(pres, own.at(p + kL), own.at(p));
      const NormalForm b = relative(pres, own.at(p), own.at(p + kR));
      if (a.length() != 1 || a.ys.size() != 1 || b.length() != 1 || b.ys.size() != 1)
        throw Error(ErrorCode::InvalidDiagram, "a unit triangle is not a chamber");
      cells[p] = {a.ys[0], b.ys[0]};
    }
    return from_cells(pres, own.at({0, 0}), depth, std::move(cells));
  }

  const NormalForm& base() const noexcept { return base_; }
  int depth() const noexcept { return depth_; }
  const std::map<Coord, ChamberLabel>& cells() const noexcept { return cells_; }
  const std::map<Coord, NormalForm>& vertices() const noexcept { return verts_; }
  ChamberLabel cell(Coord p) const { return cells_.at(p); }
  const NormalForm& vertex(Coord p) const { return verts_.at(p); }
  ChamberLabel base_label() const { return cells_.at({0, 0}); }

  std::vector<ChamberLabel> right_wall() const {
    std::vector<ChamberLabel> out;
    for (int i = 0; i < depth_; ++i) out.push_back(cells_.at({i, 0}));
    return out;
  }
  std::vector<ChamberLabel> left_wall() const {
    std::vector<ChamberLabel> out;
    for (int j = 0; j < depth_; ++j) out.push_back(cells_.at({0, j}));
    return out;
  }

  SectorDiagram truncated(int depth) const {
    if (depth < 1 || depth > depth_) throw Error(ErrorCode::DepthInsufficient, "cannot truncate to a larger depth");
    std::map<Coord, ChamberLabel> cells;
    std::map<Coord, NormalForm> verts;
    for (Coord p : triangle_region(depth - 1)) cells[p] = cells_.at(p);
    for (Coord p : triangle_region(depth)) verts[p] = verts_.at(p);
    return SectorDiagram(base_, depth, std::move(cells), std::move(verts));
  }

  bool operator==(const SectorDiagram& o) const {
    return base_ == o.base_ && depth_ == o.depth_ && cells_ == o.cells_;
  }

 private:
  SectorDiagram(NormalForm base, int depth, std::map<Coord, ChamberLabel> cells, std::map<Coord, NormalForm> verts)
      : base_(std::move(base)), depth_(depth), cells_(std::move(cells)), verts_(std::move(verts)) {}

  void validate(const TrianglePresentation& pres) const {
    LatticeMap m(pres);
    for (const auto& [p, g] : verts_) m.set(p, g);
    if (!m.valid()) throw Error(ErrorCode::InvalidDiagram, "vertex images do not form a sector truncation");
    for (const auto& [p, l] : cells_) {
      if (!is_label(pres, l)) throw Error(ErrorCode::InvalidDiagram, "cell is not a chamber label");
      if (multiply(pres, verts_.at(p + kL), gen(l.a.value)) != verts_.at(p))
        throw Error(ErrorCode::InvalidDiagram, "cell disagrees with its left edge");
    }
    for (const auto& [p, g] : verts_) {
      const Shape s = relative(pres, base_, g).shape();
      if (s.n != static_cast<std::size_t>(p.j) || s.m != static_cast<std::size_t>(p.i))
        throw Error(ErrorCode::InvalidDiagram, "vertex word does not grow geodesically from the base");
    }
  }

  NormalForm base_;
  int depth_;
  std::map<Coord, ChamberLabel> cells_;
  std::map<Coord, NormalForm> verts_;
};

/// The depth-1 diagram based at e with the given base chamber.
inline SectorDiagram base_diagram(const TrianglePresentation& pres, ChamberLabel l) {
  require_label(pres, l);
  return SectorDiagram::from_cells(pres, NormalForm{}, 1, {{Coord{0, 0}, l}});
}

/// All valid one-layer extensions of d, in lexicographic order of the new
/// vertex images.
inline std::vector<SectorDiagram> enumerate_extensions(const TrianglePresentation& pres, const SectorDiagram& d) {
  const int k = d.depth();
  LatticeMap m(pres);
  for (const auto& [p, g] : d.vertices()) m.set(p, g);
  std::vector<Coord> order;
  for (int i = 1; i <= k; ++i) order.push_back({i, k + 1 - i});
  order.push_back({0, k + 1});
  order.push_back({k + 1, 0});
  std::vector<SectorDiagram> out;
  m.enumerate_fill(order, [&](const LatticeMap& full) {
    out.push_back(SectorDiagram::from_vertices(pres, k + 1, full.vertices()));
    return true;
  });
  return out;
}

/// Every diagram of the given depth with base chamber l, visited depth-first.
inline void for_each_diagram(const TrianglePresentation& pres, ChamberLabel l, int depth,
                             const std::function<void(const SectorDiagram&)>& visit) {
  auto rec = [&](auto&& self, const SectorDiagram& d) -> void {
    if (d.depth() == depth) {
      visit(d);
      return;
    }
    for (const SectorDiagram& e : enumerate_extensions(pres, d)) self(self, e);
  };
  rec(rec, base_diagram(pres, l));
}

/// The unique diagram with the given base chamber and walls. right[r] is the
/// cell (r+1, 0) and left[r] the cell (0, r+1).
inline SectorDiagram fill_from_walls(const TrianglePresentation& pres, ChamberLabel base,
                                     const std::vector<ChamberLabel>& right, const std::vector<ChamberLabel>& left) {
  require_label(pres, base);
  if (right.size() != left.size()) throw Error(ErrorCode::PreconditionFailed, "walls must have equal length");
  ChamberLabel prev = base;
  for (ChamberLabel l : right) {
    if (!is_label(pres, l) || !a_plus(pres, prev).contains(l))
      throw Error(ErrorCode::InadmissibleWall, "right wall leaves A+ at " + to_string(l));
    prev = l;
  }
  prev = base;
  for (ChamberLabel l : left) {
    if (!is_label(pres, l) || !a_minus(pres, prev).contains(l))
      throw Error(ErrorCode::InadmissibleWall, "left wall leaves A- at " + to_string(l));
    prev = l;
  }
  const int depth = static_cast<int>(right.size()) + 1;
  LatticeMap m(pres);
  auto put = [&](Coord p, NormalForm g) {
    if (const NormalForm* old = m.find(p); old && *old != g)
      throw Error(ErrorCode::IncompatibleWalls, "the two walls disagree at vertex (1,1)");
    m.set(p, std::move(g));
  };
  put({0, 0}, NormalForm{});
  auto place_cell = [&](Coord p, ChamberLabel l) {
    const NormalForm at = m.at(p);
    put(p + kR, multiply(pres, at, gen(l.b.value)));
    put(p + kL, multiply(pres, at, inv(l.a.value)));
  };
  place_cell({0, 0}, base);
  for (std::size_t r = 0; r < right.size(); ++r) place_cell({static_cast<int>(r) + 1, 0}, right[r]);
  for (std::size_t r = 0; r < left.size(); ++r) place_cell({0, static_cast<int>(r) + 1}, left[r]);
  if (!m.valid()) throw Error(ErrorCode::IncompatibleWalls, "the two walls do not bound a common sector");
  const auto region = triangle_region(depth);
  m.forced_fill(region);
  for (Coord p : region)
    if (!m.known(p)) throw Error(ErrorCode::FillContradiction, "interior vertex not determined by the walls");
  try {
    return SectorDiagram::from_vertices(pres, depth, m.vertices());
  } catch (const Error& e) {
    throw Error(ErrorCode::FillContradiction, std::string("filled interior is invalid: ") + e.what());
  }
}

/// Whether v is a vertex of the truncation.
inline bool cylinder_contains(const TrianglePresentation& pres, const SectorDiagram& d, const NormalForm& v) {
  if (relative(pres, d.base(), v).length() > static_cast<std::size_t>(d.depth()))
    throw Error(ErrorCode::DepthInsufficient, "vertex lies beyond the truncation depth");
  for (const auto& [p, g] : d.vertices())
    if (g == v) return true;
  return false;
}

namespace detail {

// Tries to read the sector based at new_base that is parallel to the sector
// with vertex images `verts` (a triangle of depth `depth`), using the
// sub-sector at `offset`.
inline std::optional<SectorDiagram> rebase_at(const TrianglePresentation& pres, const std::map<Coord, NormalForm>& verts,
                                              int depth, const NormalForm& new_base, Coord offset) {
  const int sub_depth = depth - offset.i - offset.j;
  if (sub_depth < 1) return std::nullopt;
  const NormalForm rel0 = relative(pres, new_base, verts.at(offset));
  const Shape s0 = rel0.shape();
  LatticeMap m(pres);
  m.set({0, 0}, new_base);
  auto put = [&](Coord p, const NormalForm& g) {
    if (const NormalForm* old = m.find(p)) return *old == g;
    m.set(p, g);
    return true;
  };
  int top = 0;
  for (Coord q : triangle_region(sub_depth)) {
    const NormalForm& g = verts.at(offset + q);
    const NormalForm rel = relative(pres, new_base, g);
    const Shape s = rel.shape();
    if (s.n != s0.n + static_cast<std::size_t>(q.j) || s.m != s0.m + static_cast<std::size_t>(q.i)) return std::nullopt;
    // Prefixes of a normal form are normal forms, so over e they need no
    // multiplication.
    const bool at_e = new_base.is_identity();
    NormalForm walk = new_base;
    int col = 0;
    int row = 0;
    for (PointId x : rel.xs) {
      if (at_e) walk.xs.push_back(x);
      else walk = multiply(pres, std::move(walk), inv(x.value));
      if (!put({col, ++row}, walk)) return std::nullopt;
    }
    for (PointId y : rel.ys) {
      if (at_e) walk.ys.push_back(y);
      else walk = multiply(pres, std::move(walk), gen(y.value));
      if (!put({++col, row}, walk)) return std::nullopt;
    }
    top = std::max(top, col + row);
  }
  const auto region = triangle_region(top);
  try {
    m.forced_fill(region);
  } catch (const Error&) {
    return std::nullopt;
  }
  int complete = 0;
  for (int level = 1; level <= top; ++level) {
    bool full = true;
    for (int i = 0; i <= level && full; ++i) full = m.known({i, level - i});
    if (!full) break;
    complete = level;
  }
  if (complete < 1) return std::nullopt;
  try {
    return SectorDiagram::from_vertices(pres, complete, m.vertices());
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// The largest truncation, based at new_base, of the sector parallel to the
/// one with vertex images `verts`. Sub-sectors at offsets up to (s, s) are
/// tried with s = |base^-1 new_base|, nearest first.
inline SectorDiagram rebase(const TrianglePresentation& pres, const std::map<Coord, NormalForm>& verts, int depth,
                            const NormalForm& new_base) {
  const int s = static_cast<int>(relative(pres, verts.at({0, 0}), new_base).length());
  std::vector<Coord> offsets;
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s; ++j) offsets.push_back({i, j});
  std::stable_sort(offsets.begin(), offsets.end(), [](Coord a, Coord b) { return a.i + a.j < b.i + b.j; });
  for (Coord o : offsets)
    if (auto d = detail::rebase_at(pres, verts, depth, new_base, o)) return *d;
  throw Error(ErrorCode::DepthInsufficient, "no common sub-sector found inside the truncation");
}

/// g applied to the boundary point of d, read off as a diagram based at e.
/// The result is the largest truncation the translated data determines.
inline SectorDiagram translate(const TrianglePresentation& pres, const NormalForm& g, const SectorDiagram& d) {
  if (static_cast<std::size_t>(d.depth()) < g.length() + 2)
    throw Error(ErrorCode::DepthInsufficient, "translation needs depth at least |g| + 2");
  std::map<Coord, NormalForm> moved;
  for (const auto& [p, v] : d.vertices()) moved[p] = multiply(pres, g, v);
  return rebase(pres, moved, d.depth(), NormalForm{});
}

namespace detail {

inline bool points_away(const TrianglePresentation& pres, const NormalForm& k, ChamberLabel source) {
  return multiply(pres, k, gen(source.b.value)).length() == k.length() + 1 &&
         multiply(pres, k, inv(source.a.value)).length() == k.length() + 1;
}

}  // namespace detail

/// k = v a_z, with z the least point such that every sector based at k with
/// base chamber `source` passes through v: b is not on lambda(z), z is not on
/// lambda(y_m) (or z != x_n when m = 0), and k b, k a^-1 both have length
/// |v| + 2. When no single z qualifies, k = v a_z1 ... a_zr for the least
/// generator word with |k| = |v| + r and the same two length conditions.
inline NormalForm minimality_witness(const TrianglePresentation& pres, const NormalForm& v, ChamberLabel source,
                                     std::size_t max_extra = 4) {
  require_label(pres, source);
  const auto n = static_cast<std::uint32_t>(pres.num_points());
  for (std::uint32_t z = 0; z < n; ++z) {
    const PointId pz{z};
    if (pres.on_lambda(pz, source.b)) continue;
    if (!v.ys.empty() && pres.on_lambda(v.ys.back(), pz)) continue;
    if (v.ys.empty() && !v.xs.empty() && v.xs.back() == pz) continue;
    NormalForm k = multiply(pres, v, gen(z));
    if (k.length() == v.length() + 1 && detail::points_away(pres, k, source)) return k;
  }
  std::vector<NormalForm> layer{v};
  for (std::size_t r = 1; r <= max_extra; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : layer)
      for (std::uint32_t z = 0; z < n; ++z) {
        NormalForm k = multiply(pres, g, gen(z));
        if (k.length() != g.length() + 1) continue;
        if (r > 1 && detail::points_away(pres, k, source)) return k;
        next.push_back(std::move(k));
      }
    layer = std::move(next);
  }
  throw Error(ErrorCode::PreconditionFailed, "no witness found within the search length");
}

/// Checks that translating each diagram of the given depth (default |k|+2)
/// with base chamber `source` by k yields a diagram through v. At most
/// `limit` diagrams are checked, in enumeration order.
inline bool validate_witness(const TrianglePresentation& pres, const NormalForm& v, ChamberLabel source,
                             const NormalForm& k, int depth = 0, std::size_t limit = SIZE_MAX) {
  if (depth == 0) depth = static_cast<int>(k.length()) + 2;
  bool ok = true;
  std::size_t seen = 0;
  auto rec = [&](auto&& self, const SectorDiagram& d) -> void {
    if (!ok || seen >= limit) return;
    if (d.depth() == depth) {
      ++seen;
      std::map<Coord, NormalForm> moved;
      for (const auto& [p, g] : d.vertices()) moved[p] = multiply(pres, k, g);
      const SectorDiagram t = rebase(pres, moved, d.depth(), NormalForm{});
      if (v.length() > static_cast<std::size_t>(t.depth()) || !cylinder_contains(pres, t, v)) ok = false;
      return;
    }
    for (const SectorDiagram& e : enumerate_extensions(pres, d)) self(self, e);
  };
  rec(rec, base_diagram(pres, source));
  return ok;
}

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d) {
    const long long g = std::gcd(n, d);
    return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
  friend auto operator<=>(const Rational& a, const Rational& b) { return a.num * b.den <=> b.num * a.den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Lower bound for the overlap at level i for a translation of length len:
/// the triangle of side i - 3 len survives the move.
inline Rational overlap_lower_bound(int i, std::size_t len) {
  const long long lo = std::max(0LL, i - 3 * static_cast<long long>(len));
  return Rational::make(lo * (lo + 1), static_cast<long long>(i) * (i + 1));
}

/// The overlap sum_t f_i(t, w) f_i(s^-1 t, s^-1 w) for the boundary point w
/// represented by omega (based at e).
inline Rational amenability_overlap(const TrianglePresentation& pres, const SectorDiagram& omega, const NormalForm& s,
                                    int i) {
  if (i < 1) throw Error(ErrorCode::PreconditionFailed, "i must be positive");
  if (!omega.base().is_identity()) throw Error(ErrorCode::PreconditionFailed, "omega must be based at e");
  if (static_cast<std::size_t>(omega.depth()) < static_cast<std::size_t>(i) + s.length() + 2)
    throw Error(ErrorCode::DepthInsufficient, "omega is too shallow for this i and s");
  const SectorDiagram other = rebase(pres, omega.vertices(), omega.depth(), s);
  if (other.depth() < i - 1) throw Error(ErrorCode::DepthInsufficient, "rebased sector is too shallow");
  std::set<NormalForm> near_s;
  for (Coord p : triangle_region(i - 1)) near_s.insert(other.vertex(p));
  long long common = 0;
  for (Coord p : triangle_region(i - 1)) common += near_s.contains(omega.vertex(p)) ? 1 : 0;
  return Rational::make(common, static_cast<long long>(i) * (i + 1) / 2);
}

}  // namespace tribuild
