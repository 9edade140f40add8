#pragma once

// Finite hexagonal patches of apartments, and the construction of an
// apartment all of whose six boundary points lie in a given cylinder set.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "tribuild/building_local.hpp"
#include "tribuild/sector_geometry.hpp"

namespace tribuild {

struct ApartmentPatch {
  Coord center;
  int radius = 0;
  std::map<Coord, NormalForm> vertices;

  bool contains(Coord p) const { return hex_distance(p, center) <= radius; }

  /// Unit triangles of the patch: up triangles {P, P+R, P+L} and down
  /// triangles {P, P+R, P+R-L}.
  std::vector<std::array<Coord, 3>> unit_triangles() const {
    std::vector<std::array<Coord, 3>> out;
    for (const auto& [p, g] : vertices) {
      if (contains(p + kR) && contains(p + kL)) out.push_back({p, p + kR, p + kL});
      if (contains(p + kR) && contains(p + kR - kL)) out.push_back({p, p + kR, p + kR - kL});
    }
    return out;
  }

  std::vector<Chamber> chambers(const TrianglePresentation& pres) const {
    std::vector<Chamber> out;
    for (const auto& t : unit_triangles())
      out.push_back(chamber_from_vertices(pres, {vertices.at(t[0]), vertices.at(t[1]), vertices.at(t[2])}));
    return out;
  }

  bool valid(const TrianglePresentation& pres) const {
    for (Coord p : hexagon_region(center, radius))
      if (!vertices.contains(p)) return false;
    LatticeMap m(pres);
    for (const auto& [p, g] : vertices) m.set(p, g);
    if (!m.valid()) return false;
    try {
      chambers(pres);
    } catch (const Error&) {
      return false;
    }
    return true;
  }

  /// The truncation of the sector with the given apex spanned by a generator
  /// step dr and an inverse step dl, as deep as the patch allows.
  SectorDiagram sector(const TrianglePresentation& pres, Coord apex, Coord dr, Coord dl) const {
    if (step_is_inverse(dr) || !step_is_inverse(dl) || !lattice_adjacent(dr, dl))
      throw Error(ErrorCode::PreconditionFailed, "sector must be spanned by adjacent generator and inverse steps");
    int depth = 0;
    while (true) {
      bool inside = true;
      for (int i = 0; i <= depth + 1 && inside; ++i) inside = contains(apex + dr * i + dl * (depth + 1 - i));
      if (!inside) break;
      ++depth;
    }
    std::map<Coord, NormalForm> verts;
    for (Coord q : triangle_region(depth)) verts[q] = vertices.at(apex + dr * q.i + dl * q.j);
    return SectorDiagram::from_vertices(pres, depth, verts);
  }
};

/// Expands a partial apartment map to a full patch of the given radius.
template <class Rng>
ApartmentPatch expand_patch(LatticeMap map, Coord center, int radius, Rng& rng, std::size_t budget = 200000) {
  map.random_fill(hexagon_region(center, radius), rng, budget);
  ApartmentPatch patch{center, radius, {}};
  for (Coord p : hexagon_region(center, radius)) patch.vertices[p] = map.at(p);
  return patch;
}

/// Places the hexagon of the residue of `res.center` around the origin and
/// expands it to a patch. Points go to R, -L, L-R and lines to R-L, -R, L.
template <class Rng>
ApartmentPatch expand_hexagon(const TrianglePresentation& pres, const ResidueGraph& res, const Hexagon& hex,
                              int radius, Rng& rng) {
  std::size_t start = res.is_point(hex[0]) ? 0 : 1;
  LatticeMap m(pres);
  m.set({0, 0}, res.center);
  for (std::size_t k = 0; k < 6; ++k) m.set(kSteps[k], res.element(pres, hex[(start + k) % 6]));
  if (!m.valid()) throw Error(ErrorCode::PreconditionFailed, "hexagon does not embed around its center");
  return expand_patch(std::move(m), {0, 0}, radius, rng);
}

struct ApartmentGrowth {
  SectorDiagram t_cylinder;           // the triangle T, based at e
  NormalForm v1;                      // tip of T'
  bool b_lie_as_a = false;            // which of the two cases occurred
  ApartmentPatch patch;               // centered at v1
  std::vector<SectorDiagram> boundary;  // the six sectors, read off at e
  bool all_contain_t = false;
  std::size_t backtracks = 0;
};

namespace detail {

inline Coord retract(const NormalForm& g) {
  const Shape s = g.shape();
  return {static_cast<int>(s.m), static_cast<int>(s.n)};
}

template <class T, class Rng>
std::vector<T> shuffled(std::vector<T> v, Rng& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace detail

/// Builds an apartment whose six boundary points all have T among their
/// sectors at e, where T is a random triangle of depth t_depth. The patch is
/// centered at the tip v1 of the diamond T'.
inline ApartmentGrowth grow_apartment(const TrianglePresentation& pres, int t_depth, std::uint64_t seed,
                                      int radius = 0) {
  if (t_depth < 1) throw Error(ErrorCode::PreconditionFailed, "t_depth must be at least 1");
  if (radius == 0) radius = 4 * (t_depth + 1) + t_depth + 4;
  if (radius < t_depth + 2) throw Error(ErrorCode::PreconditionFailed, "radius must be at least t_depth + 2");
  std::mt19937_64 rng(seed);
  const auto letters = alphabet(pres);
  SectorDiagram diamond = base_diagram(pres, letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)]);
  while (diamond.depth() < 2 * (t_depth + 1)) {
    auto ext = enumerate_extensions(pres, diamond);
    diamond = ext[std::uniform_int_distribution<std::size_t>(0, ext.size() - 1)(rng)];
  }
  ApartmentGrowth out{diamond.truncated(t_depth), diamond.vertex({t_depth + 1, t_depth + 1}), false, {}, {}, false, 0};
  const NormalForm& v1 = out.v1;
  const Coord tip{t_depth + 1, t_depth + 1};
  const auto n = static_cast<std::uint32_t>(pres.num_points());
  auto line_at = [&](std::uint32_t x) { return multiply(pres, v1, inv(x)); };
  auto point_at = [&](std::uint32_t y) { return multiply(pres, v1, gen(y)); };
  auto lies_at = [&](const NormalForm& g, Coord where) { return detail::retract(g) == tip + where; };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> a_chambers;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (pres.on_lambda(PointId{x}, PointId{y}) && lies_at(line_at(x), kL) && lies_at(point_at(y), kR))
        a_chambers.emplace_back(x, y);
  auto lines_as_a = [&](std::uint32_t y, std::uint32_t except) {
    std::vector<std::uint32_t> v;
    for (std::uint32_t x = 0; x < n; ++x)
      if (x != except && pres.on_lambda(PointId{x}, PointId{y}) && lies_at(line_at(x), kL)) v.push_back(x);
    return v;
  };
  auto points_as_a = [&](std::uint32_t x, std::uint32_t except) {
    std::vector<std::uint32_t> v;
    for (std::uint32_t y = 0; y < n; ++y)
      if (y != except && pres.on_lambda(PointId{x}, PointId{y}) && lies_at(point_at(y), kR)) v.push_back(y);
    return v;
  };

  auto finish = [&](LatticeMap m, const std::vector<std::array<Coord, 3>>& cones) -> bool {
    try {
      out.patch = expand_patch(std::move(m), {0, 0}, radius, rng);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BacktrackExhausted) throw;
      ++out.backtracks;
      return false;
    }
    out.boundary.clear();
    out.all_contain_t = true;
    for (const auto& [apex, dr, dl] : cones) {
      const SectorDiagram w = out.patch.sector(pres, apex, dr, dl);
      SectorDiagram at_e = rebase(pres, w.vertices(), w.depth(), NormalForm{});
      if (at_e.depth() < t_depth) {
        out.all_contain_t = false;
      } else {
        for (Coord p : triangle_region(t_depth))
          if (at_e.vertex(p) != out.t_cylinder.vertex(p)) out.all_contain_t = false;
      }
      out.boundary.push_back(std::move(at_e));
    }
    return true;
  };

  const Coord kRL = kR - kL;
  for (auto [x1, y1] : detail::shuffled(a_chambers, rng))
    for (auto x2 : detail::shuffled(lines_as_a(y1, x1), rng))
      for (auto y3 : detail::shuffled(points_as_a(x2, y1), rng))
        for (auto x4 : detail::shuffled(lines_as_a(y3, x2), rng)) {
          if (x4 == x1) {
            ++out.backtracks;
            continue;
          }
          const std::uint32_t y5 = pres.plane().meet(pres.lambda()(PointId{x1}), pres.lambda()(PointId{x4})).value;
          LatticeMap m(pres);
          m.set({0, 0}, v1);
          m.set(kR, point_at(y1));
          m.set(kRL, line_at(x2));
          m.set(-kL, point_at(y3));
          m.set(-kR, line_at(x4));
          m.set(-kRL, point_at(y5));
          m.set(kL, line_at(x1));
          if (!m.valid()) {
            ++out.backtracks;
            continue;
          }
          const std::vector<std::array<Coord, 3>> at_v1{
              {Coord{0, 0}, kR, kL}, {Coord{0, 0}, kR, kRL}, {Coord{0, 0}, -kL, kRL}, {Coord{0, 0}, -kL, -kR}};
          if (lies_at(point_at(y5), kR)) {
            out.b_lie_as_a = true;
            auto cones = at_v1;
            cones.push_back({Coord{0, 0}, -kRL, -kR});
            cones.push_back({Coord{0, 0}, -kRL, kL});
            if (finish(std::move(m), cones)) return out;
            continue;
          }
          if (!lies_at(point_at(y5), -kRL))
            throw Error(ErrorCode::PreconditionFailed, "B1 and B2 lie neither as A nor as B");
          out.b_lie_as_a = false;
          const Coord v2 = -kRL;
          for (NormalForm& c1 : detail::shuffled(m.candidates(v2 + kL), rng)) {
            if (!lies_at(c1, -kRL + kL)) throw Error(ErrorCode::PreconditionFailed, "a choice of C1 does not lie as C");
            LatticeMap m1 = m;
            m1.set(v2 + kL, std::move(c1));
            std::vector<NormalForm> c1p;
            for (NormalForm& g : m1.candidates(v2 - kRL))
              if (lies_at(g, kL)) c1p.push_back(std::move(g));
            for (NormalForm& g : detail::shuffled(std::move(c1p), rng)) {
              LatticeMap m2 = m1;
              m2.set(v2 - kRL, std::move(g));
              try {
                m2.forced_fill(hexagon_region(v2, 1));
              } catch (const Error& e) {
                if (e.code() != ErrorCode::FillContradiction) throw;
                ++out.backtracks;
                continue;
              }
              auto cones = at_v1;
              cones.push_back({v2, -kRL, kL});
              cones.push_back({v2, -kRL, -kR});
              if (finish(std::move(m2), cones)) return out;
            }
          }
        }
  throw Error(ErrorCode::BacktrackExhausted, "every choice of hexagon failed");
}

}  // namespace tribuild
