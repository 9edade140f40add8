#pragma once

// Local structure of the building: chambers through a vertex, the residue
// plane of a vertex, hexagons, galleries and their types.

#include <array>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tribuild/group_words.hpp"

namespace tribuild {

/// The chamber {g, g a_x^-1, g a_y}. The base g is always the type-0 vertex,
/// which makes the representation unique for a given vertex set.
struct Chamber {
  NormalForm base;
  PointId left;
  PointId right;

  auto operator<=>(const Chamber&) const = default;

  std::array<NormalForm, 3> vertices(const TrianglePresentation& pres) const {
    return {base, multiply(pres, base, inv(left.value)), multiply(pres, base, gen(right.value))};
  }
};

/// Rebuilds the canonical chamber on three vertices; throws InvalidGallery if
/// they do not span a chamber.
inline Chamber chamber_from_vertices(const TrianglePresentation& pres, const std::array<NormalForm, 3>& vs) {
  std::array<const NormalForm*, 3> by_type{nullptr, nullptr, nullptr};
  for (const auto& v : vs) by_type[vertex_type(v)] = &v;
  if (!by_type[0] || !by_type[1] || !by_type[2]) throw Error(ErrorCode::InvalidGallery, "vertices do not have three types");
  const NormalForm l = relative(pres, *by_type[0], *by_type[2]);
  const NormalForm r = relative(pres, *by_type[0], *by_type[1]);
  if (l.length() != 1 || r.length() != 1 || l.xs.size() != 1 || r.ys.size() != 1 ||
      !pres.on_lambda(l.xs[0], r.ys[0]))
    throw Error(ErrorCode::InvalidGallery, "vertices do not span a chamber");
  return {*by_type[0], l.xs[0], r.ys[0]};
}

inline std::set<NormalForm> vertex_set(const TrianglePresentation& pres, const Chamber& c) {
  auto vs = c.vertices(pres);
  return {vs.begin(), vs.end()};
}

/// All chambers containing g, with g in each of the three roles, deduplicated.
inline std::vector<Chamber> chambers_at(const TrianglePresentation& pres, const NormalForm& g) {
  std::set<Chamber> out;
  const auto n = static_cast<std::uint32_t>(pres.num_points());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!pres.on_lambda(PointId{x}, PointId{y})) continue;
      const NormalForm as_left = multiply(pres, g, gen(x));
      const NormalForm as_right = multiply(pres, g, inv(y));
      for (const NormalForm& h : {g, as_left, as_right}) {
        out.insert(chamber_from_vertices(pres, {h, multiply(pres, h, inv(x)), multiply(pres, h, gen(y))}));
      }
    }
  }
  return {out.begin(), out.end()};
}

/// Neighbours of a vertex: indices 0..n-1 are the points g a_x, indices
/// n..2n-1 are the lines g a_x^-1.
struct ResidueGraph {
  NormalForm center;
  std::size_t num_points = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (line index, point index)
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t num_vertices() const { return 2 * num_points; }
  bool is_point(std::size_t v) const { return v < num_points; }
  std::string label(std::size_t v) const {
    return is_point(v) ? std::to_string(v) : std::to_string(v - num_points) + "^-1";
  }
  NormalForm element(const TrianglePresentation& pres, std::size_t v) const {
    return is_point(v) ? multiply(pres, center, gen(static_cast<std::uint32_t>(v)))
                       : multiply(pres, center, inv(static_cast<std::uint32_t>(v - num_points)));
  }
};

inline ResidueGraph residue_graph(const TrianglePresentation& pres, const NormalForm& g) {
  ResidueGraph res;
  res.center = g;
  res.num_points = pres.num_points();
  res.adjacency.resize(res.num_vertices());
  for (std::uint32_t x = 0; x < res.num_points; ++x)
    for (std::uint32_t y = 0; y < res.num_points; ++y) {
      if (!pres.third(PointId{x}, PointId{y})) continue;
      const std::size_t line = res.num_points + x;
      res.edges.emplace_back(line, y);
      res.adjacency[line].push_back(y);
      res.adjacency[y].push_back(line);
    }
  for (auto& a : res.adjacency) std::sort(a.begin(), a.end());
  return res;
}

using Hexagon = std::array<std::size_t, 6>;

/// All 6-cycles of the residue graph, each listed once starting from its
/// smallest vertex.
inline std::vector<Hexagon> hexagons(const ResidueGraph& res) {
  std::vector<Hexagon> out;
  Hexagon path{};
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    const std::size_t cur = path[depth - 1];
    if (depth == 6) {
      if (path[1] < path[5] &&
          std::binary_search(res.adjacency[cur].begin(), res.adjacency[cur].end(), path[0]))
        out.push_back(path);
      return;
    }
    for (std::size_t nb : res.adjacency[cur]) {
      if (nb <= path[0]) continue;
      if (std::find(path.begin(), path.begin() + static_cast<long>(depth), nb) != path.begin() + static_cast<long>(depth))
        continue;
      path[depth] = nb;
      self(self, depth + 1);
    }
  };
  for (std::size_t s = 0; s < res.num_vertices(); ++s) {
    path[0] = s;
    rec(rec, 1);
  }
  return out;
}

inline std::size_t hexagon_count(const ResidueGraph& res) { return hexagons(res).size(); }

inline std::string to_dot(const ResidueGraph& res) {
  std::ostringstream os;
  os << "graph residue {\n";
  for (std::size_t v = 0; v < res.num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << res.label(v) << "\"" << (res.is_point(v) ? "" : ", shape=box") << "];\n";
  for (auto [l, p] : res.edges) os << "  v" << l << " -- v" << p << ";\n";
  os << "}\n";
  return os.str();
}

struct Gallery {
  std::vector<Chamber> chambers;
};

/// Type label of each step: the common type of the two vertices not shared
/// by consecutive chambers.
inline std::vector<unsigned> gallery_type(const TrianglePresentation& pres, const Gallery& gal) {
  std::vector<unsigned> out;
  for (std::size_t k = 1; k < gal.chambers.size(); ++k) {
    const auto a = vertex_set(pres, gal.chambers[k - 1]);
    const auto b = vertex_set(pres, gal.chambers[k]);
    std::vector<NormalForm> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    if (only_a.size() != 1 || only_b.size() != 1)
      throw Error(ErrorCode::InvalidGallery, "consecutive chambers do not share exactly an edge");
    out.push_back(vertex_type(only_a[0]));
  }
  return out;
}

/// The chambers whose vertices all lie within `radius` of `center`, with
/// their adjacency.
class ChamberGraph {
 public:
  ChamberGraph(const TrianglePresentation& pres, NormalForm center, std::size_t radius)
      : pres_(&pres), center_(std::move(center)), radius_(radius) {
    std::queue<std::size_t> todo;
    for (const Chamber& c : chambers_at(pres, center_)) todo.push(intern(c));
    while (!todo.empty()) {
      const std::size_t idx = todo.front();
      todo.pop();
      for (const Chamber& nb : compute_neighbours(chambers_[idx])) {
        const bool fresh = !index_.contains(nb);
        const std::size_t j = intern(nb);
        adjacency_[idx].push_back(j);
        if (fresh) todo.push(j);
      }
    }
    for (auto& a : adjacency_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  std::size_t size() const { return chambers_.size(); }
  const Chamber& chamber(std::size_t i) const { return chambers_.at(i); }
  const std::vector<std::size_t>& neighbours(std::size_t i) const { return adjacency_.at(i); }

  bool in_ball(const NormalForm& v) const { return relative(*pres_, center_, v).length() <= radius_; }

  std::size_t index_of(const Chamber& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw Error(ErrorCode::ChamberOutsideBall, "chamber is not inside the materialized ball");
    return it->second;
  }

  /// Least number of steps from `from` to a chamber containing every vertex of
  /// `target`.
  std::size_t distance_to_simplex(const Chamber& from, const std::set<NormalForm>& target) const {
    const std::size_t start = index_of(from);
    std::vector<std::size_t> dist(size(), SIZE_MAX);
    std::queue<std::size_t> todo;
    dist[start] = 0;
    todo.push(start);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      const auto vs = vertex_set(*pres_, chambers_[i]);
      if (std::includes(vs.begin(), vs.end(), target.begin(), target.end())) return dist[i];
      for (std::size_t j : adjacency_[i])
        if (dist[j] == SIZE_MAX) {
          dist[j] = dist[i] + 1;
          todo.push(j);
        }
    }
    throw Error(ErrorCode::ChamberOutsideBall, "target simplex is not reachable inside the ball");
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "graph chambers {\n";
    for (std::size_t i = 0; i < size(); ++i) {
      const Chamber& c = chambers_[i];
      os << "  c" << i << " [label=\"" << tribuild::to_string(c.base) << " | " << c.left.value << "^-1 " << c.right.value
         << "\"];\n";
    }
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j : adjacency_[i])
        if (i < j) os << "  c" << i << " -- c" << j << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::size_t intern(const Chamber& c) {
    auto [it, fresh] = index_.emplace(c, chambers_.size());
    if (fresh) {
      chambers_.push_back(c);
      adjacency_.emplace_back();
    }
    return it->second;
  }

  // Chambers inside the ball sharing an edge with c.
  std::vector<Chamber> compute_neighbours(const Chamber& c) const {
    const auto vs = c.vertices(*pres_);
    std::vector<Chamber> out;
    for (std::size_t drop = 0; drop < 3; ++drop) {
      const NormalForm& u = vs[(drop + 1) % 3];
      const NormalForm& w = vs[(drop + 2) % 3];
      const bool inv_step = (vertex_type(vs[drop]) + 3 - vertex_type(u)) % 3 == 2;
      for (std::uint32_t x = 0; x < pres_->num_points(); ++x) {
        NormalForm t = multiply(*pres_, u, Letter{PointId{x}, inv_step});
        if (t == vs[drop] || !in_ball(t)) continue;
        if (relative(*pres_, w, t).length() != 1) continue;
        out.push_back(chamber_from_vertices(*pres_, {u, w, t}));
      }
    }
    return out;
  }

  const TrianglePresentation* pres_;
  NormalForm center_;
  std::size_t radius_;
  std::vector<Chamber> chambers_;
  std::map<Chamber, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// A gallery is stretched when its length equals the chamber distance from
/// its first chamber to `target` (by default the vertex set of its last
/// chamber).
inline bool is_stretched(const TrianglePresentation& pres, const Gallery& gal, const ChamberGraph& graph,
                         std::optional<std::set<NormalForm>> target = std::nullopt) {
  if (gal.chambers.empty()) throw Error(ErrorCode::InvalidGallery, "empty gallery");
  gallery_type(pres, gal);
  for (const Chamber& c : gal.chambers)
    for (const auto& v : c.vertices(pres))
      if (!graph.in_ball(v)) throw Error(ErrorCode::ChamberOutsideBall, "gallery leaves the materialized ball");
  const auto tgt = target ? *target : vertex_set(pres, gal.chambers.back());
  return graph.distance_to_simplex(gal.chambers.front(), tgt) == gal.chambers.size() - 1;
}

}  // namespace tribuild
