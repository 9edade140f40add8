#pragma once

// Maps from the triangular lattice of an apartment into the building.
//
// Coordinates (i, j) mean i steps along R and j steps along L, where a step
// along R multiplies by a generator and a step along L by an inverse
// generator. Steps along R, -L and L-R are generators; steps along -R, L and
// R-L are inverse generators. Every unit triangle of a valid map is a chamber,
// and vertices at lattice distance <= 2 have distinct images.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "tribuild/group_words.hpp"

namespace tribuild {

struct Coord {
  int i = 0;
  int j = 0;
  constexpr auto operator<=>(const Coord&) const = default;
  constexpr Coord operator+(Coord o) const { return {i + o.i, j + o.j}; }
  constexpr Coord operator-(Coord o) const { return {i - o.i, j - o.j}; }
  constexpr Coord operator-() const { return {-i, -j}; }
  constexpr Coord operator*(int k) const { return {i * k, j * k}; }
};

inline constexpr Coord kR{1, 0};
inline constexpr Coord kL{0, 1};

/// The six unit steps, in counter-clockwise order starting from R.
inline constexpr std::array<Coord, 6> kSteps{Coord{1, 0}, Coord{1, -1}, Coord{0, -1},
                                             Coord{-1, 0}, Coord{-1, 1}, Coord{0, 1}};

/// True if moving along `step` multiplies by an inverse generator.
constexpr bool step_is_inverse(Coord step) {
  return step == Coord{-1, 0} || step == Coord{0, 1} || step == Coord{1, -1};
}

constexpr int hex_distance(Coord a, Coord b) {
  const int di = a.i - b.i;
  const int dj = a.j - b.j;
  if ((di >= 0) == (dj >= 0)) return std::abs(di) + std::abs(dj);
  return std::max(std::abs(di), std::abs(dj));
}

constexpr bool lattice_adjacent(Coord a, Coord b) { return hex_distance(a, b) == 1; }

/// A partial map from lattice points to group elements.
class LatticeMap {
 public:
  explicit LatticeMap(const TrianglePresentation& pres) : pres_(&pres) {}

  const TrianglePresentation& presentation() const { return *pres_; }
  const std::map<Coord, NormalForm>& vertices() const noexcept { return verts_; }
  std::size_t size() const noexcept { return verts_.size(); }

  bool known(Coord p) const { return verts_.contains(p); }
  const NormalForm& at(Coord p) const { return verts_.at(p); }
  const NormalForm* find(Coord p) const {
    auto it = verts_.find(p);
    return it == verts_.end() ? nullptr : &it->second;
  }

  void set(Coord p, NormalForm g) { verts_[p] = std::move(g); }
  void erase(Coord p) { verts_.erase(p); }

  /// The letter a with image(from) * a = image(to), if the two images are
  /// adjacent in the way the lattice step requires.
  std::optional<Letter> step_letter(Coord from, const NormalForm& gfrom, Coord to,
                                    const NormalForm& gto) const {
    NormalForm rel = relative(*pres_, gfrom, gto);
    if (rel.length() != 1) return std::nullopt;
    const bool inv_step = step_is_inverse(to - from);
    if (inv_step != !rel.xs.empty()) return std::nullopt;
    return Letter{inv_step ? rel.xs[0] : rel.ys[0], inv_step};
  }

  /// Whether g is an admissible image for the unknown point p given all known
  /// neighbours and all known points within lattice distance 2.
  bool admissible(Coord p, const NormalForm& g) const {
    for (Coord s : kSteps) {
      if (const NormalForm* w = find(p + s)) {
        if (!step_letter(p + s, *w, p, g)) return false;
      }
    }
    for (int di = -2; di <= 2; ++di) {
      for (int dj = -2; dj <= 2; ++dj) {
        const Coord x = p + Coord{di, dj};
        if (x == p || hex_distance(x, p) > 2) continue;
        if (const NormalForm* w = find(x); w && *w == g) return false;
      }
    }
    return true;
  }

  /// All admissible images for the unknown point p; requires a known
  /// neighbour. Ordered by letter index.
  std::vector<NormalForm> candidates(Coord p) const {
    std::vector<NormalForm> out;
    for (Coord s : kSteps) {
      const NormalForm* w = find(p - s);
      if (!w) continue;
      const bool inv_step = step_is_inverse(s);
      for (std::uint32_t x = 0; x < pres_->num_points(); ++x) {
        NormalForm g = multiply(*pres_, *w, Letter{PointId{x}, inv_step});
        if (admissible(p, g)) out.push_back(std::move(g));
      }
      return out;
    }
    throw Error(ErrorCode::PreconditionFailed, "no known neighbour to extend from");
  }

  /// Unknown p is forced when some known neighbour v has both common
  /// neighbours of p and v known: p is then the unique point or line of the
  /// residue of v incident with both. Returns the index k of such a v =
  /// p + kSteps[k].
  std::optional<std::size_t> forcing_neighbour(Coord p) const {
    for (std::size_t k = 0; k < 6; ++k) {
      if (!known(p + kSteps[k])) continue;
      if (known(p + kSteps[(k + 1) % 6]) && known(p + kSteps[(k + 5) % 6])) return k;
    }
    return std::nullopt;
  }

  bool is_forced(Coord p) const { return forcing_neighbour(p).has_value(); }

  /// Repeatedly fills forced points of `region`. Returns the number filled.
  /// Throws FillContradiction if a forced point has no admissible image or
  /// more than one.
  std::size_t forced_fill(const std::vector<Coord>& region) {
    std::size_t filled = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (Coord p : region) {
        if (known(p)) continue;
        const auto k = forcing_neighbour(p);
        if (!k) continue;
        const Coord v = p + kSteps[*k];
        const Coord u1 = p + kSteps[(*k + 1) % 6];
        const Coord u2 = p + kSteps[(*k + 5) % 6];
        const bool inv_step = step_is_inverse(p - v);
        std::vector<NormalForm> cands;
        for (std::uint32_t x = 0; x < pres_->num_points(); ++x) {
          NormalForm g = multiply(*pres_, at(v), Letter{PointId{x}, inv_step});
          if (step_letter(u1, at(u1), p, g) && step_letter(u2, at(u2), p, g)) cands.push_back(std::move(g));
        }
        if (cands.size() != 1 || !admissible(p, cands.front())) {
          throw Error(ErrorCode::FillContradiction,
                      "forced vertex (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") has " +
                          std::to_string(cands.size()) + " candidate images");
        }
        set(p, std::move(cands.front()));
        ++filled;
        progress = true;
      }
    }
    return filled;
  }

  /// Visits every completion of `order` (points filled in that sequence).
  /// The visitor returns false to stop the search.
  void enumerate_fill(const std::vector<Coord>& order, const std::function<bool(const LatticeMap&)>& visit) {
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (stop) return;
      if (idx == order.size()) {
        if (!visit(*this)) stop = true;
        return;
      }
      const Coord p = order[idx];
      for (NormalForm& g : candidates(p)) {
        set(p, std::move(g));
        self(self, idx + 1);
        erase(p);
        if (stop) return;
      }
    };
    rec(rec, 0);
  }

  /// Fills `region` with seeded random choices and backtracking. The next
  /// point is always the unknown one with the most known neighbours (ties by
  /// coordinate order). Throws BacktrackExhausted if no completion is found
  /// within `budget` nodes.
  template <class Rng>
  void random_fill(const std::vector<Coord>& region, Rng& rng, std::size_t budget = 200000) {
    std::size_t nodes = 0;
    auto pick = [&]() -> std::optional<Coord> {
      std::optional<Coord> best;
      int best_known = 0;
      for (Coord p : region) {
        if (known(p)) continue;
        int k = 0;
        for (Coord s : kSteps) k += known(p + s) ? 1 : 0;
        if (k > best_known) {
          best_known = k;
          best = p;
        }
      }
      return best;
    };
    auto rec = [&](auto&& self) -> bool {
      auto next = pick();
      if (!next) {
        for (Coord p : region)
          if (!known(p)) throw Error(ErrorCode::BacktrackExhausted, "region is not connected to known points");
        return true;
      }
      if (++nodes > budget) throw Error(ErrorCode::BacktrackExhausted, "random fill exceeded its node budget");
      auto cands = candidates(*next);
      std::shuffle(cands.begin(), cands.end(), rng);
      for (NormalForm& g : cands) {
        set(*next, std::move(g));
        if (self(self)) return true;
        erase(*next);
      }
      return false;
    };
    if (!rec(rec)) throw Error(ErrorCode::BacktrackExhausted, "no completion of the region exists");
  }

  /// Checks every lattice edge and the distance-2 injectivity condition over
  /// all known points. Each edge and each pair is examined once.
  bool valid() const {
    for (const auto& [p, g] : verts_) {
      for (Coord s : {kSteps[0], kSteps[1], kSteps[5]}) {
        if (const NormalForm* w = find(p + s); w && !step_letter(p, g, p + s, *w)) return false;
      }
      for (int di = 0; di <= 2; ++di)
        for (int dj = -2; dj <= 2; ++dj) {
          const Coord x = p + Coord{di, dj};
          if (!(p < x) || hex_distance(x, p) > 2) continue;
          if (const NormalForm* w = find(x); w && *w == g) return false;
        }
    }
    return true;
  }

 private:
  const TrianglePresentation* pres_;
  std::map<Coord, NormalForm> verts_;
};

/// Lattice points (i, j) with i, j >= 0 and i + j <= depth, by level.
inline std::vector<Coord> triangle_region(int depth) {
  std::vector<Coord> out;
  for (int level = 0; level <= depth; ++level)
    for (int i = 0; i <= level; ++i) out.push_back({i, level - i});
  return out;
}

/// Lattice points within hex distance `radius` of `center`, by distance.
inline std::vector<Coord> hexagon_region(Coord center, int radius) {
  std::vector<Coord> out;
  for (int di = -radius; di <= radius; ++di)
    for (int dj = -radius; dj <= radius; ++dj) {
      const Coord p = center + Coord{di, dj};
      if (hex_distance(p, center) <= radius) out.push_back(p);
    }
  std::stable_sort(out.begin(), out.end(),
                   [&](Coord a, Coord b) { return hex_distance(a, center) < hex_distance(b, center); });
  return out;
}

}  // namespace tribuild
