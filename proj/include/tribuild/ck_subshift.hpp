#pragma once

// The boundary subshift: transition matrices over chamber labels and the
// symbolic partial isometries s+ and s- with the products that are known in
// closed form.

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "tribuild/labels.hpp"
#include "tribuild/sector_geometry.hpp"

namespace tribuild {

enum class Direction { Plus, Minus };

inline std::string to_string(Direction d) { return d == Direction::Plus ? "plus" : "minus"; }

struct TransitionMatrix {
  Direction direction = Direction::Plus;
  std::vector<ChamberLabel> labels;
  std::vector<std::vector<int>> entries;

  std::size_t dim() const { return labels.size(); }

  std::size_t index(ChamberLabel l) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw Error(ErrorCode::IndexOutOfRange, "label not in the alphabet");
    return static_cast<std::size_t>(it - labels.begin());
  }
  int at(ChamberLabel from, ChamberLabel to) const { return entries[index(from)][index(to)]; }

  int row_sum(std::size_t i) const { return std::accumulate(entries[i].begin(), entries[i].end(), 0); }
  int col_sum(std::size_t j) const {
    int s = 0;
    for (const auto& row : entries) s += row[j];
    return s;
  }

  /// Whether the digraph with these adjacencies is strongly connected.
  bool strongly_connected() const {
    auto reaches_all = [&](bool forward) {
      std::vector<bool> seen(dim(), false);
      std::queue<std::size_t> todo;
      seen[0] = true;
      todo.push(0);
      std::size_t count = 1;
      while (!todo.empty()) {
        const std::size_t i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < dim(); ++j) {
          const int e = forward ? entries[i][j] : entries[j][i];
          if (e && !seen[j]) {
            seen[j] = true;
            ++count;
            todo.push(j);
          }
        }
      }
      return count == dim();
    };
    return dim() > 0 && reaches_all(true) && reaches_all(false);
  }
};

inline TransitionMatrix transition_matrix(const TrianglePresentation& pres, Direction dir) {
  TransitionMatrix m;
  m.direction = dir;
  m.labels = alphabet(pres);
  m.entries.assign(m.dim(), std::vector<int>(m.dim(), 0));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto row = dir == Direction::Plus ? a_plus(pres, m.labels[i]) : a_minus(pres, m.labels[i]);
    for (ChamberLabel l : row) m.entries[i][m.index(l)] = 1;
  }
  return m;
}

inline std::pair<TransitionMatrix, TransitionMatrix> matrices(const TrianglePresentation& pres) {
  return {transition_matrix(pres, Direction::Plus), transition_matrix(pres, Direction::Minus)};
}

/// The labels of cell (1,0) (plus) or cell (0,1) (minus) over all sector
/// truncations of the given depth with base chamber l.
inline std::set<ChamberLabel> wall_successors(const TrianglePresentation& pres, ChamberLabel l, Direction dir,
                                              int depth = 3) {
  std::set<ChamberLabel> out;
  for_each_diagram(pres, l, depth, [&](const SectorDiagram& d) {
    out.insert(d.cell(dir == Direction::Plus ? Coord{1, 0} : Coord{0, 1}));
  });
  return out;
}

/// Checks that every depth-`depth` truncation with base chamber `next`,
/// translated by b (plus) or a^-1 (minus) where l = (a, b), has base chamber l.
inline bool shift_consistent(const TrianglePresentation& pres, Direction dir, ChamberLabel l, ChamberLabel next,
                             int depth = 3) {
  const auto row = dir == Direction::Plus ? a_plus(pres, l) : a_minus(pres, l);
  if (!is_label(pres, next) || !row.contains(next))
    throw Error(ErrorCode::NotATransition, to_string(next) + " does not follow " + to_string(l));
  const NormalForm g = dir == Direction::Plus ? letter_element(gen(l.b.value)) : letter_element(inv(l.a.value));
  bool ok = true;
  for_each_diagram(pres, next, depth, [&](const SectorDiagram& d) {
    if (ok && translate(pres, g, d).base_label() != l) ok = false;
  });
  return ok;
}

/// word * (sum of the projections in support), or its adjoint when starred.
struct IsometrySymbol {
  NormalForm word;
  std::set<ChamberLabel> support;
  bool starred = false;
  auto operator<=>(const IsometrySymbol&) const = default;
};

inline std::string to_string(const IsometrySymbol& s) {
  std::string out = "(" + to_string(s.word) + ")[";
  bool first = true;
  for (ChamberLabel l : s.support) {
    out += (first ? "" : ",") + to_string(l);
    first = false;
  }
  return out + "]" + (s.starred ? "*" : "");
}

inline IsometrySymbol s_plus(const TrianglePresentation& pres, ChamberLabel l) {
  return {letter_element(gen(l.b.value)), a_plus(pres, l), false};
}
inline IsometrySymbol s_minus(const TrianglePresentation& pres, ChamberLabel l) {
  return {letter_element(inv(l.a.value)), a_minus(pres, l), false};
}

class FormalSum {
 public:
  /// Adds a term, merging it into an existing term with the same word and
  /// star. Merged supports must be disjoint.
  void add(const IsometrySymbol& s) {
    for (IsometrySymbol& t : terms_) {
      if (t.word != s.word || t.starred != s.starred) continue;
      for (ChamberLabel l : s.support)
        if (!t.support.insert(l).second)
          throw Error(ErrorCode::PreconditionFailed, "overlapping supports in a formal sum");
      return;
    }
    terms_.push_back(s);
    std::sort(terms_.begin(), terms_.end());
  }
  const std::vector<IsometrySymbol>& terms() const noexcept { return terms_; }
  bool operator==(const FormalSum&) const = default;

 private:
  std::vector<IsometrySymbol> terms_;
};

/// s+_(a,b) s-_(c,d): zero unless (c,d) follows (a,b) in A+.
inline std::optional<IsometrySymbol> compose_pm(const TrianglePresentation& pres, ChamberLabel plus, ChamberLabel minus) {
  if (!a_plus(pres, plus).contains(minus)) return std::nullopt;
  return IsometrySymbol{reduce(pres, {gen(plus.b.value), inv(minus.a.value)}), a_minus(pres, minus), false};
}

/// s-_(a,b) s+_(g,h): zero unless (g,h) follows (a,b) in A-.
inline std::optional<IsometrySymbol> compose_mp(const TrianglePresentation& pres, ChamberLabel minus, ChamberLabel plus) {
  if (!a_minus(pres, minus).contains(plus)) return std::nullopt;
  return IsometrySymbol{reduce(pres, {inv(minus.a.value), gen(plus.b.value)}), a_plus(pres, plus), false};
}

struct WeakCommutativityReport {
  FormalSum lhs;
  FormalSum rhs;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  bool equal = false;
};

/// Compares the sum over d of s+_(a,b) s-_(c,d) with the sum over g of
/// s-_(a,b) s+_(g,h), where b c^-1 = a^-1 h.
inline WeakCommutativityReport weak_commutativity_check(const TrianglePresentation& pres, PointId a, PointId b,
                                                        PointId c, PointId h) {
  const ChamberLabel ab{a, b};
  require_label(pres, ab);
  if (reduce(pres, {gen(b.value), inv(c.value)}) != reduce(pres, {inv(a.value), gen(h.value)}))
    throw Error(ErrorCode::PreconditionFailed, "b c^-1 differs from a^-1 h");
  WeakCommutativityReport r;
  for (ChamberLabel l : a_plus(pres, ab))
    if (l.a == c) {
      r.lhs.add(*compose_pm(pres, ab, l));
      ++r.lhs_terms;
    }
  for (ChamberLabel l : a_minus(pres, ab))
    if (l.b == h) {
      r.rhs.add(*compose_mp(pres, ab, l));
      ++r.rhs_terms;
    }
  r.equal = r.lhs == r.rhs;
  return r;
}

struct Quadruple {
  PointId a, b, c, h;
  auto operator<=>(const Quadruple&) const = default;
};

/// All (a, b, c, h) with b on lambda(a), c a first coordinate in A+_(a,b) and
/// h read off from the normal form b c^-1 = a^-1 h.
inline std::vector<Quadruple> admissible_quadruples(const TrianglePresentation& pres) {
  std::set<Quadruple> out;
  for (ChamberLabel ab : alphabet(pres))
    for (ChamberLabel cd : a_plus(pres, ab)) {
      const NormalForm w = reduce(pres, {gen(ab.b.value), inv(cd.a.value)});
      if (w.shape() == Shape{1, 1} && w.xs[0] == ab.a) out.insert({ab.a, ab.b, cd.a, w.ys[0]});
    }
  return {out.begin(), out.end()};
}

struct DecompositionTerm {
  char family = 'A';
  std::string name;
  NormalForm word;
  std::vector<ChamberLabel> initial;
  std::vector<ChamberLabel> final_;
};

struct GeneratorDecomposition {
  PointId generator;
  std::vector<DecompositionTerm> family_a;
  std::vector<DecompositionTerm> family_b;
  std::vector<DecompositionTerm> family_c;
  std::size_t initial_count = 0;
  std::size_t final_count = 0;
  bool words_ok = false;
  bool initial_partition_ok = false;
  bool final_partition_ok = false;
};

/// Writes the generator b as a sum of three families of partial isometries
/// whose initial projections, and separately whose final projections,
/// partition the alphabet. Terms of family C sharing an initial label (or a
/// final label) contribute that projection once.
inline GeneratorDecomposition decompose_generator(const TrianglePresentation& pres, PointId b) {
  const auto n = static_cast<std::uint32_t>(pres.num_points());
  if (b.value >= n) throw Error(ErrorCode::IndexOutOfRange, "generator out of range");
  GeneratorDecomposition out;
  out.generator = b;
  auto label_name = [](const char* sym, ChamberLabel l) {
    return std::string(sym) + "_(" + std::to_string(l.a.value) + "^-1," + std::to_string(l.b.value) + ")";
  };
  for (std::uint32_t a = 0; a < n; ++a)
    if (pres.on_lambda(PointId{a}, b)) {
      const ChamberLabel l{PointId{a}, b};
      const auto row = a_plus(pres, l);
      out.family_a.push_back({'A', label_name("s+", l), letter_element(gen(b.value)), {row.begin(), row.end()}, {l}});
    }
  for (std::uint32_t k = 0; k < n; ++k)
    if (pres.on_lambda(b, PointId{k})) {
      const ChamberLabel l{b, PointId{k}};
      const auto row = a_minus(pres, l);
      out.family_b.push_back({'B', label_name("s-", l) + "*", letter_element(gen(b.value)), {l}, {row.begin(), row.end()}});
    }
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!pres.on_lambda(b, PointId{s})) continue;
    std::optional<PointId> t;
    for (std::uint32_t x = 0; x < n && !t; ++x)
      if (pres.third(PointId{s}, PointId{x}) == b) t = PointId{x};
    if (!t) continue;
    for (std::uint32_t h = 0; h < n; ++h) {
      if (h == b.value || !pres.on_lambda(PointId{h}, PointId{s})) continue;
      for (std::uint32_t f = 0; f < n; ++f) {
        if (f == b.value || !pres.on_lambda(*t, PointId{f})) continue;
        const ChamberLabel init{PointId{h}, PointId{s}};
        const ChamberLabel fin{*t, PointId{f}};
        out.family_c.push_back({'C', label_name("s-", fin) + " " + label_name("s+", init) + "*",
                                reduce(pres, {inv(t->value), inv(s)}), {init}, {fin}});
      }
    }
  }
  const NormalForm bw = letter_element(gen(b.value));
  out.words_ok = true;
  std::vector<ChamberLabel> initial;
  std::vector<ChamberLabel> final_;
  std::set<ChamberLabel> c_init;
  std::set<ChamberLabel> c_final;
  for (const auto* fam : {&out.family_a, &out.family_b, &out.family_c})
    for (const DecompositionTerm& t : *fam) {
      out.words_ok = out.words_ok && t.word == bw;
      if (t.family == 'C') {
        c_init.insert(t.initial.begin(), t.initial.end());
        c_final.insert(t.final_.begin(), t.final_.end());
      } else {
        initial.insert(initial.end(), t.initial.begin(), t.initial.end());
        final_.insert(final_.end(), t.final_.begin(), t.final_.end());
      }
    }
  initial.insert(initial.end(), c_init.begin(), c_init.end());
  final_.insert(final_.end(), c_final.begin(), c_final.end());
  out.initial_count = initial.size();
  out.final_count = final_.size();
  const auto all = alphabet(pres);
  auto partitions = [&](std::vector<ChamberLabel> v) {
    std::sort(v.begin(), v.end());
    return v == all;
  };
  out.initial_partition_ok = partitions(initial);
  out.final_partition_ok = partitions(final_);
  return out;
}

/// The 2r x 2r matrix over (a_1, a_1^-1, ..., a_r, a_r^-1) with entry 1
/// unless the column is the inverse of the row.
inline std::vector<std::vector<int>> free_group_matrix(std::size_t rank) {
  if (rank < 1) throw Error(ErrorCode::PreconditionFailed, "rank must be at least 1");
  std::vector<std::vector<int>> m(2 * rank, std::vector<int>(2 * rank, 1));
  for (std::size_t x = 0; x < 2 * rank; ++x) m[x][x ^ 1] = 0;
  return m;
}

}  // namespace tribuild
