#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tribuild/presentation.hpp"

namespace tribuild {

/// a_x (inverse = false) or a_x^-1 (inverse = true).
struct Letter {
  PointId point;
  bool inverse = false;
  constexpr auto operator<=>(const Letter&) const = default;

  constexpr Letter inverted() const { return {point, !inverse}; }
};

using Word = std::vector<Letter>;

constexpr Letter gen(std::uint32_t x) { return {PointId{x}, false}; }
constexpr Letter inv(std::uint32_t x) { return {PointId{x}, true}; }

/// Shape (n, m): n inverse letters (left wall), then m generators.
struct Shape {
  std::size_t n = 0;
  std::size_t m = 0;
  constexpr auto operator<=>(const Shape&) const = default;
};

/// Left normal form x_1^-1 ... x_n^-1 y_1 ... y_m.
struct NormalForm {
  std::vector<PointId> xs;
  std::vector<PointId> ys;

  bool operator==(const NormalForm&) const = default;
  auto operator<=>(const NormalForm& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    if (auto c = xs <=> o.xs; c != 0) return c;
    return ys <=> o.ys;
  }

  bool is_identity() const noexcept { return xs.empty() && ys.empty(); }
  std::size_t length() const noexcept { return xs.size() + ys.size(); }
  Shape shape() const noexcept { return {xs.size(), ys.size()}; }

  Word word() const {
    Word w;
    w.reserve(length());
    for (PointId x : xs) w.push_back({x, true});
    for (PointId y : ys) w.push_back({y, false});
    return w;
  }
};

inline std::size_t length(const NormalForm& g) { return g.length(); }
inline Shape shape(const NormalForm& g) { return g.shape(); }

/// Type of the vertex g: tau(a_x) = 1, so tau(g) = m - n mod 3.
inline unsigned vertex_type(const NormalForm& g) {
  const auto n = g.xs.size() % 3;
  const auto m = g.ys.size() % 3;
  return static_cast<unsigned>((m + 3 - n) % 3);
}

struct NormalFormHash {
  std::size_t operator()(const NormalForm& g) const noexcept {
    std::size_t h = g.xs.size() * 0x9e37u + 17;
    for (PointId x : g.xs) hash_combine(h, x.value);
    hash_combine(h, 0xabcdefu);
    for (PointId y : g.ys) hash_combine(h, y.value);
    return h;
  }
};

using ElementSet = std::unordered_set<NormalForm, NormalFormHash>;

namespace detail {

// Multiplies g on the right by one letter. Rewrites that shorten or reorder
// the word pop letters off g and push replacements onto `pending`.
inline void push_letter(const TrianglePresentation& pres, NormalForm& g, Letter l,
                        std::vector<Letter>& pending) {
  const PointId w = l.point;
  if (!l.inverse) {
    if (!g.ys.empty()) {
      const PointId y = g.ys.back();
      if (pres.on_lambda(y, w)) {
        // a_y a_w = a_z^-1 for (y, w, z) in T
        g.ys.pop_back();
        pending.push_back({*pres.third(y, w), true});
        return;
      }
      g.ys.push_back(w);
      return;
    }
    if (!g.xs.empty() && g.xs.back() == w) {
      g.xs.pop_back();
      return;
    }
    g.ys.push_back(w);
    return;
  }
  if (!g.ys.empty()) {
    const PointId y = g.ys.back();
    g.ys.pop_back();
    if (y == w) return;
    // a_y a_w^-1 = a_e^-1 a_d, c = meet(lambda(w), lambda(y)),
    // (w, c, d) and (y, c, e) in T.
    const auto& lam = pres.lambda();
    const PointId c = pres.plane().meet(lam(w), lam(y));
    pending.push_back({*pres.third(w, c), false});
    pending.push_back({*pres.third(y, c), true});
    return;
  }
  if (!g.xs.empty() && pres.on_lambda(w, g.xs.back())) {
    // a_x^-1 a_w^-1 = a_z for (w, x, z) in T
    const PointId x = g.xs.back();
    g.xs.pop_back();
    pending.push_back({*pres.third(w, x), false});
    return;
  }
  g.xs.push_back(w);
}

}  // namespace detail

/// g * letter in normal form.
inline NormalForm multiply(const TrianglePresentation& pres, NormalForm g, Letter l) {
  thread_local std::vector<Letter> pending;
  pending.clear();
  pending.push_back(l);
  while (!pending.empty()) {
    Letter next = pending.back();
    pending.pop_back();
    detail::push_letter(pres, g, next, pending);
  }
  return g;
}

/// Normal form of the element represented by w.
inline NormalForm reduce(const TrianglePresentation& pres, const Word& w) {
  NormalForm g;
  std::vector<Letter> pending;
  for (Letter l : w) {
    pending.push_back(l);
    while (!pending.empty()) {
      Letter next = pending.back();
      pending.pop_back();
      detail::push_letter(pres, g, next, pending);
    }
  }
  return g;
}

inline NormalForm multiply(const TrianglePresentation& pres, const NormalForm& g, const NormalForm& h) {
  NormalForm out = g;
  for (Letter l : h.word()) out = multiply(pres, std::move(out), l);
  return out;
}

inline NormalForm inverse(const TrianglePresentation& pres, const NormalForm& g) {
  Word w = g.word();
  Word r(w.rbegin(), w.rend());
  for (Letter& l : r) l = l.inverted();
  return reduce(pres, r);
}

/// g^-1 h. A common prefix of the two normal-form words cancels first; the
/// remaining suffixes are again normal forms.
inline NormalForm relative(const TrianglePresentation& pres, const NormalForm& g, const NormalForm& h) {
  if (g.is_identity()) return h;
  auto letter = [](const NormalForm& f, std::size_t i) {
    return i < f.xs.size() ? Letter{f.xs[i], true} : Letter{f.ys[i - f.xs.size()], false};
  };
  const std::size_t lg = g.length();
  const std::size_t lh = h.length();
  std::size_t k = 0;
  while (k < lg && k < lh && letter(g, k) == letter(h, k)) ++k;
  NormalForm out;
  for (std::size_t i = lg; i-- > k;) out = multiply(pres, std::move(out), letter(g, i).inverted());
  for (std::size_t i = k; i < lh; ++i) out = multiply(pres, std::move(out), letter(h, i));
  return out;
}

inline NormalForm letter_element(Letter l) {
  NormalForm g;
  (l.inverse ? g.xs : g.ys).push_back(l.point);
  return g;
}

/// True iff the sequences satisfy the normal-form constraints.
inline bool is_normal(const TrianglePresentation& pres, const NormalForm& g) {
  for (std::size_t i = 0; i + 1 < g.xs.size(); ++i)
    if (pres.on_lambda(g.xs[i + 1], g.xs[i])) return false;
  for (std::size_t j = 0; j + 1 < g.ys.size(); ++j)
    if (pres.on_lambda(g.ys[j], g.ys[j + 1])) return false;
  if (!g.xs.empty() && !g.ys.empty() && g.xs.back() == g.ys.front()) return false;
  return true;
}

/// Rewrites w with the four reduction rules applied at uniformly random
/// applicable positions. Used to test that the normal form does not depend
/// on the rewriting strategy.
template <class Rng>
NormalForm reduce_with_strategy(const TrianglePresentation& pres, Word w, Rng& rng) {
  const auto& lam = pres.lambda();
  for (;;) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Letter a = w[i], b = w[i + 1];
      const bool cancel = a.point == b.point && a.inverse != b.inverse;
      const bool r2 = !a.inverse && !b.inverse && pres.on_lambda(a.point, b.point);
      const bool r3 = a.inverse && b.inverse && pres.on_lambda(b.point, a.point);
      const bool r4 = !a.inverse && b.inverse;
      if (cancel || r2 || r3 || r4) sites.push_back(i);
    }
    if (sites.empty()) break;
    const std::size_t i = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const Letter a = w[i], b = w[i + 1];
    Word repl;
    if (a.point == b.point && a.inverse != b.inverse) {
    } else if (!a.inverse && !b.inverse) {
      repl = {{*pres.third(a.point, b.point), true}};
    } else if (a.inverse && b.inverse) {
      repl = {{*pres.third(b.point, a.point), false}};
    } else {
      const PointId c = pres.plane().meet(lam(b.point), lam(a.point));
      repl = {{*pres.third(a.point, c), true}, {*pres.third(b.point, c), false}};
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
  }
  NormalForm g;
  for (Letter l : w) (l.inverse ? g.xs : g.ys).push_back(l.point);
  return g;
}

// ---------------------------------------------------------------------------
// Text syntax: whitespace separated tokens, "3" for a_3 and "3^-1" for a_3^-1.

inline std::string to_string(Letter l) {
  return std::to_string(l.point.value) + (l.inverse ? "^-1" : "");
}

inline std::string to_string(const Word& w) {
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

/// "e" for the identity.
inline std::string to_string(const NormalForm& g) {
  return g.is_identity() ? std::string("e") : to_string(g.word());
}

inline Word parse_word(const std::string& text, std::size_t num_points) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "e") continue;
    bool inverse = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad token '" + tok + "'");
    }
    if (pos != tok.size()) throw Error(ErrorCode::ParseError, "bad token '" + tok + "'");
    if (v >= num_points) throw Error(ErrorCode::IndexOutOfRange, "generator " + tok);
    w.push_back({PointId{static_cast<std::uint32_t>(v)}, inverse});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Cayley ball.

struct BallCensus {
  std::size_t radius = 0;
  std::map<Shape, std::size_t> by_shape;
  std::vector<std::size_t> sphere_sizes;  // index = length
  std::vector<NormalForm> elements;       // BFS order
};

/// All letters, generators first, each in increasing point order.
inline std::vector<Letter> all_letters(std::size_t num_points) {
  std::vector<Letter> out;
  for (std::uint32_t x = 0; x < num_points; ++x) out.push_back(gen(x));
  for (std::uint32_t x = 0; x < num_points; ++x) out.push_back(inv(x));
  return out;
}

/// BFS over normal forms by right multiplication with single letters.
inline BallCensus ball(const TrianglePresentation& pres, std::size_t radius,
                       std::size_t budget = 5'000'000) {
  BallCensus census;
  census.radius = radius;
  census.sphere_sizes.assign(radius + 1, 0);
  ElementSet seen;
  std::vector<NormalForm> frontier{NormalForm{}};
  seen.insert(NormalForm{});
  census.elements.push_back(NormalForm{});
  census.by_shape[{0, 0}] = 1;
  census.sphere_sizes[0] = 1;
  const auto letters = all_letters(pres.num_points());
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : frontier) {
      for (Letter l : letters) {
        NormalForm h = multiply(pres, g, l);
        if (h.length() != r || seen.contains(h)) continue;
        if (seen.size() >= budget) throw Error(ErrorCode::BudgetExceeded, "ball exceeds element budget");
        seen.insert(h);
        ++census.by_shape[h.shape()];
        ++census.sphere_sizes[r];
        census.elements.push_back(h);
        next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return census;
}

/// Number of elements of shape (n, m), from the normal-form constraints.
inline std::size_t shape_count_closed_form(unsigned q, std::size_t n, std::size_t m) {
  const std::size_t pts = static_cast<std::size_t>(q) * q + q + 1;
  auto ipow = [](std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
  };
  if (n == 0 && m == 0) return 1;
  if (n == 0 || m == 0) return pts * ipow(static_cast<std::size_t>(q) * q, n + m - 1);
  return pts * (pts - 1) * ipow(static_cast<std::size_t>(q) * q, n + m - 2);
}

}  // namespace tribuild
