#pragma once

// Chamber labels (a, b) with b on the line lambda(a): the base chamber
// {e, a^-1, b}. These are the letters of the boundary subshift.

#include <set>
#include <string>
#include <vector>

#include "tribuild/presentation.hpp"

namespace tribuild {

struct ChamberLabel {
  PointId a;
  PointId b;
  constexpr auto operator<=>(const ChamberLabel&) const = default;
};

inline std::string to_string(ChamberLabel l) {
  return std::to_string(l.a.value) + "^-1:" + std::to_string(l.b.value);
}

inline bool is_label(const TrianglePresentation& pres, ChamberLabel l) {
  return l.a.value < pres.num_points() && l.b.value < pres.num_points() && pres.on_lambda(l.a, l.b);
}

/// All labels in lexicographic order; (q+1)(q^2+q+1) of them.
inline std::vector<ChamberLabel> alphabet(const TrianglePresentation& pres) {
  std::vector<ChamberLabel> out;
  const auto n = static_cast<std::uint32_t>(pres.num_points());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (pres.on_lambda(PointId{a}, PointId{b})) out.push_back({PointId{a}, PointId{b}});
  return out;
}

inline void require_label(const TrianglePresentation& pres, ChamberLabel l) {
  if (!is_label(pres, l))
    throw Error(ErrorCode::PreconditionFailed, "(" + std::to_string(l.a.value) + "," + std::to_string(l.b.value) +
                                                   ") is not a chamber label");
}

/// Labels that may follow l along a right wall: (c, d) with d not on
/// lambda(b) and lambda(c) the line through x and d, where (a, b, x) is in T.
inline std::set<ChamberLabel> a_plus(const TrianglePresentation& pres, ChamberLabel l) {
  require_label(pres, l);
  const PointId x = *pres.third(l.a, l.b);
  std::set<ChamberLabel> out;
  for (std::uint32_t d = 0; d < pres.num_points(); ++d) {
    if (pres.on_lambda(l.b, PointId{d})) continue;
    const PointId c = pres.lambda().inverse(pres.plane().join(x, PointId{d}));
    out.insert({c, PointId{d}});
  }
  return out;
}

/// Labels that may follow l along a left wall: (c, d) with a not on
/// lambda(c) and d the meet of lambda(x) and lambda(c).
inline std::set<ChamberLabel> a_minus(const TrianglePresentation& pres, ChamberLabel l) {
  require_label(pres, l);
  const PointId x = *pres.third(l.a, l.b);
  std::set<ChamberLabel> out;
  for (std::uint32_t c = 0; c < pres.num_points(); ++c) {
    if (pres.on_lambda(PointId{c}, l.a)) continue;
    const PointId d = pres.plane().meet(pres.lambda()(x), pres.lambda()(PointId{c}));
    out.insert({PointId{c}, d});
  }
  return out;
}

}  // namespace tribuild
