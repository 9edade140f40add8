#pragma once

// Text formats: JSON for planes, presentations, diagrams and patches; CSV for
// matrices and ball censuses.

#include <sstream>
#include <string>

#include <json.hpp>

#include "tribuild/apartment.hpp"
#include "tribuild/ck_subshift.hpp"

namespace tribuild::io {

using nlohmann::json;

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

/// Lines are listed by index with sorted point lists, so dump(load(s)) == s
/// for any s written by this function.
inline json plane_to_json(const ProjectivePlane& plane) {
  json lines = json::array();
  for (std::uint32_t l = 0; l < plane.size(); ++l) {
    json pts = json::array();
    for (PointId p : plane.points_on(LineId{l})) pts.push_back(p.value);
    lines.push_back(pts);
  }
  return {{"q", plane.order()}, {"lines", lines}};
}

inline ProjectivePlane plane_from_json(const json& j) {
  return guarded([&] {
    std::vector<std::vector<PointId>> lines;
    for (const auto& line : j.at("lines")) {
      std::vector<PointId> pts;
      for (const auto& p : line) pts.push_back(PointId{p.get<std::uint32_t>()});
      lines.push_back(std::move(pts));
    }
    return ProjectivePlane(j.at("q").get<unsigned>(), std::move(lines));
  });
}

inline std::string dump(const json& j) { return j.dump() + "\n"; }

inline json presentation_to_json(const TrianglePresentation& pres) {
  json lambda = json::array();
  for (std::uint32_t x = 0; x < pres.num_points(); ++x) lambda.push_back(pres.lambda()(PointId{x}).value);
  json triples = json::array();
  for (const Triple& t : pres.canonical_triples()) triples.push_back({t.x.value, t.y.value, t.z.value});
  json j = {{"q", pres.order()}, {"lambda", lambda}, {"triples", triples}};
  j["lines"] = plane_to_json(pres.plane())["lines"];
  return j;
}

/// Reads the raw data of a presentation without checking the axioms. Without
/// a "lines" key the built-in plane of order q is used.
inline PresentationCandidate candidate_from_json(const json& j) {
  return guarded([&] {
    const unsigned q = j.at("q").get<unsigned>();
    ProjectivePlane plane = j.contains("lines") ? plane_from_json(j) : build_plane(q);
    std::vector<LineId> lambda;
    for (const auto& l : j.at("lambda")) lambda.push_back(LineId{l.get<std::uint32_t>()});
    if (lambda.size() != plane.size()) throw Error(ErrorCode::ParseError, "lambda has the wrong length");
    std::vector<Triple> base;
    for (const auto& t : j.at("triples")) {
      if (t.size() != 3) throw Error(ErrorCode::ParseError, "a triple must have three entries");
      Triple tr{PointId{t[0].get<std::uint32_t>()}, PointId{t[1].get<std::uint32_t>()},
                PointId{t[2].get<std::uint32_t>()}};
      for (PointId p : {tr.x, tr.y, tr.z})
        if (p.value >= plane.size()) throw Error(ErrorCode::IndexOutOfRange, "triple entry out of range");
      base.push_back(tr);
    }
    return PresentationCandidate{std::move(plane), Lambda(std::move(lambda)), close_under_rotation(base)};
  });
}

inline TrianglePresentation presentation_from_json(const json& j) {
  PresentationCandidate c = candidate_from_json(j);
  return TrianglePresentation(std::move(c.plane), std::move(c.lambda), std::move(c.triples));
}

inline json diagram_to_json(const SectorDiagram& d) {
  json cells = json::array();
  for (const auto& [p, l] : d.cells()) cells.push_back({p.i, p.j, l.a.value, l.b.value});
  return {{"base", to_string(d.base())}, {"depth", d.depth()}, {"cells", cells}};
}

inline SectorDiagram diagram_from_json(const TrianglePresentation& pres, const json& j) {
  return guarded([&] {
    const std::string base_text = j.at("base").get<std::string>();
    const NormalForm base = reduce(pres, parse_word(base_text, pres.num_points()));
    std::map<Coord, ChamberLabel> cells;
    for (const auto& c : j.at("cells")) {
      if (c.size() != 4) throw Error(ErrorCode::ParseError, "a cell must have four entries");
      cells[{c[0].get<int>(), c[1].get<int>()}] = {PointId{c[2].get<std::uint32_t>()}, PointId{c[3].get<std::uint32_t>()}};
    }
    return SectorDiagram::from_cells(pres, base, j.at("depth").get<int>(), std::move(cells));
  });
}

inline json patch_to_json(const ApartmentPatch& patch) {
  json verts = json::array();
  for (const auto& [p, g] : patch.vertices) verts.push_back({{"i", p.i}, {"j", p.j}, {"word", to_string(g)}});
  return {{"center", {patch.center.i, patch.center.j}}, {"radius", patch.radius}, {"vertices", verts}};
}

inline std::string matrix_csv(const TransitionMatrix& m) {
  std::ostringstream os;
  os << to_string(m.direction);
  for (ChamberLabel l : m.labels) os << "," << to_string(l);
  os << "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << to_string(m.labels[i]);
    for (int e : m.entries[i]) os << "," << e;
    os << "\n";
  }
  return os.str();
}

inline std::string census_csv(const BallCensus& c) {
  std::ostringstream os;
  os << "n,m,count\n";
  for (const auto& [s, count] : c.by_shape) os << s.n << "," << s.m << "," << count << "\n";
  return os.str();
}

inline json labels_to_json(const std::vector<ChamberLabel>& ls) {
  json out = json::array();
  for (ChamberLabel l : ls) out.push_back(to_string(l));
  return out;
}

inline json decomposition_to_json(const GeneratorDecomposition& d) {
  auto fam = [](const std::vector<DecompositionTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms)
      out.push_back({{"term", t.name}, {"word", to_string(t.word)}, {"initial", labels_to_json(t.initial)},
                     {"final", labels_to_json(t.final_)}});
    return out;
  };
  return {{"generator", d.generator.value},
          {"families", {{"A", fam(d.family_a)}, {"B", fam(d.family_b)}, {"C", fam(d.family_c)}}},
          {"initial_count", d.initial_count},
          {"final_count", d.final_count},
          {"words_ok", d.words_ok},
          {"initial_partition_ok", d.initial_partition_ok},
          {"final_partition_ok", d.final_partition_ok}};
}

inline json formal_sum_to_json(const FormalSum& s) {
  json out = json::array();
  for (const auto& t : s.terms()) {
    json support = json::array();
    for (ChamberLabel l : t.support) support.push_back(to_string(l));
    out.push_back({{"word", to_string(t.word)}, {"support", support}, {"starred", t.starred}});
  }
  return out;
}

inline json weak_commutativity_to_json(const WeakCommutativityReport& r) {
  return {{"lhs", formal_sum_to_json(r.lhs)},
          {"rhs", formal_sum_to_json(r.rhs)},
          {"lhs_terms", r.lhs_terms},
          {"rhs_terms", r.rhs_terms},
          {"equal", r.equal}};
}

}  // namespace tribuild::io
