#pragma once

// Command-line front end. run() never writes to std::cout or std::cerr
// directly; machine output goes to `out` and diagnostics to `err`.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tribuild/io.hpp"
#include "tribuild/verify.hpp"

namespace tribuild::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Config {
  unsigned q = 2;
  std::string presentation_file;  // empty: canonical
  std::string emit = "text";
  std::uint64_t seed = 0;
  std::size_t budget = 0;  // 0: unlimited
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using io::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline TrianglePresentation load_presentation(const Config& cfg) {
  if (cfg.presentation_file.empty()) return canonical_presentation(cfg.q);
  return io::presentation_from_json(io::parse_json(read_file(cfg.presentation_file)));
}

/// Accepts "a^-1:b" and "a:b".
inline ChamberLabel parse_label(const TrianglePresentation& pres, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("label must look like a^-1:b, got '" + text + "'");
  std::string a = text.substr(0, colon);
  if (a.size() > 3 && a.ends_with("^-1")) a.resize(a.size() - 3);
  ChamberLabel l;
  try {
    std::size_t pa = 0;
    std::size_t pb = 0;
    const std::string b = text.substr(colon + 1);
    l = {PointId{static_cast<std::uint32_t>(std::stoul(a, &pa))}, PointId{static_cast<std::uint32_t>(std::stoul(b, &pb))}};
    if (pa != a.size() || pb != b.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::logic_error&) {
    throw UsageError("label must look like a^-1:b, got '" + text + "'");
  }
  if (!is_label(pres, l)) throw UsageError(to_string(l) + " is not a chamber label");
  return l;
}

inline NormalForm parse_element(const TrianglePresentation& pres, const std::string& text) {
  return reduce(pres, parse_word(text, pres.num_points()));
}

struct Context {
  Config cfg;
  std::ostream& out;
  std::ostream& err;

  void require_emit(std::initializer_list<const char*> allowed, const std::string& command) const {
    for (const char* a : allowed)
      if (cfg.emit == a) return;
    throw UsageError("--emit " + cfg.emit + " is not available for '" + command + "'");
  }
  std::size_t budget_or(std::size_t fallback) const { return cfg.budget == 0 ? fallback : cfg.budget; }
  void log_seed() const { err << "seed " << cfg.seed << "\n"; }
};

inline std::string join(const std::vector<ChamberLabel>& ls) {
  std::string s;
  for (ChamberLabel l : ls) s += (s.empty() ? "" : " ") + to_string(l);
  return s;
}

inline int cmd_plane(const Context& cx) {
  cx.require_emit({"text", "json"}, "plane");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const ProjectivePlane& plane = pres.plane();
  if (cx.cfg.emit == "json") {
    cx.out << io::dump(io::plane_to_json(plane));
    return kOk;
  }
  cx.out << "q " << plane.order() << " points " << plane.size() << " lines " << plane.size() << "\n";
  for (std::uint32_t l = 0; l < plane.size(); ++l) {
    cx.out << "line " << l << ":";
    for (PointId p : plane.points_on(LineId{l})) cx.out << " " << p.value;
    cx.out << "\n";
  }
  return kOk;
}

inline int cmd_presentation_canonical(const Context& cx) {
  cx.require_emit({"text", "json"}, "presentation canonical");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  if (cx.cfg.emit == "json") {
    cx.out << io::dump(io::presentation_to_json(pres));
    return kOk;
  }
  cx.out << "q " << pres.order() << " triples " << pres.triples().size() << "\nlambda";
  for (std::uint32_t x = 0; x < pres.num_points(); ++x) cx.out << " " << pres.lambda()(PointId{x}).value;
  cx.out << "\n";
  for (const Triple& t : pres.canonical_triples())
    cx.out << "(" << t.x.value << "," << t.y.value << "," << t.z.value << ")\n";
  return kOk;
}

inline int cmd_presentation_verify(const Context& cx) {
  cx.require_emit({"text", "json"}, "presentation verify");
  PresentationCandidate cand = [&] {
    if (cx.cfg.presentation_file.empty()) {
      const TrianglePresentation p = canonical_presentation(cx.cfg.q);
      return PresentationCandidate{p.plane(), p.lambda(), p.triples()};
    }
    return io::candidate_from_json(io::parse_json(read_file(cx.cfg.presentation_file)));
  }();
  const VerificationReport rep = verify(cand);
  if (cx.cfg.emit == "json") {
    json v = json::array();
    for (const auto& viol : rep.violations) v.push_back({{"axiom", to_string(viol.axiom)}, {"detail", viol.detail}});
    cx.out << io::dump({{"ok", rep.ok()}, {"violations", v}});
  } else {
    if (rep.ok()) cx.out << "ok: " << cand.triples.size() << " triples satisfy the axioms\n";
    for (const auto& viol : rep.violations) cx.out << "violated " << to_string(viol.axiom) << ": " << viol.detail << "\n";
  }
  return rep.ok() ? kOk : kVerificationFailed;
}

inline int cmd_presentation_enumerate(const Context& cx, std::size_t limit) {
  cx.require_emit({"text", "json"}, "presentation enumerate");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const EnumerationResult r =
      enumerate(pres.plane(), pres.lambda(), limit == 0 ? SIZE_MAX : limit, cx.budget_or(SIZE_MAX));
  if (cx.cfg.emit == "json") {
    json ps = json::array();
    for (const auto& p : r.presentations) ps.push_back(io::presentation_to_json(p)["triples"]);
    cx.out << io::dump({{"count", r.presentations.size()}, {"truncated", r.truncated}, {"nodes", r.nodes}, {"triples", ps}});
    return kOk;
  }
  cx.out << "presentations " << r.presentations.size() << (r.truncated ? " (truncated)" : "") << " nodes " << r.nodes
         << "\n";
  for (const auto& p : r.presentations) {
    for (const Triple& t : p.canonical_triples()) cx.out << "(" << t.x.value << "," << t.y.value << "," << t.z.value << ")";
    cx.out << (p == pres ? " canonical" : "") << "\n";
  }
  return kOk;
}

inline int cmd_word_reduce(const Context& cx, const std::string& text) {
  cx.require_emit({"text", "json"}, "word reduce");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const NormalForm g = parse_element(pres, text);
  if (cx.cfg.emit == "json") {
    cx.out << io::dump({{"input", text}, {"normal_form", to_string(g)}, {"n", g.shape().n}, {"m", g.shape().m}});
  } else {
    cx.out << (g.is_identity() ? "e" : to_string(g)) << "\n";
  }
  return kOk;
}

inline int cmd_ball(const Context& cx, std::size_t radius) {
  cx.require_emit({"text", "csv", "json"}, "ball");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const BallCensus c = ball(pres, radius, cx.budget_or(SIZE_MAX));
  if (cx.cfg.emit == "csv") {
    cx.out << io::census_csv(c);
    return kOk;
  }
  if (cx.cfg.emit == "json") {
    json shapes = json::array();
    for (const auto& [s, k] : c.by_shape) shapes.push_back({s.n, s.m, k});
    cx.out << io::dump({{"radius", radius}, {"size", c.elements.size()}, {"spheres", c.sphere_sizes}, {"shapes", shapes}});
    return kOk;
  }
  cx.out << "ball of radius " << radius << ": " << c.elements.size() << " elements\n";
  for (std::size_t k = 0; k < c.sphere_sizes.size(); ++k) cx.out << "sphere " << k << ": " << c.sphere_sizes[k] << "\n";
  for (const auto& [s, k] : c.by_shape)
    cx.out << "shape (" << s.n << "," << s.m << "): " << k << " (closed form "
           << shape_count_closed_form(pres.order(), s.n, s.m) << ")\n";
  return kOk;
}

inline int cmd_residue(const Context& cx, const std::string& at) {
  cx.require_emit({"text", "dot", "json"}, "residue");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const ResidueGraph res = residue_graph(pres, parse_element(pres, at));
  if (cx.cfg.emit == "dot") {
    cx.out << to_dot(res);
    return kOk;
  }
  if (cx.cfg.emit == "json") {
    json edges = json::array();
    for (const auto& [l, p] : res.edges) edges.push_back({res.label(l), res.label(p)});
    cx.out << io::dump({{"center", to_string(res.center)}, {"vertices", res.num_vertices()}, {"edges", edges}});
    return kOk;
  }
  cx.out << "residue at " << (res.center.is_identity() ? "e" : to_string(res.center)) << ": " << res.num_vertices()
         << " vertices " << res.edges.size() << " edges\n";
  for (const auto& [l, p] : res.edges) cx.out << res.label(l) << " -- " << res.label(p) << "\n";
  return kOk;
}

inline int cmd_hexagons(const Context& cx, const std::string& at) {
  cx.require_emit({"text", "json"}, "hexagons");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const ResidueGraph res = residue_graph(pres, parse_element(pres, at));
  const auto hs = hexagons(res);
  const std::size_t expected = plane_triangle_count(pres.order());
  if (cx.cfg.emit == "json") {
    json list = json::array();
    for (const Hexagon& h : hs) {
      json row = json::array();
      for (std::size_t v : h) row.push_back(res.label(v));
      list.push_back(row);
    }
    cx.out << io::dump({{"count", hs.size()}, {"expected", expected}, {"hexagons", list}});
  } else {
    cx.out << "hexagons " << hs.size() << " expected " << expected << "\n";
    for (const Hexagon& h : hs) {
      for (std::size_t k = 0; k < 6; ++k) cx.out << (k ? " " : "") << res.label(h[k]);
      cx.out << "\n";
    }
  }
  return hs.size() == expected ? kOk : kVerificationFailed;
}

inline int cmd_ck_matrices(const Context& cx) {
  cx.require_emit({"text", "csv", "json"}, "ck matrices");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const auto [plus, minus] = matrices(pres);
  if (cx.cfg.emit == "csv") {
    cx.out << io::matrix_csv(plus) << "\n" << io::matrix_csv(minus);
    return kOk;
  }
  if (cx.cfg.emit == "json") {
    cx.out << io::dump({{"labels", io::labels_to_json(plus.labels)}, {"plus", plus.entries}, {"minus", minus.entries}});
    return kOk;
  }
  for (const TransitionMatrix* m : {&plus, &minus}) {
    std::set<int> rows, cols;
    for (std::size_t i = 0; i < m->dim(); ++i) {
      rows.insert(m->row_sum(i));
      cols.insert(m->col_sum(i));
    }
    cx.out << to_string(m->direction) << ": " << m->dim() << "x" << m->dim() << " row sums";
    for (int r : rows) cx.out << " " << r;
    cx.out << " column sums";
    for (int c : cols) cx.out << " " << c;
    cx.out << (m->strongly_connected() ? " irreducible" : " reducible") << "\n";
  }
  return kOk;
}

inline int cmd_ck_row(const Context& cx, Direction dir, const std::string& label_text) {
  cx.require_emit({"text", "json"}, dir == Direction::Plus ? "ck aplus" : "ck aminus");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const ChamberLabel l = parse_label(pres, label_text);
  const auto row = dir == Direction::Plus ? a_plus(pres, l) : a_minus(pres, l);
  const std::vector<ChamberLabel> v(row.begin(), row.end());
  if (cx.cfg.emit == "json")
    cx.out << io::dump({{"label", to_string(l)}, {"direction", to_string(dir)}, {"successors", io::labels_to_json(v)}});
  else
    cx.out << join(v) << "\n";
  return kOk;
}

inline int cmd_ck_decompose(const Context& cx, std::optional<std::uint32_t> generator) {
  cx.require_emit({"text", "json"}, "ck decompose");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  std::vector<std::uint32_t> gens;
  if (generator) {
    if (*generator >= pres.num_points()) throw UsageError("generator out of range");
    gens.push_back(*generator);
  } else {
    for (std::uint32_t b = 0; b < pres.num_points(); ++b) gens.push_back(b);
  }
  bool all_ok = true;
  json arr = json::array();
  for (std::uint32_t b : gens) {
    const GeneratorDecomposition d = decompose_generator(pres, PointId{b});
    const bool ok = d.words_ok && d.initial_partition_ok && d.final_partition_ok;
    all_ok = all_ok && ok;
    if (cx.cfg.emit == "json") {
      arr.push_back(io::decomposition_to_json(d));
      continue;
    }
    cx.out << "generator " << b << ": A " << d.family_a.size() << " B " << d.family_b.size() << " C "
           << d.family_c.size() << " initial " << d.initial_count << " final " << d.final_count
           << (ok ? " ok" : " FAILED") << "\n";
    for (const auto* fam : {&d.family_a, &d.family_b, &d.family_c})
      for (const DecompositionTerm& t : *fam)
        cx.out << "  " << t.family << " " << t.name << " = " << to_string(t.word) << " from [" << join(t.initial)
               << "] to [" << join(t.final_) << "]\n";
  }
  if (cx.cfg.emit == "json") cx.out << io::dump(generator ? arr[0] : arr);
  return all_ok ? kOk : kVerificationFailed;
}

inline int cmd_ck_weakcomm(const Context& cx) {
  cx.require_emit({"text", "json"}, "ck weakcomm");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  std::size_t failures = 0;
  json arr = json::array();
  const auto quads = admissible_quadruples(pres);
  for (const Quadruple& qd : quads) {
    const WeakCommutativityReport r = weak_commutativity_check(pres, qd.a, qd.b, qd.c, qd.h);
    failures += r.equal ? 0 : 1;
    if (cx.cfg.emit == "json") {
      json j = io::weak_commutativity_to_json(r);
      j["quadruple"] = {qd.a.value, qd.b.value, qd.c.value, qd.h.value};
      arr.push_back(j);
    } else {
      cx.out << "(" << qd.a.value << "," << qd.b.value << "," << qd.c.value << "," << qd.h.value << ") terms "
             << r.lhs_terms << " = " << r.rhs_terms << (r.equal ? " equal" : " DIFFER") << "\n";
    }
  }
  if (cx.cfg.emit == "json")
    cx.out << io::dump({{"quadruples", quads.size()}, {"failures", failures}, {"checks", arr}});
  else
    cx.out << "quadruples " << quads.size() << " failures " << failures << "\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

inline int cmd_ck_freegroup(const Context& cx, std::size_t rank) {
  cx.require_emit({"text", "csv", "json"}, "ck freegroup");
  if (rank == 0) throw UsageError("rank must be positive");
  const auto m = free_group_matrix(rank);
  if (cx.cfg.emit == "json") {
    cx.out << io::dump({{"rank", rank}, {"matrix", m}});
    return kOk;
  }
  const char sep = cx.cfg.emit == "csv" ? ',' : ' ';
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) cx.out << (j ? std::string(1, sep) : "") << row[j];
    cx.out << "\n";
  }
  return kOk;
}

inline int cmd_boundary_witness(const Context& cx, const std::string& word, const std::string& label_text, int depth) {
  cx.require_emit({"text", "json"}, "boundary witness");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const NormalForm v = parse_element(pres, word);
  const ChamberLabel source = parse_label(pres, label_text);
  const NormalForm k = minimality_witness(pres, v, source);
  const int d = depth == 0 ? static_cast<int>(k.length()) + 2 : depth;
  const bool ok = validate_witness(pres, v, source, k, d, cx.budget_or(SIZE_MAX));
  if (cx.cfg.emit == "json")
    cx.out << io::dump({{"v", to_string(v)}, {"source", to_string(source)}, {"k", to_string(k)}, {"depth", d}, {"valid", ok}});
  else
    cx.out << "k = " << (k.is_identity() ? "e" : to_string(k)) << " checked at depth " << d
           << (ok ? " valid" : " INVALID") << "\n";
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_boundary_overlap(const Context& cx, const std::string& s_text, int i, int depth, std::size_t samples) {
  cx.require_emit({"text", "json"}, "boundary overlap");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const NormalForm s = parse_element(pres, s_text);
  const int d = std::max(depth, i + static_cast<int>(s.length()) + 2);
  const Rational bound = overlap_lower_bound(i, s.length());
  cx.log_seed();
  std::mt19937_64 rng(cx.cfg.seed);
  bool ok = true;
  json arr = json::array();
  for (std::size_t t = 0; t < samples; ++t) {
    const SectorDiagram omega = random_diagram(pres, d, rng);
    const Rational r = amenability_overlap(pres, omega, s, i);
    const bool within = bound <= r && r <= Rational{1, 1};
    ok = ok && within;
    if (cx.cfg.emit == "json")
      arr.push_back({{"base", to_string(omega.base_label())}, {"overlap", r.str()}, {"within_bound", within}});
    else
      cx.out << "sample " << t << " base " << to_string(omega.base_label()) << " overlap " << r.str()
             << (within ? " >= " : " < ") << bound.str() << "\n";
  }
  if (cx.cfg.emit == "json") cx.out << io::dump({{"s", to_string(s)}, {"i", i}, {"depth", d}, {"bound", bound.str()}, {"samples", arr}});
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_boundary_extensions(const Context& cx, const std::string& label_text, int depth) {
  cx.require_emit({"text", "json"}, "boundary extensions");
  if (depth < 1) throw UsageError("depth must be at least 1");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  const ChamberLabel l = parse_label(pres, label_text);
  const std::size_t limit = cx.budget_or(SIZE_MAX);
  std::size_t count = 0;
  json arr = json::array();
  for_each_diagram(pres, l, depth, [&](const SectorDiagram& d) {
    if (cx.cfg.emit == "json" && count < limit) arr.push_back(io::diagram_to_json(d));
    ++count;
  });
  if (cx.cfg.emit == "json")
    cx.out << io::dump({{"label", to_string(l)}, {"depth", depth}, {"count", count}, {"diagrams", arr}});
  else
    cx.out << "diagrams of depth " << depth << " with base " << to_string(l) << ": " << count << "\n";
  return kOk;
}

inline int cmd_apartment_grow(const Context& cx, int t_depth, int radius) {
  cx.require_emit({"text", "json"}, "apartment grow");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  cx.log_seed();
  const ApartmentGrowth g = grow_apartment(pres, t_depth, cx.cfg.seed, radius);
  if (cx.cfg.emit == "json") {
    json bd = json::array();
    for (const SectorDiagram& d : g.boundary) bd.push_back(io::diagram_to_json(d));
    cx.out << io::dump({{"t", io::diagram_to_json(g.t_cylinder)},
                        {"v1", to_string(g.v1)},
                        {"case", g.b_lie_as_a ? "A" : "B"},
                        {"all_contain_t", g.all_contain_t},
                        {"backtracks", g.backtracks},
                        {"boundary", bd},
                        {"patch", io::patch_to_json(g.patch)}});
  } else {
    cx.out << "T base " << to_string(g.t_cylinder.base_label()) << " depth " << g.t_cylinder.depth() << "\n"
           << "v1 " << to_string(g.v1) << " case " << (g.b_lie_as_a ? "A" : "B") << " patch radius "
           << g.patch.radius << " vertices " << g.patch.vertices.size() << " backtracks " << g.backtracks << "\n";
    for (std::size_t k = 0; k < g.boundary.size(); ++k)
      cx.out << "sector " << k << " base " << to_string(g.boundary[k].base_label()) << " depth "
             << g.boundary[k].depth() << "\n";
    cx.out << (g.all_contain_t ? "all six sectors contain T" : "NOT all sectors contain T") << "\n";
  }
  return g.all_contain_t && g.patch.valid(pres) ? kOk : kVerificationFailed;
}

inline int cmd_verify_all(const Context& cx) {
  cx.require_emit({"text", "json"}, "verify all");
  const TrianglePresentation pres = load_presentation(cx.cfg);
  cx.log_seed();
  const auto results = verify_all(pres, cx.cfg.seed);
  bool ok = true;
  json arr = json::array();
  for (const CheckResult& r : results) {
    ok = ok && r.ok;
    cx.err << r.name << " " << r.seconds << "s\n";
    if (cx.cfg.emit == "json")
      arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    else
      cx.out << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  if (cx.cfg.emit == "json") cx.out << io::dump({{"ok", ok}, {"checks", arr}});
  else cx.out << (ok ? "all identities verified" : "verification FAILED") << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Triangle-building groups and their boundary subshift", "tribuild"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--q", cfg.q, "order of the projective plane (2 or 3)")->check(CLI::IsMember({2u, 3u}));
  app.add_option("--presentation", cfg.presentation_file, "presentation JSON file (default: canonical)");
  app.add_option("--emit", cfg.emit, "output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--budget", cfg.budget, "node or item cap (0: unlimited)");

  std::function<int(const Context&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    return parent->add_subcommand(name, desc);
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  leaf(&app, "plane", "print the projective plane")->callback([&] { action = cmd_plane; });

  CLI::App* pres_cmd = group("presentation", "triangle presentations");
  leaf(pres_cmd, "verify", "check the presentation axioms")->callback([&] { action = cmd_presentation_verify; });
  leaf(pres_cmd, "canonical", "print the presentation")->callback([&] { action = cmd_presentation_canonical; });
  std::size_t enum_limit = 0;
  CLI::App* enum_cmd = leaf(pres_cmd, "enumerate", "search all presentations for the plane and lambda");
  enum_cmd->add_option("--limit", enum_limit, "stop after this many (0: all)");
  enum_cmd->callback([&] { action = [&](const Context& cx) { return cmd_presentation_enumerate(cx, enum_limit); }; });

  CLI::App* word_cmd = group("word", "group elements");
  std::string word_text;
  CLI::App* reduce_cmd = leaf(word_cmd, "reduce", "print the normal form of a word");
  reduce_cmd->add_option("word", word_text, "tokens like '3' or '3^-1'")->required();
  reduce_cmd->callback([&] { action = [&](const Context& cx) { return cmd_word_reduce(cx, word_text); }; });

  std::size_t radius = 3;
  CLI::App* ball_cmd = leaf(&app, "ball", "census of the ball around e by shape");
  ball_cmd->add_option("--radius", radius, "word-length radius");
  ball_cmd->callback([&] { action = [&](const Context& cx) { return cmd_ball(cx, radius); }; });

  std::string at;
  CLI::App* res_cmd = leaf(&app, "residue", "incidence graph of the link of a vertex");
  res_cmd->add_option("--at", at, "vertex as a word (default e)");
  res_cmd->callback([&] { action = [&](const Context& cx) { return cmd_residue(cx, at); }; });
  CLI::App* hex_cmd = leaf(&app, "hexagons", "apartments of the link of a vertex");
  hex_cmd->add_option("--at", at, "vertex as a word (default e)");
  hex_cmd->callback([&] { action = [&](const Context& cx) { return cmd_hexagons(cx, at); }; });

  CLI::App* ck = group("ck", "boundary subshift");
  leaf(ck, "matrices", "transition matrices A+ and A-")->callback([&] { action = cmd_ck_matrices; });
  std::string label_text;
  CLI::App* ap = leaf(ck, "aplus", "row of A+");
  ap->add_option("label", label_text, "a^-1:b")->required();
  ap->callback([&] { action = [&](const Context& cx) { return cmd_ck_row(cx, Direction::Plus, label_text); }; });
  CLI::App* am = leaf(ck, "aminus", "row of A-");
  am->add_option("label", label_text, "a^-1:b")->required();
  am->callback([&] { action = [&](const Context& cx) { return cmd_ck_row(cx, Direction::Minus, label_text); }; });
  std::optional<std::uint32_t> generator;
  CLI::App* dec = leaf(ck, "decompose", "decompose generators into partial isometries");
  dec->add_option("--generator", generator, "a single generator (default: all)");
  dec->callback([&] { action = [&](const Context& cx) { return cmd_ck_decompose(cx, generator); }; });
  leaf(ck, "weakcomm", "weak commutativity over all admissible quadruples")->callback([&] { action = cmd_ck_weakcomm; });
  std::size_t rank = 2;
  CLI::App* fg = leaf(ck, "freegroup", "transition matrix of a free group");
  fg->add_option("--rank", rank, "rank");
  fg->callback([&] { action = [&](const Context& cx) { return cmd_ck_freegroup(cx, rank); }; });

  CLI::App* bd = group("boundary", "sectors and boundary points");
  int depth = 0;
  CLI::App* wit = leaf(bd, "witness", "minimality witness k for v and a source label");
  wit->add_option("--word", word_text, "the element v")->required();
  wit->add_option("--label", label_text, "source label a^-1:b")->required();
  wit->add_option("--depth", depth, "validation depth (default |k|+2)");
  wit->callback([&] { action = [&](const Context& cx) { return cmd_boundary_witness(cx, word_text, label_text, depth); }; });
  int level = 10;
  std::size_t samples = 3;
  std::string s_text = "0";
  CLI::App* ov = leaf(bd, "overlap", "overlap of the averaged indicator functions");
  ov->add_option("--s", s_text, "translating element");
  ov->add_option("--i", level, "level")->check(CLI::PositiveNumber);
  ov->add_option("--depth", depth, "sector depth (raised to i+|s|+2 if smaller)");
  ov->add_option("--samples", samples, "number of random boundary points");
  ov->callback([&] { action = [&](const Context& cx) { return cmd_boundary_overlap(cx, s_text, level, depth, samples); }; });
  int ext_depth = 1;
  CLI::App* ext = leaf(bd, "extensions", "count sector diagrams with a base label");
  ext->add_option("--label", label_text, "base label a^-1:b")->required();
  ext->add_option("--depth", ext_depth, "depth");
  ext->callback([&] { action = [&](const Context& cx) { return cmd_boundary_extensions(cx, label_text, ext_depth); }; });

  CLI::App* apt = group("apartment", "apartments through a sector");
  int t_depth = 1;
  int apt_radius = 0;
  CLI::App* grow = leaf(apt, "grow", "grow an apartment whose six boundary sectors contain T");
  grow->add_option("--depth", t_depth, "depth of the triangle T");
  grow->add_option("--radius", apt_radius, "patch radius (default 4(t+1)+t+4)");
  grow->callback([&] { action = [&](const Context& cx) { return cmd_apartment_grow(cx, t_depth, apt_radius); }; });

  CLI::App* ver = group("verify", "invariant suite");
  leaf(ver, "all", "run every check")->callback([&] { action = cmd_verify_all; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }
  if (!action) {
    err << "no command given\n";
    return kUsage;
  }
  try {
    return action(Context{cfg, out, err});
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tribuild::cli
