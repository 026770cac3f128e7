#pragma once

// Command-line front end. Exit codes: 0 accept, 1 reject, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "facet/chromatic.hpp"
#include "facet/discharging.hpp"
#include "facet/embedding.hpp"
#include "facet/error.hpp"
#include "facet/facial_coloring.hpp"
#include "facet/generators.hpp"
#include "facet/nullstellensatz.hpp"
#include "facet/peg.hpp"
#include "facet/reducibility.hpp"
#include "facet/structure.hpp"
#include "facet/surgery.hpp"

namespace facet::cli {

using nlohmann::json;

enum Exit { accept = 0, reject = 1, usage = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write '" + path + "'");
  o << text;
}

/// FACET_THREADS must be a positive integer when set. The solvers are
/// sequential, so the value only caps and never raises parallelism.
inline int thread_cap() {
  const char* raw = std::getenv("FACET_THREADS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) throw InputError(std::string("FACET_THREADS must be a positive integer, got '") + raw + "'");
  return static_cast<int>(v);
}

inline EmbeddedGraph load_graph(const std::string& path, std::ostream& err) {
  auto parsed = parse_peg(read_file(path));
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return std::move(parsed.graph);
}

inline std::string dot_of(const ConflictGraph& c) {
  std::ostringstream o;
  o << "graph conflicts {\n";
  for (int v = 0; v < c.size(); ++v) o << "  " << v << ";\n";
  for (int v = 0; v < c.size(); ++v)
    for (int w : c.adj[static_cast<std::size_t>(v)])
      if (v < w) o << "  " << v << " -- " << w << ";\n";
  o << "}\n";
  return o.str();
}

inline json coloring_json(const PartialColoring& pc) {
  auto a = json::array();
  for (const auto& c : pc.color) a.push_back(c ? json(*c) : json(nullptr));
  return a;
}

struct Options {
  std::string graph, coloring, pairs, config, lemma, name, dot, family, output;
  int ell = 3;
  std::optional<int> palette;
  bool json_out = false, partial = false, all = false;
  std::uint64_t budget = default_node_budget;
  std::vector<long long> params;
  std::vector<int> edges;
};

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, err);
  const int palette = o.palette.value_or(default_palette(o.ell));
  auto pc = parse_coloring(read_file(o.coloring), g.edge_count(), palette);
  auto v = verify(g, o.ell, pc, !o.partial);
  std::vector<int> beyond;
  for (int e = 0; e < pc.size(); ++e)
    if (pc.colored(e) && *pc.color[static_cast<std::size_t>(e)] > palette) beyond.push_back(e);
  const bool ok = v.ok && beyond.empty();
  if (o.json_out) {
    json j{{"ok", ok}, {"ell", o.ell}, {"palette", palette}, {"colors_used", v.colors_used}};
    j["violations"] = json::array();
    for (const auto& x : v.violations)
      j["violations"].push_back(
          {{"e", x.e}, {"f", x.f}, {"color", x.color}, {"face", x.face}, {"distance", x.gap}, {"trail", x.trail}});
    j["uncolored"] = o.partial ? json::array() : json(v.uncolored);
    j["out_of_palette"] = beyond;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& x : v.violations) {
      out << "violation: edges " << x.e << " and " << x.f << " share color " << x.color << " at facial distance "
          << x.gap << " on face " << x.face << " (trail";
      for (int e : x.trail) out << ' ' << e;
      out << ")\n";
    }
    if (!o.partial)
      for (int e : v.uncolored) out << "uncolored: edge " << e << "\n";
    for (int e : beyond) out << "out of palette: edge " << e << " has color " << *pc.color[static_cast<std::size_t>(e)] << "\n";
    if (ok) out << "ok: " << (o.partial ? "partial " : "") << o.ell << "-facial coloring with " << v.colors_used << " colors\n";
  }
  return ok ? accept : reject;
}

inline int cmd_chi(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, err);
  if (!o.dot.empty()) write_file(o.dot, dot_of(conflict_graph(g, o.ell)));
  auto r = chromatic_index(g, o.ell, std::nullopt, o.budget);
  const bool exact = r.status == SolveStatus::exact;
  if (o.json_out) {
    json j{{"status", to_string(r.status)}, {"ell", o.ell}, {"lower", r.lower}, {"upper", r.upper}, {"nodes", r.nodes}};
    j["chi"] = exact ? json(*r.chi) : json(nullptr);
    j["coloring"] = coloring_json(r.witness);
    out << j.dump(2) << "\n";
  } else if (exact) {
    out << "chi = " << *r.chi << "\n";
  } else {
    out << "chi in [" << r.lower << ", " << r.upper << "] (search budget exhausted after " << r.nodes << " nodes)\n";
  }
  return exact ? accept : reject;
}

inline int cmd_cn(const Options& o, std::ostream& out, std::ostream&) {
  if (o.lemma.empty() == o.pairs.empty()) throw InputError("give exactly one of --lemma and --pairs");
  json j;
  bool ok = true;
  std::ostringstream text;
  if (!o.lemma.empty()) {
    auto lp = lemma_polynomial(o.lemma);
    auto c = coefficient(lp.pairs, lp.target);
    auto w = cn_witness(lp.pairs, lp.caps);
    ok = !c.value.is_zero() && c.value == lp.published;
    j = {{"lemma", lp.name}, {"target", to_string(lp.target)}, {"coefficient", c.value.str()},
         {"published", lp.published}, {"matches", c.value == lp.published}};
    j["witness"] = w ? json{{"monomial", to_string(w->monomial)}, {"coefficient", w->coefficient.str()}} : json(nullptr);
    text << "coefficient = " << c.value << "\n";
    if (w) text << "witness " << to_string(w->monomial) << " with coefficient " << w->coefficient << "\n";
  } else {
    auto pf = parse_pairs(read_file(o.pairs));
    if (!pf.target && !pf.caps) throw InputError("pairs file needs a 't' line or a 'caps' line");
    j["vars"] = pf.pairs.vars;
    if (pf.target) {
      auto c = coefficient(pf.pairs, *pf.target);
      ok = !c.value.is_zero();
      j["target"] = to_string(*pf.target);
      j["coefficient"] = c.value.str();
      j["degree_mismatch"] = c.degree_mismatch;
      text << "coefficient = " << c.value << (c.degree_mismatch ? " (degree differs from the number of factors)" : "")
           << "\n";
    }
    if (pf.caps) {
      auto w = cn_witness(pf.pairs, *pf.caps);
      ok = ok && w.has_value();
      j["witness"] = w ? json{{"monomial", to_string(w->monomial)}, {"coefficient", w->coefficient.str()}} : json(nullptr);
      if (w) text << "witness " << to_string(w->monomial) << " with coefficient " << w->coefficient << "\n";
      else text << "no witness within the list sizes\n";
    }
  }
  if (o.json_out) out << j.dump(2) << "\n";
  else out << text.str();
  return ok ? accept : reject;
}

inline int cmd_reduce(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<Configuration> configs;
  int sources = (!o.name.empty()) + (!o.config.empty()) + o.all;
  if (sources != 1) throw InputError("give exactly one of --name, --config and --all");
  if (o.all) configs = catalog();
  else if (!o.name.empty()) configs.push_back(configuration(o.name));
  else {
    json j;
    try {
      j = json::parse(read_file(o.config));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("configuration is not valid JSON: ") + e.what());
    }
    configs.push_back(configuration_from_json(j));
  }
  bool all_passed = true;
  auto reports = json::array();
  for (const auto& c : configs) {
    auto r = check(c);
    all_passed = all_passed && r.passed;
    if (o.json_out) {
      reports.push_back(to_json(r));
      continue;
    }
    out << c.name << ": " << (r.passed ? "certified" : "NOT certified") << "\n";
    for (const auto& item : r.checks)
      out << "  " << (item.passed ? "pass" : "FAIL") << "  " << item.name << (item.detail.empty() ? "" : ": ")
          << item.detail << "\n";
  }
  if (o.json_out) out << (o.all ? reports : reports[0]).dump(2) << "\n";
  return all_passed ? accept : reject;
}

inline int cmd_discharge(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, err);
  auto r = audit(g);
  if (o.json_out) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "total before rules = " << to_string(r.total_before) << "\n";
    out << "total after rules = " << to_string(r.total_after) << "\n";
    out << "transfers = " << r.ledger.transfers.size() << "\n";
    for (const auto& t : r.ledger.transfers)
      out << "  " << t.rule << " " << t.src.str() << " -> " << t.dst.str() << " " << to_string(t.amount) << "\n";
    for (const auto& gap : r.ledger.gaps) out << "gap: " << gap << "\n";
    for (const auto& n : r.ledger.notes) out << "note: " << n << "\n";
    out << "negative final charges:";
    for (const auto& e : r.negative) {
      auto c = e.kind == Element::vertex ? r.ledger.vertex_final[static_cast<std::size_t>(e.id)]
                                         : r.ledger.face_final[static_cast<std::size_t>(e.id)];
      out << " " << e.str() << "=" << to_string(c);
    }
    out << (r.negative.empty() ? " none\n" : "\n");
    auto failing = r.structure.failing();
    out << "failing predicates:";
    for (const auto& k : failing) out << " " << k;
    out << (failing.empty() ? " none\n" : "\n");
    out << "verdict = " << to_string(r.verdict) << "\n";
  }
  return r.conserved() && r.verdict != AuditVerdict::consistent_counterexample ? accept : reject;
}

inline int cmd_structure(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, err);
  auto s = structure_report(g);
  if (o.json_out) {
    out << json{{"all_hold", s.all_hold()}, {"predicates", to_json(s)}}.dump(2) << "\n";
  } else {
    for (const auto& p : s.predicates)
      out << (p.holds ? "holds " : "fails ") << p.key << (p.holds ? "" : "  [" + p.witness + "]") << "\n";
  }
  return s.all_hold() ? accept : reject;
}

inline int cmd_medial(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, err);
  auto m = medial(g);
  auto text = serialize_peg(m.graph);
  if (!o.output.empty()) write_file(o.output, text);
  if (o.json_out)
    out << json{{"vertices", m.graph.vertex_count()}, {"edges", m.graph.edge_count()}, {"faces", m.graph.face_count()},
                {"vertex_of_edge", m.vertex_of_edge}, {"peg", text}}
               .dump(2)
        << "\n";
  else if (o.output.empty())
    out << text;
  else
    out << "medial graph: " << m.graph.vertex_count() << " vertices, " << m.graph.edge_count() << " edges, "
        << m.graph.face_count() << " faces\n";
  return accept;
}

inline int cmd_gen(const Options& o, std::ostream& out, std::ostream&) {
  auto g = generate(o.family, o.params);
  auto text = serialize_peg(g);
  if (!o.output.empty()) write_file(o.output, text);
  if (o.json_out)
    out << json{{"family", o.family}, {"params", o.params}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                {"faces", g.face_count()}, {"peg", text}}
               .dump(2)
        << "\n";
  else if (o.output.empty())
    out << text;
  return accept;
}

inline int cmd_distance(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load_graph(o.graph, err);
  if (o.edges.size() != 2) throw InputError("--edges takes two edge ids");
  const int e = o.edges[0], f = o.edges[1];
  g.check_edge(e);
  g.check_edge(f);
  FacialDistances dist(g);
  auto d = dist.distance(e, f);
  const bool within = dist.within(e, f, o.ell);
  if (o.json_out) {
    json j{{"e", e}, {"f", f}, {"ell", o.ell}, {"within", within}};
    j["distance"] = d ? json(*d) : json(nullptr);
    if (d) {
      j["face"] = dist.witness_face(e, f);
      j["trail"] = facial_trail(g, dist.witness_face(e, f), e, f);
    }
    out << j.dump(2) << "\n";
  } else if (d) {
    out << "distance = " << *d << " (face " << dist.witness_face(e, f) << ")\n";
  } else {
    out << "distance = inf\n";
  }
  return accept;
}

/// Runs one invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"facial edge-coloring toolkit", "facet"};
  app.require_subcommand(1);
  Options o;

  auto with_json = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "emit one JSON document"); };
  auto with_ell = [&](CLI::App* c) {
    c->add_option("--ell", o.ell, "facial distance bound")->check(CLI::Range(1, 1000));
  };
  auto with_graph = [&](CLI::App* c) { c->add_option("--graph", o.graph, "PEG file")->required(); };

  auto* verify_cmd = app.add_subcommand("verify", "check a coloring");
  with_graph(verify_cmd);
  verify_cmd->add_option("--coloring", o.coloring, "coloring file")->required();
  with_ell(verify_cmd);
  verify_cmd->add_option("--palette", o.palette, "number of colors (default 3*ell+1)")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--partial", o.partial, "allow uncolored edges");
  with_json(verify_cmd);

  auto* chi_cmd = app.add_subcommand("chi", "exact facial chromatic index");
  with_graph(chi_cmd);
  with_ell(chi_cmd);
  chi_cmd->add_option("--budget", o.budget, "search node budget")->check(CLI::PositiveNumber);
  chi_cmd->add_option("--dot", o.dot, "write the conflict graph as DOT");
  with_json(chi_cmd);

  auto* cn_cmd = app.add_subcommand("cn", "Nullstellensatz coefficients");
  cn_cmd->add_option("--lemma", o.lemma, "built-in polynomial")->check(CLI::IsMember(lemma_names()));
  cn_cmd->add_option("--pairs", o.pairs, "pairs file");
  with_json(cn_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "check reducibility certificates");
  reduce_cmd->add_option("--name", o.name, "built-in configuration")->check(CLI::IsMember(configuration_names()));
  reduce_cmd->add_option("--config", o.config, "configuration JSON");
  reduce_cmd->add_flag("--all", o.all, "every built-in configuration");
  with_json(reduce_cmd);

  auto* discharge_cmd = app.add_subcommand("discharge", "charges, rules and audit");
  with_graph(discharge_cmd);
  with_json(discharge_cmd);

  auto* structure_cmd = app.add_subcommand("structure", "structural predicates");
  with_graph(structure_cmd);
  with_json(structure_cmd);

  auto* medial_cmd = app.add_subcommand("medial", "medial graph");
  with_graph(medial_cmd);
  medial_cmd->add_option("-o,--output", o.output, "write PEG here");
  with_json(medial_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("--family", o.family, "cycle, k4, prism, theta, subdivided_k4 or random")->required();
  gen_cmd->add_option("--params", o.params, "family parameters (random: seed steps)");
  gen_cmd->add_option("-o,--output", o.output, "write PEG here");
  with_json(gen_cmd);

  auto* distance_cmd = app.add_subcommand("distance", "facial distance of two edges");
  with_graph(distance_cmd);
  distance_cmd->add_option("--edges", o.edges, "two edge ids")->expected(2)->required();
  with_ell(distance_cmd);
  with_json(distance_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? accept : usage;
  }

  try {
    thread_cap();
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (chi_cmd->parsed()) return cmd_chi(o, out, err);
    if (cn_cmd->parsed()) return cmd_cn(o, out, err);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out, err);
    if (discharge_cmd->parsed()) return cmd_discharge(o, out, err);
    if (structure_cmd->parsed()) return cmd_structure(o, out, err);
    if (medial_cmd->parsed()) return cmd_medial(o, out, err);
    if (gen_cmd->parsed()) return cmd_gen(o, out, err);
    if (distance_cmd->parsed()) return cmd_distance(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace facet::cli
