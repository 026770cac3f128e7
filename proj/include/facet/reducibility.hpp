#pragma once

// Reducible configurations with concrete hosts and machine checks.
//
// A configuration names a host graph, the reduction applied to it, and the
// edges X_1..X_n that carry polynomial variables. Variables whose edges are
// not in `uncolored` stay colored in the partial coloring (cap 1). Edges in
// one `same_color` group share a color, so they block one color between them.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "facet/choosability.hpp"
#include "facet/facial_coloring.hpp"
#include "facet/generators.hpp"
#include "facet/nullstellensatz.hpp"
#include "facet/peg.hpp"
#include "facet/surgery.hpp"

namespace facet {

struct SurgerySpec {
  std::string kind;           // contract_face | contract_edge | identify_edges | delete_vertices
  std::vector<int> edges;     // contract_edge: {e}; identify_edges: {e, f}
  std::vector<int> vertices;  // delete_vertices
  int face = -1;              // contract_face, identify_edges
};

struct Configuration {
  std::string name;
  EmbeddedGraph host;
  int ell = 3;
  int palette = 10;
  SurgerySpec surgery;
  std::vector<int> variables;  // host edge of X_1..X_n
  std::vector<int> uncolored;  // host edges left uncolored
  std::vector<int> bounds;     // claimed lower bound on |A(X_i)|
  std::vector<std::vector<int>> same_color;
  ConflictPairs pairs;         // transcribed conflicts, over variables
  std::optional<Monomial> target;
  std::optional<long long> published;
  std::string method;          // nullstellensatz | degree-choosability | hall | count
  std::optional<std::vector<int>> exact_counts;  // expected colored-neighbour slots per variable
  std::string note;
};

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::string name;
  bool passed = false;
  std::vector<CheckItem> checks;
  std::vector<int> slots;               // colored-neighbour slots per variable
  std::vector<int> recomputed_bounds;   // palette - slots (1 for colored variables)
  std::vector<std::pair<int, int>> derived_pairs;  // 0-based variables
  std::optional<BigInt> coefficient;
  std::optional<Witness> witness;
};

struct AuditRow {
  int edge = 0;
  int colored_neighbors = 0;  // color slots: a same-color group counts once
};

/// For each uncolored edge, the number of colored edges within facial
/// distance ell, with each same-color group counted once.
inline std::vector<AuditRow> neighborhood_audit(const EmbeddedGraph& g, int ell, const std::vector<int>& uncolored,
                                                const std::vector<std::vector<int>>& same_color = {}) {
  check_ell(ell);
  for (int e : uncolored) g.check_edge(e);
  std::vector<int> slot(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) slot[static_cast<std::size_t>(e)] = e;
  for (const auto& group : same_color) {
    for (int e : group) g.check_edge(e);
    if (group.empty()) continue;
    int rep = *std::min_element(group.begin(), group.end());
    for (int e : group) slot[static_cast<std::size_t>(e)] = rep;
  }
  std::set<int> open(uncolored.begin(), uncolored.end());
  FacialDistances dist(g);
  std::vector<AuditRow> out;
  for (int e : uncolored) {
    std::set<int> seen;
    for (int f = 0; f < g.edge_count(); ++f)
      if (f != e && !open.count(f) && dist.within(e, f, ell)) seen.insert(slot[static_cast<std::size_t>(f)]);
    out.push_back({e, static_cast<int>(seen.size())});
  }
  return out;
}

inline SurgeryResult apply_surgery(const EmbeddedGraph& g, const SurgerySpec& s) {
  if (s.kind == "contract_face") return contract_face(g, s.face);
  if (s.kind == "contract_edge") {
    if (s.edges.size() != 1) throw InputError("contract_edge takes one edge");
    return contract_edge(g, s.edges[0]);
  }
  if (s.kind == "identify_edges") {
    if (s.edges.size() != 2) throw InputError("identify_edges takes two edges");
    return identify_edges(g, s.edges[0], s.edges[1], s.face);
  }
  if (s.kind == "delete_vertices") return delete_vertices(g, s.vertices);
  throw InputError("unknown surgery '" + s.kind + "'");
}

namespace detail {

inline int face_with_edges(const EmbeddedGraph& g, int k) {
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& w = g.faces()[static_cast<std::size_t>(f)];
    if (w.length() == k && std::all_of(w.edges.begin(), w.edges.end(), [&](int e) { return e < k; })) return f;
  }
  throw std::logic_error("host face not found");
}

// A k-face v_0..v_{k-1} (edge i = v_i v_{i+1}) drawn on the unit circle.
// Every vertex not listed in `twos` gets a spoke to a surrounding ring;
// consecutive spokes are joined by ring paths of `ring_len` edges, so every
// face next to the central one has length at least 7.
inline EmbeddedGraph ringed_face(int k, const std::set<int>& twos, int ring_len = 4) {
  std::vector<std::pair<double, double>> pos;
  std::vector<std::pair<int, int>> edges;
  auto angle = [&](double i) { return std::numbers::pi / 2 - 2 * std::numbers::pi * i / k; };
  for (int i = 0; i < k; ++i) pos.emplace_back(std::cos(angle(i)), std::sin(angle(i)));
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  std::vector<int> spoked;
  std::map<int, int> ring_of;
  for (int i = 0; i < k; ++i) {
    if (twos.count(i)) continue;
    spoked.push_back(i);
    pos.emplace_back(3 * std::cos(angle(i)), 3 * std::sin(angle(i)));
    ring_of[i] = static_cast<int>(pos.size()) - 1;
    edges.emplace_back(i, ring_of[i]);
  }
  for (std::size_t s = 0; s < spoked.size(); ++s) {
    int i = spoked[s], j = spoked[(s + 1) % spoked.size()];
    double span = ((j - i) % k + k) % k;
    if (span == 0) span = k;
    int prev = ring_of[i];
    for (int t = 1; t < ring_len; ++t) {
      double a = angle(i + span * t / ring_len);
      pos.emplace_back(3 * std::cos(a), 3 * std::sin(a));
      int w = static_cast<int>(pos.size()) - 1;
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, ring_of[j]);
  }
  return from_drawing(pos, std::move(edges));
}

inline Configuration face_configuration(std::string name, int k, const std::set<int>& twos, int e, int f,
                                        std::vector<int> variables, std::vector<int> bounds, ConflictPairs pairs,
                                        Monomial target, std::optional<long long> published, std::string note) {
  Configuration c;
  c.name = std::move(name);
  c.host = ringed_face(k, twos);
  const int face = face_with_edges(c.host, k);
  c.surgery = {"identify_edges", {e, f}, {}, face};
  c.variables = std::move(variables);
  for (int i = 0; i < k; ++i)
    if (i != e && i != f) c.uncolored.push_back(i);
  c.bounds = std::move(bounds);
  c.same_color = {{e, f}};
  c.pairs = std::move(pairs);
  c.target = std::move(target);
  c.published = published;
  c.method = "nullstellensatz";
  c.note = std::move(note);
  return c;
}

}  // namespace detail

inline Configuration four_vertex_configuration() {
  // Centre v, its 2-neighbours v1..v4 clockwise, their other neighbours
  // v5..v8 on a ring whose arcs have three edges.
  std::vector<std::pair<double, double>> pos{{0, 0}};
  const double deg = std::numbers::pi / 180;
  const double angles[4] = {90 * deg, 0, -90 * deg, -180 * deg};
  for (double a : angles) pos.emplace_back(std::cos(a), std::sin(a));
  for (double a : angles) pos.emplace_back(2 * std::cos(a), 2 * std::sin(a));
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}};
  for (int i = 0; i < 4; ++i) {
    int prev = 5 + i;
    for (int t = 1; t < 3; ++t) {
      double a = angles[i] - (std::numbers::pi / 2) * t / 3;
      pos.emplace_back(2 * std::cos(a), 2 * std::sin(a));
      int w = static_cast<int>(pos.size()) - 1;
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, 5 + (i + 1) % 4);
  }
  Configuration c;
  c.name = "four-vertex";
  c.host = from_drawing(pos, std::move(edges));
  c.surgery = {"delete_vertices", {}, {0, 1, 2, 3, 4}, -1};
  c.variables = {0, 1, 2, 3, 4, 5, 6, 7};
  c.uncolored = c.variables;
  c.bounds = {4, 4, 4, 4, 4, 4, 4, 4};
  auto lp = lemma_polynomial("four-vertex");
  c.pairs = lp.pairs;
  c.target = lp.target;
  c.published = lp.published;
  c.method = "nullstellensatz";
  c.exact_counts = std::vector<int>(8, 6);
  c.note = "4-vertex with four 2-neighbours; delete v and v1..v4, extend to vv_i and v_iv_{i+4}";
  return c;
}

inline Configuration face_length_configuration() {
  Configuration c;
  c.name = "face-length-4";
  c.host = detail::ringed_face(4, {});
  c.surgery = {"contract_face", {}, {}, detail::face_with_edges(c.host, 4)};
  c.variables = {0, 1, 2, 3};
  c.uncolored = c.variables;
  c.bounds = {4, 4, 4, 4};
  c.pairs = ConflictPairs::one_based(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  c.method = "degree-choosability";
  c.exact_counts = std::vector<int>(4, 6);
  c.note = "4-face contracted; each face edge sees six colored edges";
  return c;
}

inline Configuration three_thread_configuration() {
  // Thread w-u1-v-u2-z; w and z attach to a surrounding square.
  std::vector<std::pair<double, double>> pos{{-2, 0}, {-1, 0}, {0, 0}, {1, 0}, {2, 0},
                                             {-3, 3}, {3, 3}, {3, -3}, {-3, -3}};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 8},
                                         {4, 6}, {4, 7}, {5, 6}, {6, 7}, {7, 8}, {8, 5}};
  Configuration c;
  c.name = "three-thread";
  c.host = from_drawing(pos, std::move(edges));
  c.surgery = {"contract_edge", {1}, {}, -1};
  c.variables = {1};
  c.uncolored = {1};
  c.bounds = {1};
  c.pairs = ConflictPairs(1, {});
  c.method = "count";
  c.exact_counts = std::vector<int>{9};
  c.note = "3-thread; contract u1v, nine colored edges leave one color";
  return c;
}

inline Configuration eight_face_configuration() {
  // Octahedral conflicts: all pairs except the three at distance 4.
  return detail::face_configuration(
      "eight-face", 8, {}, 0, 4, {1, 2, 3, 5, 6, 7}, {3, 3, 3, 3, 3, 3},
      ConflictPairs::one_based(6, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {4, 5},
                                   {4, 6}, {5, 6}}),
      Monomial{{2, 2, 2, 2, 2, 2}}, std::nullopt,
      "8-face; identify two edges at distance 4, six edges with three colors each");
}

inline Configuration nine_face_configuration() {
  // Face walk v1' v1 v2 v3 v4' v4 v5 v6 v7 with the 2-vertex v6.
  auto lp = lemma_polynomial("nine-face");
  return detail::face_configuration("nine-face", 9, {7}, 0, 4, {1, 2, 3, 5, 6, 7, 8}, lp.caps, lp.pairs, lp.target,
                                    lp.published, "9-face with a 2-vertex; identify v1v1' and v4v4'");
}

inline Configuration ten_face_configuration(const std::string& name) {
  auto lp = lemma_polynomial(name);
  std::vector<int> vars{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  if (name == "ten-face-adjacent")
    return detail::face_configuration(name, 10, {0, 1}, 3, 7, vars, lp.caps, lp.pairs, lp.target, lp.published,
                                      "10-face, 2-vertices v1 v2; identify v4v5 and v8v9");
  if (name == "ten-face-dist3")
    return detail::face_configuration(name, 10, {0, 3}, 4, 8, vars, lp.caps, lp.pairs, lp.target, lp.published,
                                      "10-face, 2-vertices v1 v4; identify v5v6 and v9v10");
  if (name == "ten-face-dist4")
    return detail::face_configuration(name, 10, {0, 4}, 4, 8, vars, lp.caps, lp.pairs, lp.target, lp.published,
                                      "10-face, 2-vertices v1 v5; identify v5v6 and v9v10");
  throw InputError("unknown ten-face case '" + name + "'");
}

inline std::vector<std::string> configuration_names() {
  return {"four-vertex", "face-length-4", "three-thread", "eight-face",
          "nine-face",   "ten-face-adjacent", "ten-face-dist3", "ten-face-dist4"};
}

inline Configuration configuration(const std::string& name) {
  if (name == "four-vertex") return four_vertex_configuration();
  if (name == "face-length-4") return face_length_configuration();
  if (name == "three-thread") return three_thread_configuration();
  if (name == "eight-face") return eight_face_configuration();
  if (name == "nine-face") return nine_face_configuration();
  if (name.rfind("ten-face-", 0) == 0) return ten_face_configuration(name);
  throw InputError("unknown configuration '" + name + "'");
}

inline std::vector<Configuration> catalog() {
  std::vector<Configuration> out;
  for (const auto& n : configuration_names()) out.push_back(configuration(n));
  return out;
}

inline void validate(const Configuration& c) {
  check_ell(c.ell);
  if (c.palette < 1) throw InputError("palette must be positive");
  const int n = static_cast<int>(c.variables.size());
  if (n > max_poly_vars) throw InputError("at most 16 variables");
  if (static_cast<int>(c.bounds.size()) != n) throw InputError("bounds must list one value per variable");
  if (c.pairs.vars != n) throw InputError("pairs must range over the variables");
  c.pairs.validate();
  std::set<int> vars;
  for (int e : c.variables) {
    c.host.check_edge(e);
    if (!vars.insert(e).second) throw InputError("edge " + std::to_string(e) + " is used by two variables");
  }
  for (int e : c.uncolored) {
    c.host.check_edge(e);
    if (!vars.count(e)) throw InputError("uncolored edge " + std::to_string(e) + " has no variable");
  }
  for (int b : c.bounds)
    if (b < 1) throw InputError("bounds must be positive");
  for (const auto& group : c.same_color)
    for (int e : group) c.host.check_edge(e);
  if (c.target && c.target->vars() != n) throw InputError("target must have one exponent per variable");
  if (c.exact_counts && static_cast<int>(c.exact_counts->size()) != n)
    throw InputError("exact_counts must list one value per variable");
  static const std::set<std::string> methods{"nullstellensatz", "degree-choosability", "hall", "count"};
  if (!methods.count(c.method)) throw InputError("unknown method '" + c.method + "'");
}

inline CertificateReport check(const Configuration& c) {
  validate(c);
  CertificateReport r;
  r.name = c.name;
  const int n = static_cast<int>(c.variables.size());
  std::set<int> open(c.uncolored.begin(), c.uncolored.end());
  auto is_open = [&](int i) { return open.count(c.variables[static_cast<std::size_t>(i)]) > 0; };
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // Reduction: colored edges must survive so the smaller graph colors them.
  try {
    auto s = apply_surgery(c.host, c.surgery);
    std::vector<int> lost;
    for (int e = 0; e < c.host.edge_count(); ++e)
      if (!open.count(e) && !s.edge_map[static_cast<std::size_t>(e)]) lost.push_back(e);
    bool merged = true;
    for (const auto& group : c.same_color)
      for (int e : group)
        merged = merged && s.edge_map[static_cast<std::size_t>(e)] == s.edge_map[static_cast<std::size_t>(group.front())];
    std::ostringstream d;
    d << c.surgery.kind << ": " << s.graph.vertex_count() << " vertices, " << s.graph.edge_count() << " edges, "
      << s.graph.face_count() << " faces";
    if (!lost.empty()) d << "; colored edges lost: " << lost.size();
    if (!merged) d << "; same-color edges not merged";
    add("surgery", lost.empty() && merged, d.str());
  } catch (const Error& ex) {
    add("surgery", false, ex.what());
  }

  // Edges sharing a color must not conflict in the host.
  {
    FacialDistances dist(c.host);
    bool ok = true;
    std::ostringstream d;
    for (const auto& group : c.same_color)
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          auto gap = dist.distance(group[a], group[b]);
          d << "d(" << group[a] << "," << group[b] << ")=" << (gap ? std::to_string(*gap) : "inf") << ' ';
          if (gap && *gap <= c.ell) ok = false;
        }
    if (!c.same_color.empty()) add("same-color", ok, d.str());
  }

  // Neighbourhood counts.
  {
    auto rows = neighborhood_audit(c.host, c.ell, c.uncolored, c.same_color);
    std::map<int, int> count_of;
    for (const auto& row : rows) count_of[row.edge] = row.colored_neighbors;
    bool ok = true, exact = true;
    std::ostringstream d;
    for (int i = 0; i < n; ++i) {
      int slots = is_open(i) ? count_of[c.variables[static_cast<std::size_t>(i)]] : 0;
      int bound = is_open(i) ? c.palette - slots : 1;
      r.slots.push_back(slots);
      r.recomputed_bounds.push_back(bound);
      if (bound < c.bounds[static_cast<std::size_t>(i)]) ok = false;
      if (c.exact_counts && is_open(i) && slots != (*c.exact_counts)[static_cast<std::size_t>(i)]) exact = false;
      d << "X" << i + 1 << ":" << bound << "/" << c.bounds[static_cast<std::size_t>(i)] << ' ';
    }
    add("neighborhood", ok, d.str() + "(recomputed/claimed)");
    if (c.exact_counts) add("exact-counts", exact, "colored neighbour slots match the stated counts");
  }

  // Derived conflicts among uncolored variables must be transcribed.
  std::set<std::pair<int, int>> transcribed;
  for (auto [i, j] : c.pairs.pairs) transcribed.insert({std::min(i, j), std::max(i, j)});
  {
    FacialDistances dist(c.host);
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!is_open(i) || !is_open(j)) continue;
        if (!dist.within(c.variables[static_cast<std::size_t>(i)], c.variables[static_cast<std::size_t>(j)], c.ell))
          continue;
        r.derived_pairs.emplace_back(i, j);
        if (!transcribed.count({i, j})) missing.emplace_back(i, j);
      }
    std::ostringstream d;
    d << r.derived_pairs.size() << " derived, " << transcribed.size() << " transcribed";
    for (auto [i, j] : missing) d << "; missing (" << i + 1 << "," << j + 1 << ")";
    add("conflicts", missing.empty(), d.str());
  }
  ConflictPairs derived(n, r.derived_pairs);

  if (c.method == "nullstellensatz") {
    if (!c.target) {
      add("coefficient", false, "no target monomial");
    } else {
      auto coef = coefficient(c.pairs, *c.target);
      r.coefficient = coef.value;
      bool ok = !coef.degree_mismatch && coef.value != 0;
      std::string d = "coefficient = " + coef.value.str();
      if (coef.degree_mismatch) d += " (degree mismatch)";
      if (c.published) {
        ok = ok && coef.value == *c.published;
        d += ", published " + std::to_string(*c.published);
      }
      add("coefficient", ok, d);
      bool fits = true;
      for (int i = 0; i < n; ++i)
        fits = fits && c.target->exponents[static_cast<std::size_t>(i)] <= c.bounds[static_cast<std::size_t>(i)] - 1;
      add("exponents", fits, "k_i <= bound_i - 1 for " + to_string(*c.target));
    }
    r.witness = cn_witness(derived, c.bounds);
    add("derived-witness", r.witness.has_value(),
        r.witness ? to_string(r.witness->monomial) + " coefficient " + r.witness->coefficient.str()
                  : std::string("no monomial below the caps"));
  } else if (c.method == "degree-choosability" || c.method == "hall") {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (is_open(i)) idx.push_back(i);
    std::map<int, int> local;
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<int>(k);
    SimpleGraph h(static_cast<int>(idx.size()));
    for (auto [i, j] : r.derived_pairs) h.add_edge(local[i], local[j]);
    ListAssignment nested;
    for (int i : idx) {
      std::vector<int> l;
      for (int col = 1; col <= c.bounds[static_cast<std::size_t>(i)]; ++col) l.push_back(col);
      nested.push_back(l);
    }
    if (c.method == "degree-choosability") {
      bool sizes = true, strict = false;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        int b = c.bounds[static_cast<std::size_t>(idx[k])], d = h.degree(static_cast<int>(k));
        sizes = sizes && b >= d;
        strict = strict || b > d;
      }
      bool applies = sizes && h.is_connected() && (strict || !is_gallai_tree(h));
      add("degree-lists", applies,
          applies ? "|L| >= d everywhere and the theorem applies" : "degree-list hypotheses fail");
      bool found = applies && degree_feasible_colorable(h, nested).search.status == ListColorStatus::colorable;
      add("nested-lists", found, "lists [1..bound] colored by search");
    } else {
      bool clique = h.edge_count() == h.size() * (h.size() - 1) / 2;
      auto res = sdr(nested);
      add("hall", clique && res.complete,
          std::string(clique ? "" : "conflicts are not a clique; ") +
              (res.complete ? "nested lists have an SDR" : "Hall violator of size " + std::to_string(res.violator.size())));
    }
  } else {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && (!is_open(i) || r.recomputed_bounds[static_cast<std::size_t>(i)] >= 1);
    add("count", ok, "every uncolored edge keeps an available color");
  }

  r.passed = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckItem& x) { return x.passed; });
  return r;
}

// JSON schema --------------------------------------------------------------

inline nlohmann::json to_json(const Configuration& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["host"] = serialize_peg(c.host);
  j["ell"] = c.ell;
  j["palette"] = c.palette;
  nlohmann::json s{{"kind", c.surgery.kind}};
  if (!c.surgery.edges.empty()) s["edges"] = c.surgery.edges;
  if (!c.surgery.vertices.empty()) s["vertices"] = c.surgery.vertices;
  if (c.surgery.face >= 0) s["face"] = c.surgery.face;
  j["surgery"] = s;
  j["variables"] = c.variables;
  j["uncolored"] = c.uncolored;
  j["bounds"] = c.bounds;
  j["same_color"] = c.same_color;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : c.pairs.pairs) pairs.push_back({a + 1, b + 1});
  j["pairs"] = pairs;
  if (c.target) j["target"] = c.target->exponents;
  if (c.published) j["published"] = *c.published;
  j["method"] = c.method;
  if (c.exact_counts) j["exact_counts"] = *c.exact_counts;
  j["note"] = c.note;
  return j;
}

inline Configuration configuration_from_json(const nlohmann::json& j) {
  try {
    Configuration c;
    c.name = j.at("name").get<std::string>();
    c.host = parse_peg(j.at("host").get<std::string>()).graph;
    c.ell = j.value("ell", 3);
    c.palette = j.value("palette", default_palette(c.ell));
    const auto& s = j.at("surgery");
    c.surgery.kind = s.at("kind").get<std::string>();
    c.surgery.edges = s.value("edges", std::vector<int>{});
    c.surgery.vertices = s.value("vertices", std::vector<int>{});
    c.surgery.face = s.value("face", -1);
    c.variables = j.at("variables").get<std::vector<int>>();
    c.uncolored = j.value("uncolored", c.variables);
    c.bounds = j.at("bounds").get<std::vector<int>>();
    c.same_color = j.value("same_color", std::vector<std::vector<int>>{});
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs")) {
      auto v = p.get<std::vector<int>>();
      if (v.size() != 2) throw InputError("each pair must have two entries");
      pairs.emplace_back(v[0] - 1, v[1] - 1);
    }
    c.pairs = ConflictPairs(static_cast<int>(c.variables.size()), std::move(pairs));
    if (j.contains("target")) c.target = Monomial{j.at("target").get<std::vector<int>>()};
    if (j.contains("published")) c.published = j.at("published").get<long long>();
    c.method = j.at("method").get<std::string>();
    if (j.contains("exact_counts")) c.exact_counts = j.at("exact_counts").get<std::vector<int>>();
    c.note = j.value("note", std::string{});
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("configuration schema: ") + ex.what());
  }
}

inline nlohmann::json to_json(const CertificateReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["slots"] = r.slots;
  j["recomputed_bounds"] = r.recomputed_bounds;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : r.derived_pairs) pairs.push_back({a + 1, b + 1});
  j["derived_pairs"] = pairs;
  if (r.coefficient) j["coefficient"] = r.coefficient->str();
  if (r.witness) {
    j["witness"] = {{"exponents", r.witness->monomial.exponents}, {"coefficient", r.witness->coefficient.str()}};
  }
  return j;
}

}  // namespace facet
