#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "facet/embedding.hpp"
#include "facet/peg.hpp"

namespace facet {

/// Edges of the host as nodes; two nodes are adjacent when the facial
/// distance of the edges is at most ell.
struct ConflictGraph {
  int ell = 0;
  std::vector<std::vector<int>> adj;  // sorted

  int size() const noexcept { return static_cast<int>(adj.size()); }
  bool adjacent(int a, int b) const {
    const auto& row = adj[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }
  int edge_count() const {
    std::size_t s = 0;
    for (const auto& row : adj) s += row.size();
    return static_cast<int>(s / 2);
  }
};

inline void check_ell(int ell) {
  if (ell < 1) throw PreconditionError("ell must be at least 1");
}

inline ConflictGraph conflict_graph(const EmbeddedGraph& g, int ell) {
  check_ell(ell);
  FacialDistances dist(g);
  ConflictGraph c;
  c.ell = ell;
  c.adj.resize(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = 0; f < g.edge_count(); ++f)
      if (e != f && dist.within(e, f, ell)) c.adj[static_cast<std::size_t>(e)].push_back(f);
  return c;
}

/// Conflicts between vertices: two vertices conflict when they occur on a
/// common face walk at cyclic distance at most ell.
inline std::vector<std::vector<int>> vertex_conflicts(const EmbeddedGraph& g, int ell) {
  check_ell(ell);
  std::vector<std::set<int>> sets(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& walk : g.faces()) {
    const int k = walk.length();
    for (int p = 0; p < k; ++p)
      for (int q = p + 1; q < k; ++q) {
        int a = walk.vertices[static_cast<std::size_t>(p)], b = walk.vertices[static_cast<std::size_t>(q)];
        if (a == b || std::min(q - p, k - (q - p)) > ell) continue;
        sets[static_cast<std::size_t>(a)].insert(b);
        sets[static_cast<std::size_t>(b)].insert(a);
      }
  }
  std::vector<std::vector<int>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

struct PartialColoring {
  std::vector<std::optional<int>> color;  // by edge id
  int palette = 0;

  PartialColoring() = default;
  PartialColoring(int edges, int palette_size)
      : color(static_cast<std::size_t>(edges)), palette(palette_size) {}

  bool colored(int e) const { return color[static_cast<std::size_t>(e)].has_value(); }
  int size() const noexcept { return static_cast<int>(color.size()); }
};

inline int default_palette(int ell) { return 3 * ell + 1; }

/// Coloring file: lines `c <edge> <color>`, '#' comments.
inline PartialColoring parse_coloring(std::string_view text, int edge_count, int palette) {
  PartialColoring pc(edge_count, palette);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::tokens_of(line);
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] != "c" || tok.size() != 3) throw InputError(where + "expected 'c <edge> <color>'");
    long long e = detail::parse_int(tok[1], line_no), c = detail::parse_int(tok[2], line_no);
    if (e < 0 || e >= edge_count) throw InputError(where + "edge id " + tok[1] + " out of range");
    if (c < 1 || c > 1000000000) throw InputError(where + "colors must be positive integers");
    if (pc.color[static_cast<std::size_t>(e)]) throw InputError(where + "edge " + tok[1] + " colored twice");
    pc.color[static_cast<std::size_t>(e)] = static_cast<int>(c);
  }
  return pc;
}

inline std::string serialize_coloring(const PartialColoring& pc) {
  std::ostringstream out;
  for (int e = 0; e < pc.size(); ++e)
    if (pc.colored(e)) out << "c " << e << ' ' << *pc.color[static_cast<std::size_t>(e)] << "\n";
  return out.str();
}

struct Violation {
  int e = 0, f = 0, color = 0;
  int face = -1, gap = 0;
  std::vector<int> trail;  // edges along the witnessing face, e first
};

struct Verdict {
  bool ok = true;
  int colors_used = 0;
  std::vector<Violation> violations;
  std::vector<int> uncolored;
};

/// Checks an edge coloring. Reports every conflicting pair (e < f) sharing a
/// color with a witnessing face, and uncolored edges when require_total.
inline Verdict verify(const EmbeddedGraph& g, int ell, const PartialColoring& pc, bool require_total) {
  check_ell(ell);
  if (pc.size() != g.edge_count())
    throw InputError("coloring covers " + std::to_string(pc.size()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  FacialDistances dist(g);
  Verdict v;
  std::set<int> used;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ce = pc.color[static_cast<std::size_t>(e)];
    if (!ce) {
      v.uncolored.push_back(e);
      continue;
    }
    if (*ce < 1) throw InputError("colors must be positive integers");
    used.insert(*ce);
    for (int f = e + 1; f < g.edge_count(); ++f) {
      const auto& cf = pc.color[static_cast<std::size_t>(f)];
      if (!cf || *cf != *ce || !dist.within(e, f, ell)) continue;
      Violation x;
      x.e = e;
      x.f = f;
      x.color = *ce;
      x.face = dist.witness_face(e, f);
      x.gap = *dist.distance(e, f);
      x.trail = facial_trail(g, x.face, e, f);
      v.violations.push_back(std::move(x));
    }
  }
  v.colors_used = static_cast<int>(used.size());
  v.ok = v.violations.empty() && (!require_total || v.uncolored.empty());
  return v;
}

/// Vertex-version check: same color on two vertices at facial distance <= ell.
/// Violations reuse the edge fields for the two vertices.
inline Verdict verify_vertex(const EmbeddedGraph& g, int ell, const std::vector<std::optional<int>>& color,
                             bool require_total) {
  check_ell(ell);
  if (static_cast<int>(color.size()) != g.vertex_count())
    throw InputError("vertex coloring covers " + std::to_string(color.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  Verdict v;
  std::set<int> used;
  for (int x = 0; x < g.vertex_count(); ++x) {
    const auto& c = color[static_cast<std::size_t>(x)];
    if (!c) v.uncolored.push_back(x);
    else used.insert(*c);
  }
  std::set<std::pair<int, int>> seen;
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& walk = g.faces()[static_cast<std::size_t>(f)];
    const int k = walk.length();
    for (int p = 0; p < k; ++p)
      for (int q = p + 1; q < k; ++q) {
        int a = walk.vertices[static_cast<std::size_t>(p)], b = walk.vertices[static_cast<std::size_t>(q)];
        int gap = std::min(q - p, k - (q - p));
        if (a == b || gap > ell) continue;
        const auto &ca = color[static_cast<std::size_t>(a)], &cb = color[static_cast<std::size_t>(b)];
        if (!ca || !cb || *ca != *cb) continue;
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
        Violation x;
        x.e = std::min(a, b);
        x.f = std::max(a, b);
        x.color = *ca;
        x.face = f;
        x.gap = gap;
        v.violations.push_back(std::move(x));
      }
  }
  v.colors_used = static_cast<int>(used.size());
  v.ok = v.violations.empty() && (!require_total || v.uncolored.empty());
  return v;
}

/// A(e) = palette minus the colors of colored edges in the ell-facial
/// neighbourhood of e. For a colored e its own color is not counted.
inline std::vector<std::vector<int>> available_colors(const EmbeddedGraph& g, int ell, const PartialColoring& pc) {
  auto verdict = verify(g, ell, pc, false);
  if (!verdict.violations.empty())
    throw PreconditionError("partial coloring is not proper (edges " + std::to_string(verdict.violations[0].e) +
                            " and " + std::to_string(verdict.violations[0].f) + ")");
  if (pc.palette < 1) throw PreconditionError("palette must be positive");
  auto conflicts = conflict_graph(g, ell);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<bool> blocked(static_cast<std::size_t>(pc.palette) + 1, false);
    for (int f : conflicts.adj[static_cast<std::size_t>(e)]) {
      const auto& c = pc.color[static_cast<std::size_t>(f)];
      if (c && *c <= pc.palette) blocked[static_cast<std::size_t>(*c)] = true;
    }
    for (int c = 1; c <= pc.palette; ++c)
      if (!blocked[static_cast<std::size_t>(c)]) out[static_cast<std::size_t>(e)].push_back(c);
  }
  return out;
}

struct RecolorResult {
  std::vector<int> candidates;
  std::vector<int> excluded_edges;  // colored neighbours of uv outside N(uu1) and N(uu2)
  std::vector<int> intersection;    // A(uu1) ∩ A(uu2)
  int uu1 = -1, uu2 = -1;
};

/// Colors from A(uu1) ∩ A(uu2) that uv can take, where u is a 3-vertex, uv is
/// colored and the other two edges uu1, uu2 at u are uncolored. A color is
/// dropped when it sits on a colored edge near uv but near neither uu1 nor uu2.
inline RecolorResult recolor_candidates(const EmbeddedGraph& g, int ell, const PartialColoring& pc, int u, int uv) {
  g.check_vertex(u);
  g.check_edge(uv);
  if (g.degree(u) != 3) throw PreconditionError("u must be a 3-vertex");
  if (g.is_loop(uv)) throw PreconditionError("uv must not be a loop");
  std::vector<int> others;
  bool incident = false;
  for (Dart d : g.rotation(u)) {
    if (d.edge() == uv) incident = true;
    else others.push_back(d.edge());
  }
  if (!incident) throw PreconditionError("uv is not incident with u");
  if (others.size() != 2 || others[0] == others[1]) throw PreconditionError("u must have three distinct edges");
  if (!pc.colored(uv)) throw PreconditionError("uv must be colored");
  if (pc.colored(others[0]) || pc.colored(others[1])) throw PreconditionError("uu1 and uu2 must be uncolored");

  auto avail = available_colors(g, ell, pc);
  auto conflicts = conflict_graph(g, ell);
  RecolorResult r;
  r.uu1 = others[0];
  r.uu2 = others[1];
  const auto &a1 = avail[static_cast<std::size_t>(r.uu1)], &a2 = avail[static_cast<std::size_t>(r.uu2)];
  std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(), std::back_inserter(r.intersection));

  std::set<int> excluded_colors;
  for (int f : conflicts.adj[static_cast<std::size_t>(uv)]) {
    if (f == r.uu1 || f == r.uu2 || !pc.colored(f)) continue;
    if (conflicts.adjacent(f, r.uu1) || conflicts.adjacent(f, r.uu2)) continue;
    r.excluded_edges.push_back(f);
    excluded_colors.insert(*pc.color[static_cast<std::size_t>(f)]);
  }
  for (int c : r.intersection)
    if (!excluded_colors.count(c)) r.candidates.push_back(c);
  return r;
}

}  // namespace facet
