#pragma once

// Graph surgeries on embedded graphs. Every result is rebuilt through the
// EmbeddedGraph constructor, so a bad splice fails loudly instead of
// producing a non-plane rotation system.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "facet/embedding.hpp"

namespace facet {

struct SurgeryResult {
  EmbeddedGraph graph;
  std::vector<std::optional<int>> edge_map;    // old edge -> new edge
  std::vector<std::optional<int>> vertex_map;  // old vertex -> new vertex
  std::vector<std::string> warnings;
};

namespace detail {

// Darts clockwise after `d` at its tail, stopping before `stop` (or before
// returning to d when stop is d itself).
inline std::vector<Dart> arc_after(const EmbeddedGraph& g, Dart d, Dart stop) {
  std::vector<Dart> out;
  for (Dart x = g.next_clockwise(d); x != stop && x != d; x = g.next_clockwise(x)) out.push_back(x);
  return out;
}

// Builds the new graph from old-id data. `vertex_rep[v]` is the old vertex
// that v is merged into (or -1 if v is deleted); `edge_alive[e]` keeps the
// edge; `rotation_of[r]` gives the clockwise old darts at representative r.
// Surviving edges and vertices are renumbered in increasing old id.
inline SurgeryResult assemble(const EmbeddedGraph& g, const std::vector<int>& vertex_rep,
                              const std::vector<bool>& edge_alive,
                              const std::vector<std::vector<Dart>>& rotation_of) {
  const int n = g.vertex_count(), m = g.edge_count();
  SurgeryResult r;
  r.vertex_map.assign(static_cast<std::size_t>(n), std::nullopt);
  r.edge_map.assign(static_cast<std::size_t>(m), std::nullopt);

  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  int nv = 0;
  for (int v = 0; v < n; ++v)
    if (vertex_rep[static_cast<std::size_t>(v)] == v) new_id[static_cast<std::size_t>(v)] = nv++;
  for (int v = 0; v < n; ++v) {
    int rep = vertex_rep[static_cast<std::size_t>(v)];
    if (rep >= 0) r.vertex_map[static_cast<std::size_t>(v)] = new_id[static_cast<std::size_t>(rep)];
  }

  int ne = 0;
  std::vector<std::pair<int, int>> endpoints;
  for (int e = 0; e < m; ++e) {
    if (!edge_alive[static_cast<std::size_t>(e)]) continue;
    r.edge_map[static_cast<std::size_t>(e)] = ne++;
    auto [u, v] = g.endpoints(e);
    auto mu = r.vertex_map[static_cast<std::size_t>(u)], mv = r.vertex_map[static_cast<std::size_t>(v)];
    if (!mu || !mv) throw std::logic_error("surviving edge has a deleted endpoint");
    endpoints.emplace_back(*mu, *mv);
  }

  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(nv));
  for (int v = 0; v < n; ++v) {
    if (new_id[static_cast<std::size_t>(v)] < 0) continue;
    auto& rot = rotation[static_cast<std::size_t>(new_id[static_cast<std::size_t>(v)])];
    for (Dart d : rotation_of[static_cast<std::size_t>(v)]) {
      auto ne_id = r.edge_map[static_cast<std::size_t>(d.edge())];
      if (!ne_id) throw std::logic_error("rotation lists a dart of a removed edge");
      rot.push_back(dart_of(*ne_id, d.end()));
    }
  }
  r.graph = EmbeddedGraph(nv, std::move(endpoints), std::move(rotation));
  return r;
}

inline std::vector<std::vector<Dart>> copy_rotations(const EmbeddedGraph& g) {
  std::vector<std::vector<Dart>> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.emplace_back(g.rotation(v).begin(), g.rotation(v).end());
  return out;
}

inline void warn_if_split(const EmbeddedGraph& before, SurgeryResult& r) {
  if (before.is_connected() && !r.graph.is_connected())
    r.warnings.push_back("result is disconnected (" + std::to_string(r.graph.component_count()) + " components)");
}

}  // namespace detail

/// Removes the boundary edges of `face` and merges its vertices into the
/// smallest of them. Around the merged vertex the remaining darts of
/// boundary vertex v_i are kept as one clockwise arc; arcs follow the face
/// walk backwards (v_0, v_{k-1}, ..., v_1).
inline SurgeryResult contract_face(const EmbeddedGraph& g, int face) {
  g.check_face(face);
  const FaceWalk& walk = g.faces()[static_cast<std::size_t>(face)];
  std::vector<int> verts = walk.vertices;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) throw InputError("non-simple face");

  const int n = g.vertex_count(), m = g.edge_count(), k = walk.length();
  std::vector<bool> alive(static_cast<std::size_t>(m), true);
  for (int e : walk.edges) alive[static_cast<std::size_t>(e)] = false;

  const int rep = verts.front();
  std::vector<int> vertex_rep(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertex_rep[static_cast<std::size_t>(v)] = v;
  for (int v : verts) vertex_rep[static_cast<std::size_t>(v)] = rep;

  auto rotation_of = detail::copy_rotations(g);
  for (int v : verts) rotation_of[static_cast<std::size_t>(v)].clear();
  auto& merged = rotation_of[static_cast<std::size_t>(rep)];
  for (int step = 0; step < k; ++step) {
    int i = (k - step) % k;
    Dart out = walk.darts[static_cast<std::size_t>(i)];
    for (Dart x : detail::arc_after(g, out, out))
      if (alive[static_cast<std::size_t>(x.edge())]) merged.push_back(x);
  }
  auto r = detail::assemble(g, vertex_rep, alive, rotation_of);
  detail::warn_if_split(g, r);
  return r;
}

/// Contracts a single non-loop edge; the merged vertex keeps the smaller id.
inline SurgeryResult contract_edge(const EmbeddedGraph& g, int e) {
  g.check_edge(e);
  if (g.is_loop(e)) throw InputError("cannot contract a loop");
  auto [a, b] = g.endpoints(e);
  Dart dab = dart_of(e, 0), dba = dart_of(e, 1);

  std::vector<bool> alive(static_cast<std::size_t>(g.edge_count()), true);
  alive[static_cast<std::size_t>(e)] = false;
  const int rep = std::min(a, b), other = std::max(a, b);
  std::vector<int> vertex_rep(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) vertex_rep[static_cast<std::size_t>(v)] = v;
  vertex_rep[static_cast<std::size_t>(other)] = rep;

  auto rotation_of = detail::copy_rotations(g);
  std::vector<Dart> merged = detail::arc_after(g, dab, dab);
  for (Dart x : detail::arc_after(g, dba, dba)) merged.push_back(x);
  rotation_of[static_cast<std::size_t>(other)].clear();
  rotation_of[static_cast<std::size_t>(rep)] = std::move(merged);
  return detail::assemble(g, vertex_rep, alive, rotation_of);
}

/// Identifies two vertex-disjoint edges e and f lying on a common face.
/// With e traversed a->b and f traversed c->d along the face, d is merged
/// into a and c into b; e survives and f disappears. The face splits into
/// the cycle b..c and the cycle d..a. Clockwise at the merged vertices:
///   {a,d}: e, arc after e at a, arc after f at d
///   {b,c}: e, arc after f at c, arc after e at b
inline SurgeryResult identify_edges(const EmbeddedGraph& g, int e, int f, int face) {
  g.check_edge(e);
  g.check_edge(f);
  g.check_face(face);
  if (e == f) throw InputError("cannot identify an edge with itself");
  if (g.is_loop(e) || g.is_loop(f)) throw InputError("cannot identify loops");
  auto [e0, e1] = g.endpoints(e);
  auto [f0, f1] = g.endpoints(f);
  if (e0 == f0 || e0 == f1 || e1 == f0 || e1 == f1) throw InputError("edges share a vertex");

  const FaceWalk& walk = g.faces()[static_cast<std::size_t>(face)];
  std::optional<Dart> de, df;
  for (Dart d : walk.darts) {
    if (d.edge() == e) {
      if (de) throw InputError("edge " + std::to_string(e) + " occurs twice on the face");
      de = d;
    }
    if (d.edge() == f) {
      if (df) throw InputError("edge " + std::to_string(f) + " occurs twice on the face");
      df = d;
    }
  }
  if (!de || !df) throw InputError("edges are not on the same face");

  const Dart eab = *de, eba = eab.twin(), fcd = *df, fdc = fcd.twin();
  const int a = g.tail(eab), b = g.head(eab), c = g.tail(fcd), d = g.head(fcd);

  std::vector<bool> alive(static_cast<std::size_t>(g.edge_count()), true);
  alive[static_cast<std::size_t>(f)] = false;
  std::vector<int> vertex_rep(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) vertex_rep[static_cast<std::size_t>(v)] = v;
  const int ra = std::min(a, d), rb = std::min(b, c);
  vertex_rep[static_cast<std::size_t>(a)] = vertex_rep[static_cast<std::size_t>(d)] = ra;
  vertex_rep[static_cast<std::size_t>(b)] = vertex_rep[static_cast<std::size_t>(c)] = rb;

  auto rotation_of = detail::copy_rotations(g);
  std::vector<Dart> at_a{eab};
  for (Dart x : detail::arc_after(g, eab, eab)) at_a.push_back(x);
  for (Dart x : detail::arc_after(g, fdc, fdc)) at_a.push_back(x);
  std::vector<Dart> at_b{eba};
  for (Dart x : detail::arc_after(g, fcd, fcd)) at_b.push_back(x);
  for (Dart x : detail::arc_after(g, eba, eba)) at_b.push_back(x);
  for (int v : {a, b, c, d}) rotation_of[static_cast<std::size_t>(v)].clear();
  rotation_of[static_cast<std::size_t>(ra)] = std::move(at_a);
  rotation_of[static_cast<std::size_t>(rb)] = std::move(at_b);

  auto r = detail::assemble(g, vertex_rep, alive, rotation_of);
  r.edge_map[static_cast<std::size_t>(f)] = r.edge_map[static_cast<std::size_t>(e)];
  return r;
}

inline SurgeryResult delete_vertices(const EmbeddedGraph& g, std::vector<int> doomed) {
  for (int v : doomed) g.check_vertex(v);
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : doomed) gone[static_cast<std::size_t>(v)] = true;

  std::vector<bool> alive(static_cast<std::size_t>(g.edge_count()), true);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (gone[static_cast<std::size_t>(u)] || gone[static_cast<std::size_t>(v)]) alive[static_cast<std::size_t>(e)] = false;
  }
  std::vector<int> vertex_rep(static_cast<std::size_t>(g.vertex_count()));
  auto rotation_of = detail::copy_rotations(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertex_rep[static_cast<std::size_t>(v)] = gone[static_cast<std::size_t>(v)] ? -1 : v;
    auto& rot = rotation_of[static_cast<std::size_t>(v)];
    if (gone[static_cast<std::size_t>(v)]) {
      rot.clear();
      continue;
    }
    std::erase_if(rot, [&](Dart d) { return !alive[static_cast<std::size_t>(d.edge())]; });
  }
  auto r = detail::assemble(g, vertex_rep, alive, rotation_of);
  detail::warn_if_split(g, r);
  return r;
}

inline SurgeryResult delete_vertex(const EmbeddedGraph& g, int v) { return delete_vertices(g, {v}); }

struct MedialResult {
  EmbeddedGraph graph;
  std::vector<int> vertex_of_edge;  // edge of g -> medial vertex (identity numbering)
};

/// Medial graph: vertex e for every edge e of g, and medial edge d for every
/// dart d of g, joining edge(d) to edge(phi(d)). Medial dart 2d sits at
/// edge(d), dart 2d+1 at edge(phi(d)). Clockwise around medial vertex e with
/// darts t0 = 2e, t1 = 2e+1 of g:
///   leave along t0, arrive along t1, leave along t1, arrive along t0.
inline MedialResult medial(const EmbeddedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw PreconditionError("medial graph needs every vertex to have degree >= 1");
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> endpoints(static_cast<std::size_t>(2 * m));
  std::vector<int> pred(static_cast<std::size_t>(2 * m));
  for (int d = 0; d < 2 * m; ++d) {
    Dart next = g.face_successor(Dart{d});
    endpoints[static_cast<std::size_t>(d)] = {Dart{d}.edge(), next.edge()};
    pred[static_cast<std::size_t>(next.id)] = d;
  }
  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    const int t0 = 2 * e, t1 = 2 * e + 1;
    rotation[static_cast<std::size_t>(e)] = {Dart{2 * t0}, Dart{2 * pred[static_cast<std::size_t>(t1)] + 1},
                                             Dart{2 * t1}, Dart{2 * pred[static_cast<std::size_t>(t0)] + 1}};
  }
  MedialResult r{EmbeddedGraph(m, std::move(endpoints), std::move(rotation)), {}};
  r.vertex_of_edge.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) r.vertex_of_edge[static_cast<std::size_t>(e)] = e;
  return r;
}

}  // namespace facet
