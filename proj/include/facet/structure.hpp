#pragma once

// Structural properties that a minimal counterexample to the 10-color bound
// for 3-facial edge-coloring must have. Each predicate is evaluated on the
// embedding alone; a failing predicate carries one witness.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "facet/embedding.hpp"

namespace facet {

struct StructurePredicate {
  std::string key;
  std::string statement;
  bool holds = true;
  std::string witness;  // empty when the predicate holds
};

struct StructureReport {
  std::vector<StructurePredicate> predicates;

  bool all_hold() const {
    return std::all_of(predicates.begin(), predicates.end(), [](const auto& p) { return p.holds; });
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& p : predicates)
      if (!p.holds) out.push_back(p.key);
    return out;
  }
  const StructurePredicate& at(const std::string& key) const {
    for (const auto& p : predicates)
      if (p.key == key) return p;
    throw InputError("unknown structure predicate '" + key + "'");
  }
};

namespace detail {

inline std::vector<int> face_vertex_set(const EmbeddedGraph& g, int f) {
  std::vector<int> v = g.faces()[static_cast<std::size_t>(f)].vertices;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<int> faces_at(const EmbeddedGraph& g, int v) {
  std::vector<int> out;
  for (Dart d : g.rotation(v)) out.push_back(g.face_of(d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int face_len(const EmbeddedGraph& g, int f) { return g.faces()[static_cast<std::size_t>(f)].length(); }

inline int count_two_vertices(const EmbeddedGraph& g, int f) {
  int c = 0;
  for (int v : face_vertex_set(g, f)) c += g.degree(v) == 2;
  return c;
}

inline bool has_cut_vertex(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int time = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = time++;
    int children = 0;
    for (Dart d : g.rotation(v)) {
      if (d.edge() == parent_edge) continue;
      int w = g.head(d);
      if (w == v) continue;
      if (disc[static_cast<std::size_t>(w)] < 0) {
        ++children;
        dfs(w, d.edge());
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (parent_edge >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) cut = true;
      } else {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
    if (parent_edge < 0 && children > 1) cut = true;
  };
  if (n > 0) dfs(0, -1);
  return cut;
}

// Simple cycles of length <= max_len as dart sequences, each reported once
// per direction, starting at their smallest vertex.
inline void for_each_short_cycle(const EmbeddedGraph& g, int max_len,
                                 const std::function<bool(const std::vector<Dart>&)>& visit) {
  const int n = g.vertex_count();
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::vector<Dart> path;
  bool stop = false;
  std::function<void(int, int)> extend = [&](int start, int v) {
    if (stop) return;
    for (Dart d : g.rotation(v)) {
      if (stop) return;
      if (!path.empty() && d.edge() == path.back().edge()) continue;
      int w = g.head(d);
      if (w == start) {
        if (path.empty() && d.end() == 1) continue;  // a loop, once
        path.push_back(d);
        if (visit(path)) stop = true;
        path.pop_back();
        continue;
      }
      if (w < start || on_path[static_cast<std::size_t>(w)] || static_cast<int>(path.size()) + 1 >= max_len) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(d);
      extend(start, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n && !stop; ++s) {
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
}

// Vertices off the cycle split into the two sides. Around cycle vertex c_i
// the darts clockwise from the outgoing dart up to the incoming one lie on
// one side, the rest on the other; a component of G - V(C) lies on the side
// of any dart reaching it.
inline std::pair<int, int> sides_of_cycle(const EmbeddedGraph& g, const std::vector<Dart>& cycle) {
  const int n = g.vertex_count();
  std::vector<int> on_cycle(static_cast<std::size_t>(n), 0);
  for (Dart d : cycle) on_cycle[static_cast<std::size_t>(g.tail(d))] = 1;
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  int counts[2] = {0, 0};
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    Dart out = cycle[i], in = cycle[(i + k - 1) % k].twin();
    int s = 0;
    for (Dart d = g.next_clockwise(out);; d = g.next_clockwise(d)) {
      if (d == in) {
        s = 1;
        if (in == out) break;
        continue;
      }
      if (d == out) break;
      int w = g.head(d);
      if (on_cycle[static_cast<std::size_t>(w)] || side[static_cast<std::size_t>(w)] >= 0) continue;
      // flood the component of G - V(C) containing w
      std::vector<int> stack{w};
      side[static_cast<std::size_t>(w)] = s;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++counts[s];
        for (Dart e : g.rotation(x)) {
          int y = g.head(e);
          if (on_cycle[static_cast<std::size_t>(y)] || side[static_cast<std::size_t>(y)] >= 0) continue;
          side[static_cast<std::size_t>(y)] = s;
          stack.push_back(y);
        }
      }
    }
  }
  return {counts[0], counts[1]};
}

inline std::string vertex_list(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

}  // namespace detail

/// Returns the vertices of a separating cycle of length <= max_len, if any.
inline std::optional<std::vector<int>> separating_cycle(const EmbeddedGraph& g, int max_len) {
  std::optional<std::vector<int>> found;
  detail::for_each_short_cycle(g, max_len, [&](const std::vector<Dart>& cycle) {
    auto [a, b] = detail::sides_of_cycle(g, cycle);
    if (a > 0 && b > 0) {
      std::vector<int> vs;
      for (Dart d : cycle) vs.push_back(g.tail(d));
      found = vs;
      return true;
    }
    return false;
  });
  return found;
}

inline StructureReport structure_report(const EmbeddedGraph& g) {
  using namespace detail;
  StructureReport rep;
  const int n = g.vertex_count();
  auto deg = [&](int v) { return g.degree(v); };
  auto add = [&](std::string key, std::string statement, std::optional<std::string> bad) {
    rep.predicates.push_back({std::move(key), std::move(statement), !bad.has_value(), bad.value_or("")});
  };
  auto two_neighbors = [&](int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (deg(w) == 2) out.push_back(w);
    return out;
  };
  auto other_neighbors = [&](int v, int exclude) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (w != exclude) out.push_back(w);
    return out;
  };
  auto count_4plus = [&](const std::vector<int>& vs) {
    return static_cast<int>(std::count_if(vs.begin(), vs.end(), [&](int w) { return deg(w) >= 4; }));
  };
  auto thread_on_face = [&](int f) {
    for (int v : face_vertex_set(g, f))
      if (in_two_thread(g, v)) return true;
    return false;
  };
  auto faces_of_edge = [&](int e) {
    std::vector<int> out{g.face_of(dart_of(e, 0)), g.face_of(dart_of(e, 1))};
    if (out[0] == out[1]) out.pop_back();
    return out;
  };
  // 2-threads as edges joining two 2-vertices.
  std::vector<int> thread_edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (a != b && deg(a) == 2 && deg(b) == 2) thread_edges.push_back(e);
  }

  {
    std::optional<std::string> bad;
    if (n < 3) bad = "fewer than 3 vertices";
    else if (!g.is_connected()) bad = "disconnected";
    else if (has_cut_vertex(g)) bad = "has a cut vertex";
    add("two_connected", "G is 2-connected", bad);
  }
  {
    std::optional<std::string> bad;
    for (int e = 0; e < g.edge_count() && !bad; ++e)
      if (g.is_loop(e)) bad = "loop " + std::to_string(e);
    add("loopless", "G is loopless", bad);
  }
  {
    std::optional<std::string> bad;
    for (int v = 0; v < n && !bad; ++v)
      if (deg(v) < 2) bad = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg(v));
    add("min_degree_2", "minimum degree at least 2", bad);
  }
  {
    std::optional<std::string> bad;
    for (int v = 0; v < n && !bad; ++v)
      if (deg(v) == 4 && two_neighbors(v).size() == 4) bad = "vertex " + std::to_string(v);
    add("four_vertex_two_neighbors", "a 4-vertex has at most three 2-neighbors", bad);
  }
  {
    auto c = separating_cycle(g, 7);
    add("no_separating_cycle", "no separating cycle of length at most 7",
        c ? std::optional<std::string>("cycle " + vertex_list(*c)) : std::nullopt);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f)
      if (face_len(g, f) < 5) bad = "face " + std::to_string(f) + " of length " + std::to_string(face_len(g, f));
    add("faces_at_least_5", "every face has length at least 5", bad);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f)
      if (face_len(g, f) == 5)
        for (int v : face_vertex_set(g, f))
          if (deg(v) < 4 && !bad) bad = "face " + std::to_string(f) + ", vertex " + std::to_string(v);
    add("five_face_4plus", "every 5-face is incident only with 4+-vertices", bad);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f)
      if (face_len(g, f) == 8) bad = "face " + std::to_string(f);
    add("no_8_face", "there are no 8-faces", bad);
  }
  {
    std::optional<std::string> bad;
    for (int v = 0; v < n && !bad; ++v)
      if (deg(v) == 2) {
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](int w) { return deg(w) >= 3; })) bad = "vertex " + std::to_string(v);
      }
    add("no_3_thread", "every 2-vertex has a 3+-neighbor", bad);
  }
  {
    // On an 8+-face, nothing within facial distance 3 of a thread vertex
    // (besides its mate) has degree 2.
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f) {
      const auto& w = g.faces()[static_cast<std::size_t>(f)].vertices;
      const int k = static_cast<int>(w.size());
      if (k < 8) continue;
      for (int p = 0; p < k && !bad; ++p) {
        int v = w[static_cast<std::size_t>(p)];
        if (deg(v) != 2) continue;
        for (int side : {-1, 1}) {
          int u = w[static_cast<std::size_t>(((p + side) % k + k) % k)];
          if (u == v || deg(u) != 2) continue;
          for (int off = -3; off <= 3; ++off) {
            int x = w[static_cast<std::size_t>(((p + off) % k + k) % k)];
            if (off == 0 || x == u || x == v) continue;
            if (deg(x) == 2 && !bad)
              bad = "face " + std::to_string(f) + ", thread " + std::to_string(u) + "-" + std::to_string(v) +
                    " near 2-vertex " + std::to_string(x);
          }
        }
      }
    }
    add("two_thread_8face", "on an 8+-face a 2-thread sees only 3+-vertices within distance 3", bad);
  }
  {
    std::optional<std::string> bad;
    for (int v = 0; v < n && !bad; ++v) {
      if (deg(v) != 2) continue;
      bool on6 = false;
      for (int f : faces_at(g, v)) on6 = on6 || face_len(g, f) == 6;
      if (!on6) continue;
      for (int w : g.neighbors(v))
        if (deg(w) < 4 && !bad) bad = "2-vertex " + std::to_string(v) + " on a 6-face, neighbor " + std::to_string(w);
    }
    add("six_face_2vertex", "both neighbors of a 2-vertex on a 6-face are 4+-vertices", bad);
  }
  {
    std::optional<std::string> bad;
    for (int e : thread_edges)
      for (int f : faces_of_edge(e))
        if (face_len(g, f) <= 6 && !bad) bad = "thread edge " + std::to_string(e) + " on face " + std::to_string(f);
    add("no_2thread_6minus", "no 2-thread is incident with a 6--face", bad);
  }
  {
    std::optional<std::string> bad;
    for (int v = 0; v < n && !bad; ++v) {
      if (deg(v) != 2) continue;
      auto fs = faces_at(g, v);
      if (std::none_of(fs.begin(), fs.end(), [&](int f) { return face_len(g, f) >= 7; }))
        bad = "vertex " + std::to_string(v);
    }
    add("two_vertex_7plus", "every 2-vertex is incident with a 7+-face", bad);
  }
  {
    std::optional<std::string> bad;
    for (int e : thread_edges) {
      auto fs = faces_of_edge(e);
      if (std::none_of(fs.begin(), fs.end(), [&](int f) { return face_len(g, f) == 7; })) continue;
      auto [a, b] = g.endpoints(e);
      auto outside = other_neighbors(a, b);
      for (int x : other_neighbors(b, a)) outside.push_back(x);
      if (count_4plus(outside) == 0) bad = "thread edge " + std::to_string(e);
      if (bad) break;
    }
    add("seven_face_2thread_4neighbor", "a 2-thread on a 7-face has a 4+-neighbor", bad);
  }
  {
    std::optional<std::string> bad;
    for (int e : thread_edges) {
      auto fs = faces_of_edge(e);
      int sevens = static_cast<int>(std::count_if(fs.begin(), fs.end(), [&](int f) { return face_len(g, f) == 7; }));
      if (sevens > 1) {
        bad = "thread edge " + std::to_string(e);
        break;
      }
    }
    add("two_thread_one_7face", "a 2-thread is incident with at most one 7-face", bad);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f) {
      if (face_len(g, f) != 7) continue;
      auto vs = face_vertex_set(g, f);
      int twos = count_two_vertices(g, f);
      bool thread = thread_on_face(f);
      for (int v : vs) {
        if (deg(v) != 2 || bad) continue;
        auto nb = g.neighbors(v);
        int four = count_4plus(nb);
        int two = static_cast<int>(std::count_if(nb.begin(), nb.end(), [&](int w) { return deg(w) == 2; }));
        if (thread && twos >= 3 && !((two >= 1 && four >= 1) || four >= 2))
          bad = "7-face " + std::to_string(f) + " with a thread, 2-vertex " + std::to_string(v);
        if (!thread && twos >= 2 && four == 0)
          bad = "7-face " + std::to_string(f) + " without a thread, 2-vertex " + std::to_string(v);
      }
    }
    add("seven_face_2vertices", "2-vertices on 7-faces with several 2-vertices have the required 4+-neighbors", bad);
  }
  {
    std::optional<std::string> bad;
    for (int v = 0; v < n && !bad; ++v) {
      if (deg(v) != 2) continue;
      auto fs = faces_at(g, v);
      for (int f6 : fs)
        for (int f7 : fs) {
          if (f6 == f7 || face_len(g, f6) != 6 || face_len(g, f7) != 7) continue;
          for (int u : face_vertex_set(g, f7))
            if (u != v && deg(u) < 3 && !bad)
              bad = "2-vertex " + std::to_string(v) + ", vertex " + std::to_string(u) + " on face " + std::to_string(f7);
        }
    }
    add("six_seven_shared", "a 7-face sharing a 2-vertex with a 6-face has no other 2-vertex", bad);
  }
  {
    std::optional<std::string> bad_pair, bad_three;
    for (int v = 0; v < n; ++v) {
      if (deg(v) != 2) continue;
      auto fs = faces_at(g, v);
      if (fs.size() != 2 || face_len(g, fs[0]) != 7 || face_len(g, fs[1]) != 7) continue;
      int a = count_two_vertices(g, fs[0]), b = count_two_vertices(g, fs[1]);
      if (a >= 2 && b >= 2 && count_4plus(g.neighbors(v)) < 2 && !bad_pair) bad_pair = "2-vertex " + std::to_string(v);
      if (((a >= 3 && b > 1) || (b >= 3 && a > 1)) && !bad_three) bad_three = "2-vertex " + std::to_string(v);
    }
    add("seven_seven_two_2vertices", "a 2-vertex shared by two 7-faces with two 2-vertices each has two 4+-neighbors",
        bad_pair);
    add("seven_seven_three_2vertices",
        "if a 7-face with three 2-vertices shares a 2-vertex v with another 7-face, v is the only 2-vertex there",
        bad_three);
  }
  {
    // Two 7-faces through a 2-vertex v with a 3-neighbor u and a 4+-neighbor w.
    std::optional<std::string> bad;
    FacialDistances dist(g);
    for (int v = 0; v < n && !bad; ++v) {
      if (deg(v) != 2) continue;
      auto fs = faces_at(g, v);
      auto nb = g.neighbors(v);
      if (fs.size() != 2 || nb.size() != 2) continue;
      for (int ui = 0; ui < 2 && !bad; ++ui) {
        int u = nb[static_cast<std::size_t>(ui)], w = nb[static_cast<std::size_t>(1 - ui)];
        if (deg(u) != 3 || deg(w) < 4) continue;
        int uv = -1, vw = -1;
        for (Dart d : g.rotation(v)) (g.head(d) == u ? uv : vw) = d.edge();
        for (int which = 0; which < 2 && !bad; ++which) {
          int a1 = fs[static_cast<std::size_t>(which)], a2 = fs[static_cast<std::size_t>(1 - which)];
          if (face_len(g, a1) != 7 || face_len(g, a2) != 7) continue;
          const auto& walk = g.faces()[static_cast<std::size_t>(a1)];
          // neighbours of u and w on the first face, other than v
          int uu1 = -1, u1 = -1, ww1 = -1;
          for (int p = 0; p < 7; ++p) {
            int x = walk.vertices[static_cast<std::size_t>(p)], e = walk.edges[static_cast<std::size_t>(p)];
            int y = walk.vertices[static_cast<std::size_t>((p + 1) % 7)];
            if (x == u && e != uv) uu1 = e, u1 = y;
            if (y == u && e != uv) uu1 = e, u1 = x;
            if (x == w && e != vw) ww1 = e;
            if (y == w && e != vw) ww1 = e;
          }
          if (uu1 < 0 || ww1 < 0) continue;
          std::vector<int> e1s;
          if (deg(u1) >= 3) {
            for (int e : walk.edges)
              if (e != uu1 && e != uv && e != vw) e1s.push_back(e);
          } else if (deg(u1) == 2) {
            e1s.push_back(ww1);
          }
          for (int e1 : e1s)
            for (int e2 : g.faces()[static_cast<std::size_t>(a2)].edges) {
              if (e2 == uv || e2 == vw || bad) continue;
              if (dist.within(e1, e2, 3))
                bad = "2-vertex " + std::to_string(v) + ", edges " + std::to_string(e1) + " and " + std::to_string(e2);
            }
        }
      }
    }
    add("seven_face_far_edges", "around a 2-vertex between two 7-faces the designated edges are not 3-facially adjacent",
        bad);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f)
      if (face_len(g, f) == 9 && count_two_vertices(g, f) > 0) bad = "face " + std::to_string(f);
    add("nine_face_no_2vertex", "no 9-face is incident with a 2-vertex", bad);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f)
      if (face_len(g, f) == 10 && count_two_vertices(g, f) > 2) bad = "face " + std::to_string(f);
    add("ten_face_two_2vertices", "every 10-face is incident with at most two 2-vertices", bad);
  }
  {
    std::optional<std::string> bad;
    for (int f = 0; f < g.face_count() && !bad; ++f) {
      auto p = face_profile(g, f);
      if (p.length < 8 || p.n2 == 0) continue;
      if (p.n2 > p.length / 2) bad = "face " + std::to_string(f) + ": n2 > k/2";
      else if (p.long_runs > 0) bad = "face " + std::to_string(f) + ": run of three 2-vertices";
      else if (p.two_sections > (p.length - 2 * p.one_sections) / 5) bad = "face " + std::to_string(f) + ": too many 2-sections";
      else if (p.length == 11 && p.two_sections > 0 && p.n2 > 4) bad = "face " + std::to_string(f) + ": 11-face with n2 > 4";
    }
    add("section_bounds", "n2 and section counts of 8+-faces obey the corollary bounds", bad);
  }
  return rep;
}

}  // namespace facet
