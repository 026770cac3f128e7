#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "facet/embedding.hpp"

namespace facet {

/// Straight-line drawing -> rotation system. Darts around each vertex are
/// sorted clockwise by angle, starting from the positive x axis.
inline EmbeddedGraph from_drawing(const std::vector<std::pair<double, double>>& pos,
                                  std::vector<std::pair<int, int>> edges) {
  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<std::pair<double, Dart>>> around(static_cast<std::size_t>(n));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [u, v] = edges[static_cast<std::size_t>(e)];
    if (u == v) throw InputError("straight-line drawings cannot contain loops");
    auto angle = [&](int from, int to) {
      return std::atan2(pos[static_cast<std::size_t>(to)].second - pos[static_cast<std::size_t>(from)].second,
                        pos[static_cast<std::size_t>(to)].first - pos[static_cast<std::size_t>(from)].first);
    };
    around[static_cast<std::size_t>(u)].emplace_back(angle(u, v), dart_of(e, 0));
    around[static_cast<std::size_t>(v)].emplace_back(angle(v, u), dart_of(e, 1));
  }
  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& list = around[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& item : list) rotation[static_cast<std::size_t>(v)].push_back(item.second);
  }
  return EmbeddedGraph(n, std::move(edges), std::move(rotation));
}

/// C_n; n = 1 is a loop, n = 2 a pair of parallel edges.
inline EmbeddedGraph cycle_graph(int n) {
  if (n < 1) throw InputError("cycle needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i)
    rotation[static_cast<std::size_t>(i)] = {dart_of(i, 0), dart_of((i + n - 1) % n, 1)};
  return EmbeddedGraph(n, std::move(edges), std::move(rotation));
}

/// K_4 drawn with a centre vertex 0 and outer triangle 1,2,3; the three
/// spokes at the centre are subdivided ell - 1 times each.
inline EmbeddedGraph subdivided_k4(int ell) {
  if (ell < 1) throw InputError("subdivided_k4 needs ell >= 1");
  std::vector<std::pair<double, double>> pos{{0.0, 0.0}};
  for (int i = 0; i < 3; ++i) {
    double a = std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3;
    pos.emplace_back(std::cos(a), std::sin(a));
  }
  std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 1}};
  for (int i = 1; i <= 3; ++i) {
    int prev = 0;
    for (int s = 1; s < ell; ++s) {
      double t = static_cast<double>(s) / ell;
      pos.emplace_back(t * pos[static_cast<std::size_t>(i)].first, t * pos[static_cast<std::size_t>(i)].second);
      int w = static_cast<int>(pos.size()) - 1;
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, i);
  }
  return from_drawing(pos, std::move(edges));
}

inline EmbeddedGraph k4() { return subdivided_k4(1); }

/// Two concentric n-gons (inner 0..n-1, outer n..2n-1) joined by spokes.
inline EmbeddedGraph prism(int n) {
  if (n < 3) throw InputError("prism needs n >= 3");
  std::vector<std::pair<double, double>> pos;
  for (int r = 1; r <= 2; ++r)
    for (int i = 0; i < n; ++i) {
      double a = 2 * std::numbers::pi * i / n;
      pos.emplace_back(r * std::cos(a), r * std::sin(a));
    }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return from_drawing(pos, std::move(edges));
}

/// Vertices 0 and 1 joined by three internally disjoint paths with a, b, c
/// edges. Internal vertices are numbered path by path.
inline EmbeddedGraph theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw InputError("theta needs a, b, c >= 1");
  std::vector<std::pair<int, int>> edges;
  int n = 2;
  std::vector<Dart> first, last;
  std::vector<std::vector<Dart>> rotation(2);
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int s = 1; s <= len; ++s) {
      int next = s == len ? 1 : n++;
      if (next != 1) rotation.emplace_back();
      int e = static_cast<int>(edges.size());
      edges.emplace_back(prev, next);
      if (s == 1) first.push_back(dart_of(e, 0));
      else rotation[static_cast<std::size_t>(prev)].push_back(dart_of(e, 0));
      if (s == len) last.push_back(dart_of(e, 1));
      else rotation[static_cast<std::size_t>(next)].push_back(dart_of(e, 1));
      prev = next;
    }
  }
  rotation[0] = first;
  rotation[1] = {last[2], last[1], last[0]};
  return EmbeddedGraph(n, std::move(edges), std::move(rotation));
}

/// Random 2-connected plane graph without faces shorter than `min_face`.
/// Starts from a cycle and repeatedly draws a path across a face between
/// two distinct boundary vertices.
inline EmbeddedGraph random_plane_graph(std::uint64_t seed, int steps, int min_face = 4) {
  if (min_face < 3) throw InputError("random_plane_graph needs min_face >= 3");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  EmbeddedGraph g = cycle_graph(uniform(min_face, min_face + 6));
  for (int step = 0; step < steps; ++step) {
    const auto& walk = g.faces()[static_cast<std::size_t>(uniform(0, g.face_count() - 1))];
    const int k = walk.length();
    std::vector<std::pair<int, int>> choices;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (walk.vertices[static_cast<std::size_t>(i)] != walk.vertices[static_cast<std::size_t>(j)])
          choices.emplace_back(i, j);
    if (choices.empty()) continue;
    auto [i, j] = choices[static_cast<std::size_t>(uniform(0, static_cast<int>(choices.size()) - 1))];
    const int gap = std::min(j - i, k - (j - i));
    const int len = std::max(uniform(1, 4), min_face - gap);

    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) edges.push_back(g.endpoints(e));
    std::vector<std::vector<Dart>> rotation;
    for (int v = 0; v < g.vertex_count(); ++v) rotation.emplace_back(g.rotation(v).begin(), g.rotation(v).end());

    const Dart di = walk.darts[static_cast<std::size_t>(i)], dj = walk.darts[static_cast<std::size_t>(j)];
    const int vi = walk.vertices[static_cast<std::size_t>(i)], vj = walk.vertices[static_cast<std::size_t>(j)];
    auto insert_before = [&](int v, Dart anchor, Dart fresh) {
      auto& rot = rotation[static_cast<std::size_t>(v)];
      rot.insert(std::find(rot.begin(), rot.end(), anchor), fresh);
    };

    int n = g.vertex_count(), prev = vi;
    std::vector<Dart> pending;
    for (int s = 1; s <= len; ++s) {
      int next = s == len ? vj : n++;
      if (next != vj) rotation.emplace_back();
      int e = static_cast<int>(edges.size());
      edges.emplace_back(prev, next);
      if (s == 1) insert_before(vi, di, dart_of(e, 0));
      else rotation[static_cast<std::size_t>(prev)].push_back(dart_of(e, 0));
      if (s == len) insert_before(vj, dj, dart_of(e, 1));
      else rotation[static_cast<std::size_t>(next)].push_back(dart_of(e, 1));
      prev = next;
    }
    g = EmbeddedGraph(n, std::move(edges), std::move(rotation));
  }
  return g;
}

/// Named families: cycle n | k4 | prism n | theta a b c | subdivided_k4 ell |
/// random seed steps.
inline EmbeddedGraph generate(const std::string& family, const std::vector<long long>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("family '" + family + "' takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
  };
  auto small = [&](long long x) {
    if (x < -1000000 || x > 1000000) throw InputError("parameter out of range");
    return static_cast<int>(x);
  };
  if (family == "cycle") return need(1), cycle_graph(small(params[0]));
  if (family == "k4") return need(0), k4();
  if (family == "prism") return need(1), prism(small(params[0]));
  if (family == "theta") return need(3), theta(small(params[0]), small(params[1]), small(params[2]));
  if (family == "subdivided_k4") return need(1), subdivided_k4(small(params[0]));
  if (family == "random") {
    need(2);
    if (params[1] < 0) throw InputError("random needs steps >= 0");
    return random_plane_graph(static_cast<std::uint64_t>(params[0]), small(params[1]));
  }
  throw InputError("unknown family '" + family + "'");
}

struct NamedGraph {
  std::string name;
  EmbeddedGraph graph;
};

/// Test catalog: cycles 3..14, K4, prism 3..5, theta(a,b,c) with
/// 1 <= a <= b <= c <= 4, subdivided K4 for ell = 1..3.
inline std::vector<NamedGraph> catalog_graphs() {
  std::vector<NamedGraph> out;
  for (int n = 3; n <= 14; ++n) out.push_back({"cycle(" + std::to_string(n) + ")", cycle_graph(n)});
  out.push_back({"k4", k4()});
  for (int n = 3; n <= 5; ++n) out.push_back({"prism(" + std::to_string(n) + ")", prism(n)});
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c)
        out.push_back({"theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                       theta(a, b, c)});
  for (int l = 1; l <= 3; ++l) out.push_back({"subdivided_k4(" + std::to_string(l) + ")", subdivided_k4(l)});
  return out;
}

}  // namespace facet
