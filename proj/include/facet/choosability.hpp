#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "facet/error.hpp"

namespace facet {

/// Simple undirected graph on nodes 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InputError("negative node count");
  }
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw InputError("simple graphs have no loops");
    auto& row = adj_[static_cast<std::size_t>(u)];
    if (std::find(row.begin(), row.end(), v) != row.end())
      throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    insert_sorted(row, v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  }

  int size() const noexcept { return static_cast<int>(adj_.size()); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const {
    check(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  bool adjacent(int u, int v) const {
    const auto& row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }
  int edge_count() const {
    std::size_t s = 0;
    for (const auto& row : adj_) s += row.size();
    return static_cast<int>(s / 2);
  }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }

  bool is_connected() const {
    if (adj_.empty()) return true;
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == size();
  }

 private:
  static void insert_sorted(std::vector<int>& row, int x) { row.insert(std::lower_bound(row.begin(), row.end(), x), x); }
  void check(int v) const {
    if (v < 0 || v >= size()) throw InputError("node " + std::to_string(v) + " out of range");
  }
  std::vector<std::vector<int>> adj_;
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;                    // sorted vertex sets
  std::vector<std::vector<std::pair<int, int>>> block_edges;
  std::vector<int> cut_vertices;                           // sorted
};

/// Blocks via the Hopcroft-Tarjan lowpoint DFS. Isolated vertices form
/// single-vertex blocks.
inline BlockDecomposition blocks(const SimpleGraph& g) {
  const int n = g.size();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::set<int> cuts;
  int time = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = time++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (disc[static_cast<std::size_t>(w)] < 0) {
        ++children;
        edge_stack.emplace_back(v, w);
        dfs(w, v);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
          if (parent >= 0 || children > 1) cuts.insert(v);
          std::vector<std::pair<int, int>> edges;
          std::set<int> verts;
          while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == std::pair<int, int>{v, w}) break;
          }
          std::sort(edges.begin(), edges.end());
          out.blocks.emplace_back(verts.begin(), verts.end());
          out.block_edges.push_back(std::move(edges));
        }
      } else if (w != parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
        edge_stack.emplace_back(v, w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[static_cast<std::size_t>(v)] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[static_cast<std::size_t>(v)] = time++;
      out.blocks.push_back({v});
      out.block_edges.emplace_back();
      continue;
    }
    dfs(v, -1);
  }
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

inline bool is_complete_block(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& edges) {
  const std::size_t k = verts.size();
  return edges.size() == k * (k - 1) / 2;
}

inline bool is_odd_cycle_block(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& edges) {
  // A 2-connected block with as many edges as vertices is a cycle.
  return verts.size() >= 3 && verts.size() % 2 == 1 && edges.size() == verts.size();
}

/// True iff every block is complete or an odd cycle. Disconnected graphs are
/// rejected.
inline bool is_gallai_tree(const SimpleGraph& g) {
  if (!g.is_connected()) throw PreconditionError("is_gallai_tree needs a connected graph");
  auto bd = blocks(g);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    if (!is_complete_block(bd.blocks[i], bd.block_edges[i]) && !is_odd_cycle_block(bd.blocks[i], bd.block_edges[i]))
      return false;
  return true;
}

using ListAssignment = std::vector<std::vector<int>>;

enum class ListColorStatus { colorable, not_colorable, too_large };

inline const char* to_string(ListColorStatus s) {
  switch (s) {
    case ListColorStatus::colorable: return "colorable";
    case ListColorStatus::not_colorable: return "not_colorable";
    default: return "too_large";
  }
}

struct ListColorResult {
  ListColorStatus status = ListColorStatus::not_colorable;
  std::vector<int> coloring;  // filled iff colorable
  std::uint64_t nodes = 0;
};

inline void check_lists(const SimpleGraph& g, const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.size())
    throw InputError("list assignment has " + std::to_string(lists.size()) + " lists for " +
                     std::to_string(g.size()) + " nodes");
}

/// Exhaustive backtracking: always branch on the uncolored node with the
/// fewest remaining colors (lowest id on ties), colors in ascending order.
inline ListColorResult list_color(const SimpleGraph& g, const ListAssignment& lists,
                                  std::uint64_t budget = 100'000'000) {
  check_lists(g, lists);
  const int n = g.size();
  std::vector<std::vector<int>> sorted(lists);
  for (auto& l : sorted) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  ListColorResult r;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  bool aborted = false;

  auto options = [&](int v) {
    int count = 0;
    for (int c : sorted[static_cast<std::size_t>(v)]) {
      bool free = true;
      for (int w : g.neighbors(v))
        if (color[static_cast<std::size_t>(w)] == c) {
          free = false;
          break;
        }
      count += free;
    }
    return count;
  };

  std::function<bool(int)> solve = [&](int remaining) -> bool {
    if (remaining == 0) return true;
    if (++r.nodes > budget) {
      aborted = true;
      return false;
    }
    int best = -1, best_options = 0;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] != 0) continue;
      int k = options(v);
      if (best < 0 || k < best_options) best = v, best_options = k;
      if (k == 0) return false;
    }
    for (int c : sorted[static_cast<std::size_t>(best)]) {
      bool free = true;
      for (int w : g.neighbors(best))
        if (color[static_cast<std::size_t>(w)] == c) {
          free = false;
          break;
        }
      if (!free) continue;
      color[static_cast<std::size_t>(best)] = c;
      if (solve(remaining - 1)) return true;
      color[static_cast<std::size_t>(best)] = 0;
      if (aborted) return false;
    }
    return false;
  };

  for (const auto& l : sorted)
    for (int c : l)
      if (c == 0) throw InputError("list colors must be nonzero");
  if (solve(n)) {
    r.status = ListColorStatus::colorable;
    r.coloring = color;
  } else {
    r.status = aborted ? ListColorStatus::too_large : ListColorStatus::not_colorable;
  }
  return r;
}

struct DegreeListResult {
  bool theorem_applies = false;  // some |L(v)| > d(v), or G is not a Gallai tree
  ListColorResult search;
};

/// Degree-list coloring. When the theorem's hypotheses guarantee a coloring
/// the search must find one; a failure there is a logic_error, never a
/// silent "not colorable". Otherwise the theorem is silent and the search
/// answers on its own.
inline DegreeListResult degree_feasible_colorable(const SimpleGraph& g, const ListAssignment& lists) {
  check_lists(g, lists);
  if (!g.is_connected()) throw PreconditionError("degree_feasible_colorable needs a connected graph");
  bool strict = false;
  for (int v = 0; v < g.size(); ++v) {
    std::set<int> distinct(lists[static_cast<std::size_t>(v)].begin(), lists[static_cast<std::size_t>(v)].end());
    int size = static_cast<int>(distinct.size());
    if (size < g.degree(v))
      throw PreconditionError("list of node " + std::to_string(v) + " is smaller than its degree");
    strict = strict || size > g.degree(v);
  }
  DegreeListResult r;
  r.theorem_applies = g.size() > 0 && (strict || !is_gallai_tree(g));
  r.search = list_color(g, lists);
  if (r.theorem_applies && r.search.status == ListColorStatus::not_colorable)
    throw std::logic_error("degree-list search failed where a coloring is guaranteed");
  return r;
}

struct SdrResult {
  bool complete = false;
  std::vector<int> representative;  // by node, filled iff complete
  std::vector<int> violator;        // nodes S with |N(S)| < |S|, iff !complete
  std::vector<int> violator_colors; // N(S)
};

/// Maximum matching between nodes and colors by augmenting paths. When some
/// node stays unmatched, the nodes reachable by alternating paths from the
/// unmatched ones form a Hall violator.
inline SdrResult sdr(const std::vector<std::vector<int>>& sets) {
  const int n = static_cast<int>(sets.size());
  std::map<int, int> index;
  std::vector<int> color_of;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::set<int> s(sets[static_cast<std::size_t>(i)].begin(), sets[static_cast<std::size_t>(i)].end());
    for (int c : s) {
      auto [it, fresh] = index.emplace(c, static_cast<int>(color_of.size()));
      if (fresh) color_of.push_back(c);
      adj[static_cast<std::size_t>(i)].push_back(it->second);
    }
  }
  std::vector<int> match_right(color_of.size(), -1), match_left(static_cast<std::size_t>(n), -1);
  std::vector<int> stamp(color_of.size(), -1);

  std::function<bool(int, int)> augment = [&](int u, int round) -> bool {
    for (int c : adj[static_cast<std::size_t>(u)]) {
      if (stamp[static_cast<std::size_t>(c)] == round) continue;
      stamp[static_cast<std::size_t>(c)] = round;
      int holder = match_right[static_cast<std::size_t>(c)];
      if (holder < 0 || augment(holder, round)) {
        match_right[static_cast<std::size_t>(c)] = u;
        match_left[static_cast<std::size_t>(u)] = c;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u) augment(u, u);

  SdrResult r;
  r.complete = std::all_of(match_left.begin(), match_left.end(), [](int c) { return c >= 0; });
  if (r.complete) {
    for (int u = 0; u < n; ++u) r.representative.push_back(color_of[static_cast<std::size_t>(match_left[static_cast<std::size_t>(u)])]);
    return r;
  }
  std::vector<bool> in_s(static_cast<std::size_t>(n), false), in_t(color_of.size(), false);
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (match_left[static_cast<std::size_t>(u)] < 0) {
      in_s[static_cast<std::size_t>(u)] = true;
      queue.push_back(u);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int c : adj[static_cast<std::size_t>(queue[head])]) {
      if (in_t[static_cast<std::size_t>(c)]) continue;
      in_t[static_cast<std::size_t>(c)] = true;
      int holder = match_right[static_cast<std::size_t>(c)];
      if (holder >= 0 && !in_s[static_cast<std::size_t>(holder)]) {
        in_s[static_cast<std::size_t>(holder)] = true;
        queue.push_back(holder);
      }
    }
  }
  for (int u = 0; u < n; ++u)
    if (in_s[static_cast<std::size_t>(u)]) r.violator.push_back(u);
  for (std::size_t c = 0; c < color_of.size(); ++c)
    if (in_t[c]) r.violator_colors.push_back(color_of[c]);
  std::sort(r.violator_colors.begin(), r.violator_colors.end());
  return r;
}

}  // namespace facet
