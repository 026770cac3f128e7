#pragma once

// Exact vertex coloring by branch and bound, plus the edge-coloring wrappers
// built on conflict graphs.
//
// Nodes are visited in a fixed order (degree descending, id ascending). A
// node may take any color already in use or exactly one fresh color, which
// removes the symmetry between unused colors. The bound starts at the greedy
// solution and the search stops as soon as it meets the clique lower bound.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "facet/facial_coloring.hpp"

namespace facet {

enum class SolveStatus { exact, too_large };

inline const char* to_string(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "too_large"; }

struct GraphColoringResult {
  SolveStatus status = SolveStatus::exact;
  std::optional<int> chi;  // set iff status == exact
  int lower = 0, upper = 0;
  std::vector<int> witness;  // colors 1..upper by node
  std::uint64_t nodes = 0;
};

inline std::vector<int> degree_order(const std::vector<std::vector<int>>& adj) {
  std::vector<int> order(adj.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
  });
  return order;
}

/// First-fit coloring along `order`. Colors start at 1.
inline std::vector<int> first_fit(const std::vector<std::vector<int>>& adj, const std::vector<int>& order) {
  std::vector<int> color(adj.size(), 0);
  std::vector<int> mark(adj.size() + 2, -1);
  for (int v : order) {
    for (int w : adj[static_cast<std::size_t>(v)])
      if (color[static_cast<std::size_t>(w)] > 0) mark[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = v;
    int c = 1;
    while (mark[static_cast<std::size_t>(c)] == v) ++c;
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

/// Greedy clique: from each start node, add nodes in order while they stay
/// adjacent to everything chosen.
inline std::vector<int> greedy_clique(const std::vector<std::vector<int>>& adj, const std::vector<int>& order) {
  auto adjacent = [&](int a, int b) {
    const auto& row = adj[static_cast<std::size_t>(a)];
    return std::find(row.begin(), row.end(), b) != row.end();
  };
  std::vector<int> best;
  for (int start : order) {
    std::vector<int> clique{start};
    for (int v : order) {
      if (v == start) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](int c) { return adjacent(v, c); })) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

namespace detail {

class ColoringSearch {
 public:
  ColoringSearch(const std::vector<std::vector<int>>& adj, std::vector<int> order, std::uint64_t budget)
      : adj_(adj), order_(std::move(order)), budget_(budget), n_(static_cast<int>(adj.size())) {
    color_.assign(static_cast<std::size_t>(n_), 0);
    count_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 2), 0);
  }

  /// Looks for a coloring with fewer than `bound` colors. Returns false when
  /// the budget ran out.
  bool run(int bound, int lower) {
    bound_ = bound;
    lower_ = lower;
    found_.clear();
    aborted_ = false;
    dfs(0, 0);
    return !aborted_;
  }

  const std::vector<int>& found() const { return found_; }
  int bound() const { return bound_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int& count(int v, int c) {
    return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ + 2) + static_cast<std::size_t>(c)];
  }

  void dfs(int i, int used) {
    if (aborted_ || bound_ <= lower_ || used >= bound_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (i == n_) {
      found_ = color_;
      bound_ = used;
      return;
    }
    const int v = order_[static_cast<std::size_t>(i)];
    const int top = std::min(used + 1, bound_ - 1);
    for (int c = 1; c <= top; ++c) {
      if (count(v, c) > 0) continue;
      color_[static_cast<std::size_t>(v)] = c;
      for (int w : adj_[static_cast<std::size_t>(v)]) ++count(w, c);
      dfs(i + 1, std::max(used, c));
      for (int w : adj_[static_cast<std::size_t>(v)]) --count(w, c);
      color_[static_cast<std::size_t>(v)] = 0;
      if (aborted_ || bound_ <= lower_ || used >= bound_) return;
      if (c >= bound_ - 1) break;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> order_;
  std::uint64_t budget_;
  int n_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> found_;
  int bound_ = 0, lower_ = 0;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline constexpr std::uint64_t default_node_budget = 50'000'000;

/// Exact chromatic number of a simple graph given by adjacency lists. A hint
/// is an upper bound to try first; if no coloring within the hint exists the
/// search continues from the greedy bound.
inline GraphColoringResult chromatic_number(const std::vector<std::vector<int>>& adj,
                                            std::optional<int> hint = std::nullopt,
                                            std::uint64_t budget = default_node_budget) {
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v)
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w < 0 || w >= n) throw InputError("adjacency refers to node " + std::to_string(w));
      if (w == v) throw InputError("self-adjacent node " + std::to_string(v) + " cannot be colored");
    }
  GraphColoringResult r;
  if (n == 0) {
    r.chi = 0;
    return r;
  }
  auto order = degree_order(adj);
  auto greedy = first_fit(adj, order);
  int greedy_colors = *std::max_element(greedy.begin(), greedy.end());
  r.lower = static_cast<int>(greedy_clique(adj, order).size());
  r.upper = greedy_colors;
  r.witness = greedy;

  detail::ColoringSearch search(adj, order, budget);
  auto finish = [&](bool complete) {
    r.nodes = search.nodes();
    if (complete) {
      r.status = SolveStatus::exact;
      r.lower = r.upper;
      r.chi = r.upper;
    } else {
      r.status = SolveStatus::too_large;
    }
    return r;
  };

  if (hint && *hint >= r.lower && *hint < r.upper) {
    bool complete = search.run(*hint + 1, r.lower);
    if (!search.found().empty()) {
      r.witness = search.found();
      r.upper = search.bound();
      // Continue below the hint's solution.
    } else if (complete) {
      r.lower = std::max(r.lower, *hint + 1);
    } else {
      return finish(false);
    }
  }
  if (r.upper > r.lower) {
    bool complete = search.run(r.upper, r.lower);
    if (!search.found().empty()) {
      r.witness = search.found();
      r.upper = search.bound();
    }
    if (!complete) return finish(false);
  }
  return finish(true);
}

enum class OrderPolicy { natural, largest_first };

struct GreedyResult {
  PartialColoring coloring;
  int colors = 0;
};

/// First-fit edge coloring over the conflict graph. With a cap the palette is
/// limited and running out of colors is a PreconditionError.
inline GreedyResult greedy_color(const EmbeddedGraph& g, int ell, OrderPolicy policy = OrderPolicy::natural,
                                 std::optional<int> cap = std::nullopt) {
  auto conflicts = conflict_graph(g, ell);
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  if (policy == OrderPolicy::largest_first) order = degree_order(conflicts.adj);
  auto colors = first_fit(conflicts.adj, order);
  GreedyResult r;
  r.colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  if (cap && r.colors > *cap) throw PreconditionError("palette of " + std::to_string(*cap) + " colors exhausted");
  r.coloring = PartialColoring(g.edge_count(), cap ? *cap : r.colors);
  for (int e = 0; e < g.edge_count(); ++e) r.coloring.color[static_cast<std::size_t>(e)] = colors[static_cast<std::size_t>(e)];
  return r;
}

struct ChromaticIndexResult {
  SolveStatus status = SolveStatus::exact;
  std::optional<int> chi;
  int lower = 0, upper = 0;
  PartialColoring witness;
  std::uint64_t nodes = 0;
};

/// Exact ell-facial chromatic index. Self-conflicting edges cannot occur:
/// an edge is never at positive distance from itself.
inline ChromaticIndexResult chromatic_index(const EmbeddedGraph& g, int ell, std::optional<int> hint = std::nullopt,
                                            std::uint64_t budget = default_node_budget) {
  auto conflicts = conflict_graph(g, ell);
  auto res = chromatic_number(conflicts.adj, hint, budget);
  ChromaticIndexResult r;
  r.status = res.status;
  r.chi = res.chi;
  r.lower = res.lower;
  r.upper = res.upper;
  r.nodes = res.nodes;
  r.witness = PartialColoring(g.edge_count(), res.upper);
  for (int e = 0; e < g.edge_count(); ++e) r.witness.color[static_cast<std::size_t>(e)] = res.witness[static_cast<std::size_t>(e)];
  return r;
}

}  // namespace facet
