#include <gtest/gtest.h>

#include <random>

#include "facet/choosability.hpp"

using namespace facet;

namespace {

// Tries every combination of list entries.
bool brute_colorable(const SimpleGraph& g, const ListAssignment& lists) {
  const int n = g.size();
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int w : g.neighbors(v))
        if (lists[static_cast<std::size_t>(v)][static_cast<std::size_t>(pick[static_cast<std::size_t>(v)])] ==
            lists[static_cast<std::size_t>(w)][static_cast<std::size_t>(pick[static_cast<std::size_t>(w)])])
          ok = false;
    if (ok) return true;
    int i = 0;
    while (i < n && ++pick[static_cast<std::size_t>(i)] == static_cast<int>(lists[static_cast<std::size_t>(i)].size()))
      pick[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

bool brute_sdr(const std::vector<std::vector<int>>& sets) {
  std::vector<int> used;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == sets.size()) return true;
    for (int c : sets[i]) {
      if (std::find(used.begin(), used.end(), c) != used.end()) continue;
      used.push_back(c);
      if (go(i + 1)) return true;
      used.pop_back();
    }
    return false;
  };
  return go(0);
}

SimpleGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return SimpleGraph(n, e);
}

}  // namespace

TEST(SimpleGraph, RejectsLoopsAndParallels) {
  EXPECT_THROW(SimpleGraph(2, {{0, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(2, {{0, 2}}), InputError);
}

TEST(Blocks, PathAndTriangles) {
  // two triangles sharing vertex 2, plus a pendant edge 4-5
  SimpleGraph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}});
  auto b = blocks(g);
  EXPECT_EQ(b.blocks.size(), 3u);
  EXPECT_EQ(b.cut_vertices, (std::vector<int>{2, 4}));
  EXPECT_TRUE(is_gallai_tree(g));
}

TEST(Blocks, GallaiTreeRecognition) {
  EXPECT_TRUE(is_gallai_tree(cycle(5)));
  EXPECT_FALSE(is_gallai_tree(cycle(4)));
  SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(is_gallai_tree(k4));
  SimpleGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(is_gallai_tree(diamond));
  EXPECT_THROW(is_gallai_tree(SimpleGraph(2)), PreconditionError);
}

TEST(ListColor, TriangleOnTwoColorsRefused) {
  auto g = cycle(3);
  ListAssignment lists(3, {1, 2});
  auto r = degree_feasible_colorable(g, lists);
  EXPECT_FALSE(r.theorem_applies);
  EXPECT_EQ(r.search.status, ListColorStatus::not_colorable);
}

TEST(ListColor, FourCycleOnTwoColors) {
  auto g = cycle(4);
  ListAssignment lists(4, {1, 2});
  auto r = degree_feasible_colorable(g, lists);
  EXPECT_TRUE(r.theorem_applies);
  ASSERT_EQ(r.search.status, ListColorStatus::colorable);
  for (int v = 0; v < 4; ++v) EXPECT_NE(r.search.coloring[static_cast<std::size_t>(v)], r.search.coloring[static_cast<std::size_t>((v + 1) % 4)]);
}

TEST(ListColor, ShortListsRefused) {
  EXPECT_THROW(degree_feasible_colorable(cycle(3), ListAssignment(3, {1})), PreconditionError);
}

TEST(ListColor, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) edges.push_back({a, b});
    SimpleGraph g(n, edges);
    ListAssignment lists(static_cast<std::size_t>(n));
    for (auto& l : lists) {
      int size = 1 + static_cast<int>(rng() % 3);
      while (static_cast<int>(l.size()) < size) {
        int c = 1 + static_cast<int>(rng() % 4);
        if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
      }
    }
    auto r = list_color(g, lists);
    EXPECT_EQ(r.status == ListColorStatus::colorable, brute_colorable(g, lists)) << "trial " << trial;
    if (r.status == ListColorStatus::colorable)
      for (int v = 0; v < n; ++v) {
        const auto& l = lists[static_cast<std::size_t>(v)];
        EXPECT_NE(std::find(l.begin(), l.end(), r.coloring[static_cast<std::size_t>(v)]), l.end());
      }
  }
}

TEST(Sdr, MatchesBruteForceAndHall) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
    for (auto& s : sets) {
      int size = static_cast<int>(rng() % 4);
      for (int i = 0; i < size; ++i) s.push_back(1 + static_cast<int>(rng() % 5));
    }
    auto r = sdr(sets);
    ASSERT_EQ(r.complete, brute_sdr(sets)) << "trial " << trial;
    if (r.complete) {
      std::set<int> distinct(r.representative.begin(), r.representative.end());
      EXPECT_EQ(static_cast<int>(distinct.size()), n);
      for (int i = 0; i < n; ++i) {
        const auto& s = sets[static_cast<std::size_t>(i)];
        EXPECT_NE(std::find(s.begin(), s.end(), r.representative[static_cast<std::size_t>(i)]), s.end());
      }
    } else {
      std::set<int> union_;
      for (int i : r.violator) union_.insert(sets[static_cast<std::size_t>(i)].begin(), sets[static_cast<std::size_t>(i)].end());
      EXPECT_LT(union_.size(), r.violator.size());
      EXPECT_EQ(std::vector<int>(union_.begin(), union_.end()), r.violator_colors);
    }
  }
}
