#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "facet/discharging.hpp"
#include "facet/generators.hpp"
#include "facet/peg.hpp"

using namespace facet;

namespace {

using Point = std::pair<double, double>;

// Two vertices joined by internally disjoint paths drawn at distinct heights,
// listed top to bottom. Path k with length L has L - 1 inner vertices.
EmbeddedGraph multi_theta(const std::vector<int>& lengths) {
  std::vector<Point> pos{{-10, 0}, {10, 0}};
  std::vector<std::pair<int, int>> edges;
  const double top = static_cast<double>(lengths.size());
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    double h = top - 2.0 * static_cast<double>(k);
    int prev = 0;
    for (int i = 1; i < lengths[k]; ++i) {
      pos.emplace_back(-10 + 20.0 * i / lengths[k], h);
      int w = static_cast<int>(pos.size()) - 1;
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, 1);
  }
  return from_drawing(pos, edges);
}

EmbeddedGraph pentagonal_antiprism() {
  std::vector<Point> pos;
  for (int i = 0; i < 5; ++i) pos.emplace_back(std::cos(2 * M_PI * i / 5), std::sin(2 * M_PI * i / 5));
  for (int i = 0; i < 5; ++i) pos.emplace_back(3 * std::cos(2 * M_PI * (i + 0.5) / 5), 3 * std::sin(2 * M_PI * (i + 0.5) / 5));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 1) % 5);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back((i + 1) % 5, 5 + i);
  }
  return from_drawing(pos, edges);
}

bool segments_cross(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    return (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
  };
  double d1 = orient(a, b, c), d2 = orient(a, b, d), d3 = orient(c, d, a), d4 = orient(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    auto [xi, yi] = poly[i];
    auto [xj, yj] = poly[j];
    if ((yi > p.second) != (yj > p.second) && p.first < (xj - xi) * (p.second - yi) / (yj - yi) + xi) in = !in;
  }
  return in;
}

// Straight-line drawing with random non-crossing segments.
std::pair<std::vector<Point>, std::vector<std::pair<int, int>>> random_drawing(std::mt19937_64& rng, int n, int tries) {
  std::uniform_real_distribution<double> coord(0, 100);
  std::vector<Point> pos;
  for (int i = 0; i < n; ++i) pos.emplace_back(coord(rng), coord(rng));
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < tries; ++t) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), std::pair{a, b}) != edges.end()) continue;
    bool ok = true;
    for (auto [c, d] : edges) {
      if (c == a || c == b || d == a || d == b) continue;
      if (segments_cross(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)],
                         pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(d)]))
        ok = false;
    }
    if (ok) edges.emplace_back(a, b);
  }
  return {pos, edges};
}

// Geometric oracle: some simple cycle of length <= 7 has vertices strictly
// inside and outside its polygon.
bool geometric_separating(const std::vector<Point>& pos, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> path;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::function<bool(int)> grow = [&](int v) {
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == path[0] && path.size() >= 3) {
        std::vector<Point> poly;
        for (int x : path) poly.push_back(pos[static_cast<std::size_t>(x)]);
        int in = 0, out = 0;
        for (int x = 0; x < n; ++x)
          if (!on[static_cast<std::size_t>(x)]) (inside(poly, pos[static_cast<std::size_t>(x)]) ? in : out)++;
        if (in > 0 && out > 0) return true;
      }
      if (w < path[0] || on[static_cast<std::size_t>(w)] || path.size() >= 7) continue;
      on[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      if (grow(w)) return true;
      path.pop_back();
      on[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[static_cast<std::size_t>(s)] = true;
    if (grow(s)) return true;
    on[static_cast<std::size_t>(s)] = false;
  }
  return false;
}

}  // namespace

TEST(Charges, InitialValues) {
  auto c12 = initial_charges(cycle_graph(12));
  for (auto c : c12.vertex_initial) EXPECT_EQ(c, Charge(-2));
  for (auto c : c12.face_initial) EXPECT_EQ(c, Charge(6));
  EXPECT_EQ(c12.initial_total(), Charge(-12));
  auto k = initial_charges(k4());
  for (auto c : k.vertex_initial) EXPECT_EQ(c, Charge(0));
  EXPECT_EQ(k.initial_total(), Charge(-12));
  auto p = initial_charges(prism(3));
  EXPECT_EQ(p.initial_total(), Charge(-12));
}

TEST(Charges, DisconnectedRefused) {
  auto text = "peg 1\nvertices 4\nedges 2\ne 0 0 1\ne 1 2 3\nrot 0 0\nrot 1 1\nrot 2 2\nrot 3 3\n";
  EXPECT_THROW(initial_charges(parse_peg(text).graph), PreconditionError);
}

TEST(Rules, TwelveCycle) {
  auto L = apply_rules(cycle_graph(12), initial_charges(cycle_graph(12)));
  EXPECT_EQ(L.transfers.size(), 24u);
  for (const auto& t : L.transfers) {
    EXPECT_EQ(t.rule, "R5");
    EXPECT_EQ(t.amount, Charge(7, 6));
  }
  for (auto c : L.vertex_final) EXPECT_EQ(c, Charge(1, 3));
  for (auto c : L.face_final) EXPECT_EQ(c, Charge(-8));
  EXPECT_EQ(L.final_total(), Charge(-12));
  EXPECT_EQ(L.notes.size(), 1u);
}

TEST(Rules, TriangularPrismUnchanged) {
  auto g = prism(3);
  auto L = apply_rules(g, initial_charges(g));
  EXPECT_TRUE(L.transfers.empty());
  EXPECT_EQ(L.vertex_final, L.vertex_initial);
  EXPECT_EQ(L.face_final, L.face_initial);
}

TEST(Rules, FiveFaceRingedByFourVertices) {
  auto g = pentagonal_antiprism();
  auto L = apply_rules(g, initial_charges(g));
  int fives = 0;
  for (int f = 0; f < g.face_count(); ++f) {
    if (g.faces()[static_cast<std::size_t>(f)].length() != 5) continue;
    ++fives;
    EXPECT_EQ(L.face_final[static_cast<std::size_t>(f)], Charge(0));
  }
  EXPECT_EQ(fives, 2);
  for (const auto& t : L.transfers) {
    EXPECT_EQ(t.rule, "R1");
    EXPECT_EQ(t.amount, Charge(1, 5));
  }
}

TEST(Rules, SecondRuleCases) {
  // faces between consecutive paths: 3+4=7, 4+3=7, 3+5=8 and outer 5+3=8
  auto g = multi_theta({3, 4, 3, 5});
  auto L = apply_rules(g, initial_charges(g));
  int r2d = 0;
  for (const auto& t : L.transfers)
    if (t.rule == "R2d") {
      ++r2d;
      EXPECT_EQ(t.amount, Charge(2, 3));
      EXPECT_EQ(g.faces()[static_cast<std::size_t>(t.dst.id)].length(), 7);
    }
  EXPECT_EQ(r2d, 4);  // first inner vertex at each end of both 3-paths
  EXPECT_FALSE(L.gaps.empty());  // the 4-path sits between two 7-faces with n2 = 5
  EXPECT_EQ(L.final_total(), Charge(-12));

  // faces 6, 7, 9 and outer 8: the 3-paths see the 6-face, the 4-path sees 7 and 9
  auto h = multi_theta({3, 3, 4, 5});
  auto M = apply_rules(h, initial_charges(h));
  int r2a = 0;
  for (const auto& t : M.transfers) {
    if (t.rule == "R2a") {
      ++r2a;
      EXPECT_EQ(h.faces()[static_cast<std::size_t>(t.dst.id)].length(), 6);
    }
  }
  EXPECT_EQ(r2a, 4);
  EXPECT_EQ(std::count_if(M.transfers.begin(), M.transfers.end(), [](const Transfer& t) { return t.rule == "R2d"; }), 2);
}

TEST(Rules, ConservationAndPositivity) {
  std::vector<EmbeddedGraph> graphs;
  for (const auto& ng : catalog_graphs()) graphs.push_back(ng.graph);
  for (std::uint64_t s = 0; s < 100; ++s) graphs.push_back(random_plane_graph(s, 4 + static_cast<int>(s % 20), 5));
  for (const auto& g : graphs) {
    auto L = apply_rules(g, initial_charges(g));
    EXPECT_EQ(L.initial_total(), Charge(-12));
    EXPECT_EQ(L.final_total(), Charge(-12));
    for (const auto& t : L.transfers) EXPECT_GT(t.amount, Charge(0));
    for (auto c : L.vertex_final) EXPECT_EQ(30 % c.denominator(), 0);
    for (auto c : L.face_final) EXPECT_EQ(30 % c.denominator(), 0);
  }
}

TEST(Structure, SpecimenGraphs) {
  auto c7 = structure_report(cycle_graph(7));
  EXPECT_TRUE(c7.at("two_connected").holds);
  EXPECT_TRUE(c7.at("faces_at_least_5").holds);
  EXPECT_FALSE(c7.at("no_3_thread").holds);
  auto k = structure_report(k4());
  EXPECT_TRUE(k.at("no_separating_cycle").holds);
  EXPECT_FALSE(k.at("faces_at_least_5").holds);
  auto th = structure_report(theta(3, 3, 3));
  EXPECT_FALSE(th.at("six_face_2vertex").holds);
  EXPECT_FALSE(th.at("no_2thread_6minus").holds);
  EXPECT_THROW(th.at("nonsense"), InputError);
  auto cube = structure_report(prism(4));
  EXPECT_FALSE(cube.at("no_separating_cycle").holds);
  EXPECT_FALSE(structure_report(multi_theta({3, 4, 3, 5})).at("no_8_face").holds);
}

TEST(Structure, CutVertexAndLoops) {
  auto bowtie = from_drawing({{0, 0}, {-2, 1}, {-2, -1}, {2, 1}, {2, -1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  EXPECT_FALSE(structure_report(bowtie).at("two_connected").holds);
  EXPECT_FALSE(structure_report(cycle_graph(1)).at("loopless").holds);
}

TEST(Structure, SeparatingCycleMatchesGeometry) {
  std::mt19937_64 rng(31);
  int separating = 0, total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto [pos, edges] = random_drawing(rng, 6 + static_cast<int>(rng() % 6), 40);
    auto g = from_drawing(pos, edges);
    if (!g.is_connected()) continue;
    bool expect = geometric_separating(pos, edges);
    EXPECT_EQ(separating_cycle(g, 7).has_value(), expect) << "trial " << trial;
    separating += expect;
    ++total;
  }
  EXPECT_GT(total, 100);
  EXPECT_GT(separating, 10);
  EXPECT_LT(separating, total);
}

TEST(Audit, NoCatalogOrRandomGraphPassesEverything) {
  for (const auto& ng : catalog_graphs()) {
    auto r = audit(ng.graph);
    EXPECT_TRUE(r.conserved());
    EXPECT_EQ(r.verdict, AuditVerdict::structure_violated) << ng.name;
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto r = audit(random_plane_graph(s, 3 + static_cast<int>(s % 25), 5));
    EXPECT_FALSE(r.structure.all_hold());
    EXPECT_NE(r.verdict, AuditVerdict::consistent_counterexample);
  }
}

TEST(Audit, JsonSchema) {
  auto j = to_json(audit(cycle_graph(12)));
  for (const char* key : {"initial", "transfers", "final", "total", "gaps", "structure"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["total"]["num"], -12);
  EXPECT_EQ(j["total"]["den"], 1);
  EXPECT_EQ(j["transfers"][0]["num"], 7);
  EXPECT_EQ(j["transfers"][0]["den"], 6);
}
