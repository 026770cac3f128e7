#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "facet/embedding.hpp"
#include "facet/generators.hpp"
#include "facet/peg.hpp"

using namespace facet;

namespace {

// Facial distance by breadth-first search on each face cycle, treating
// positions as nodes of a cycle graph.
std::optional<int> bfs_distance(const EmbeddedGraph& g, int e, int f) {
  if (e == f) return 0;
  std::optional<int> best;
  for (const auto& walk : g.faces()) {
    const int k = walk.length();
    std::vector<int> dist(static_cast<std::size_t>(k), -1);
    std::deque<int> q;
    for (int p = 0; p < k; ++p)
      if (walk.edges[static_cast<std::size_t>(p)] == e) {
        dist[static_cast<std::size_t>(p)] = 0;
        q.push_back(p);
      }
    while (!q.empty()) {
      int p = q.front();
      q.pop_front();
      for (int n : {(p + 1) % k, (p + k - 1) % k})
        if (dist[static_cast<std::size_t>(n)] < 0) {
          dist[static_cast<std::size_t>(n)] = dist[static_cast<std::size_t>(p)] + 1;
          q.push_back(n);
        }
    }
    for (int p = 0; p < k; ++p)
      if (walk.edges[static_cast<std::size_t>(p)] == f && dist[static_cast<std::size_t>(p)] >= 0)
        if (!best || dist[static_cast<std::size_t>(p)] < *best) best = dist[static_cast<std::size_t>(p)];
  }
  return best;
}

std::vector<int> face_lengths(const EmbeddedGraph& g) {
  std::vector<int> out;
  for (const auto& f : g.faces()) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Embedding, CycleHasTwoFaces) {
  auto g = cycle_graph(7);
  EXPECT_EQ(g.vertex_count(), 7);
  EXPECT_EQ(g.edge_count(), 7);
  EXPECT_EQ(face_lengths(g), (std::vector<int>{7, 7}));
  EXPECT_EQ(g.euler_characteristic(), 2);
}

TEST(Embedding, LoopAndDigon) {
  auto loop = cycle_graph(1);
  EXPECT_EQ(loop.face_count(), 2);
  EXPECT_TRUE(loop.is_loop(0));
  EXPECT_EQ(loop.degree(0), 2);
  auto digon = cycle_graph(2);
  EXPECT_EQ(face_lengths(digon), (std::vector<int>{2, 2}));
}

TEST(Embedding, K4Faces) {
  auto g = k4();
  EXPECT_EQ(face_lengths(g), (std::vector<int>{3, 3, 3, 3}));
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.neighbors(v).size(), 3u);
}

TEST(Embedding, DrawingMatchesGenerator) {
  auto drawn = from_drawing({{0, 0}, {0, 10}, {-9, -5}, {9, -5}}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  EXPECT_EQ(face_lengths(drawn), face_lengths(k4()));
}

TEST(Embedding, FacePermutationIsConsistent) {
  for (const auto& ng : catalog_graphs()) {
    const auto& g = ng.graph;
    int covered = 0;
    for (int f = 0; f < g.face_count(); ++f) {
      const auto& walk = g.faces()[static_cast<std::size_t>(f)];
      for (int i = 0; i < walk.length(); ++i) {
        Dart d = walk.darts[static_cast<std::size_t>(i)];
        EXPECT_EQ(g.face_of(d), f);
        EXPECT_EQ(g.position_in_face(d), i);
        EXPECT_EQ(g.face_predecessor(g.face_successor(d)), d);
        EXPECT_EQ(g.tail(walk.darts[static_cast<std::size_t>((i + 1) % walk.length())]), g.head(d));
        ++covered;
      }
    }
    EXPECT_EQ(covered, g.dart_count()) << ng.name;
  }
}

TEST(Embedding, RejectsBadRotations) {
  // dart listed at the wrong vertex
  EXPECT_THROW(EmbeddedGraph(2, {{0, 1}}, {{Dart{1}}, {Dart{0}}}), InputError);
  // dart missing
  EXPECT_THROW(EmbeddedGraph(2, {{0, 1}}, {{Dart{0}}, {}}), InputError);
  // dart repeated
  EXPECT_THROW(EmbeddedGraph(2, {{0, 1}}, {{Dart{0}, Dart{0}}, {Dart{1}}}), InputError);
}

TEST(Embedding, RejectsNonPlaneRotation) {
  // K4 with one rotation reversed lies on the torus
  auto g = k4();
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<Dart>> rot;
  for (int e = 0; e < g.edge_count(); ++e) ends.push_back(g.endpoints(e));
  for (int v = 0; v < g.vertex_count(); ++v) rot.emplace_back(g.rotation(v).begin(), g.rotation(v).end());
  std::reverse(rot[0].begin(), rot[0].end());
  EXPECT_THROW(EmbeddedGraph(4, ends, rot), InputError);
}

TEST(Peg, RoundTripCatalog) {
  for (const auto& ng : catalog_graphs()) {
    auto text = serialize_peg(ng.graph);
    auto back = parse_peg(text);
    EXPECT_TRUE(back.warnings.empty());
    EXPECT_EQ(back.graph, ng.graph) << ng.name;
    EXPECT_EQ(serialize_peg(back.graph), text);
  }
}

TEST(Peg, RoundTripRandom) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto g = random_plane_graph(s, 12);
    EXPECT_EQ(parse_peg(serialize_peg(g)).graph, g);
  }
}

TEST(Peg, ParseErrors) {
  EXPECT_THROW(parse_peg(""), InputError);
  EXPECT_THROW(parse_peg("peg 2\nvertices 1\nedges 0\nrot 0\n"), InputError);
  EXPECT_THROW(parse_peg("peg 1\nvertices 2\nedges 1\ne 0 0 5\nrot 0 0\nrot 1 1\n"), InputError);
  EXPECT_THROW(parse_peg("peg 1\nvertices 2\nedges 1\ne 0 0 1\nrot 0 0\n"), InputError);
  EXPECT_THROW(parse_peg("peg 1\nvertices x\n"), InputError);
}

TEST(Peg, DisconnectedWarns) {
  auto text = "peg 1\nvertices 4\nedges 2\ne 0 0 1\ne 1 2 3\nrot 0 0\nrot 1 1\nrot 2 2\nrot 3 3\n";
  auto p = parse_peg(text);
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_EQ(p.graph.component_count(), 2);
  EXPECT_EQ(p.graph.euler_characteristic(), 3);
}

TEST(FacialDistance, CycleValues) {
  auto g = cycle_graph(8);
  EXPECT_EQ(facial_distance(g, 0, 4), 4);
  EXPECT_EQ(facial_distance(g, 0, 5), 3);
  EXPECT_EQ(facial_distance(g, 2, 2), 0);
  EXPECT_EQ(facial_neighborhood(g, 3, 0), (std::vector<int>{1, 2, 3, 5, 6, 7}));
}

TEST(FacialDistance, DisjointFacesAreInfinite) {
  auto g = prism(4);
  // top and bottom quads of the cube share no face
  FacialDistances dist(g);
  int infinite = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = 0; f < g.edge_count(); ++f) infinite += !dist.distance(e, f).has_value();
  EXPECT_GT(infinite, 0);
}

TEST(FacialDistance, MatchesBfsOracle) {
  for (const auto& ng : catalog_graphs()) {
    FacialDistances dist(ng.graph);
    for (int e = 0; e < ng.graph.edge_count(); ++e)
      for (int f = 0; f < ng.graph.edge_count(); ++f) {
        auto expect = bfs_distance(ng.graph, e, f);
        EXPECT_EQ(dist.distance(e, f), expect) << ng.name << " " << e << " " << f;
        EXPECT_EQ(facial_distance(ng.graph, e, f), expect);
      }
  }
}

TEST(FacialDistance, TrailRealisesDistance) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = random_plane_graph(s, 10);
    FacialDistances dist(g);
    for (int e = 0; e < g.edge_count(); ++e)
      for (int f = 0; f < g.edge_count(); ++f) {
        auto d = dist.distance(e, f);
        if (!d || e == f) continue;
        auto trail = facial_trail(g, dist.witness_face(e, f), e, f);
        ASSERT_EQ(static_cast<int>(trail.size()), *d + 1);
        EXPECT_EQ(trail.front(), e);
        EXPECT_EQ(trail.back(), f);
      }
  }
}

TEST(FaceProfile, SubdividedK4) {
  auto g = subdivided_k4(3);
  int sevens = 0;
  for (const auto& p : face_profiles(g)) {
    if (p.length == 3) {
      EXPECT_EQ(p.n2, 0);
      continue;
    }
    ++sevens;
    EXPECT_EQ(p.length, 7);
    EXPECT_EQ(p.n2, 4);
    EXPECT_EQ(p.n2_thread, 4);
    EXPECT_EQ(p.two_sections, 2);
  }
  EXPECT_EQ(sevens, 3);
}
