#include <gtest/gtest.h>

#include <random>

#include "facet/facial_coloring.hpp"
#include "facet/generators.hpp"
#include "facet/surgery.hpp"

using namespace facet;

namespace {

std::vector<int> face_lengths(const EmbeddedGraph& g) {
  std::vector<int> out;
  for (const auto& f : g.faces()) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

int max_degree(const EmbeddedGraph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<std::optional<int>> through(const MedialResult& m, const PartialColoring& pc) {
  std::vector<std::optional<int>> out(static_cast<std::size_t>(m.graph.vertex_count()));
  for (int e = 0; e < pc.size(); ++e) out[static_cast<std::size_t>(m.vertex_of_edge[static_cast<std::size_t>(e)])] = pc.color[static_cast<std::size_t>(e)];
  return out;
}

}  // namespace

TEST(Surgery, ContractFaceOfK4) {
  auto g = k4();
  auto r = contract_face(g, 0);
  EXPECT_EQ(r.graph.vertex_count(), 2);
  EXPECT_EQ(r.graph.edge_count(), 3);
  EXPECT_EQ(r.graph.euler_characteristic(), 2);
  int dropped = 0;
  for (const auto& e : r.edge_map) dropped += !e.has_value();
  EXPECT_EQ(dropped, 3);
}

TEST(Surgery, ContractEveryPrismFace) {
  auto g = prism(4);
  for (int f = 0; f < g.face_count(); ++f) {
    auto r = contract_face(g, f);
    EXPECT_EQ(r.graph.vertex_count(), g.vertex_count() - 3);
    EXPECT_EQ(r.graph.edge_count(), g.edge_count() - 4);
    EXPECT_EQ(r.graph.face_count(), g.face_count() - 1);
  }
}

TEST(Surgery, ContractFaceKeepsFarDistances) {
  // other faces only lose edges, so surviving distances cannot grow
  auto g = prism(5);
  auto r = contract_face(g, 0);
  FacialDistances before(g), after(r.graph);
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = 0; f < g.edge_count(); ++f) {
      auto ne = r.edge_map[static_cast<std::size_t>(e)], nf = r.edge_map[static_cast<std::size_t>(f)];
      if (!ne || !nf) continue;
      auto d0 = before.distance(e, f), d1 = after.distance(*ne, *nf);
      if (d0) {
        ASSERT_TRUE(d1.has_value());
        EXPECT_LE(*d1, *d0);
      }
    }
}

TEST(Surgery, ContractEdge) {
  auto g = cycle_graph(6);
  auto r = contract_edge(g, 0);
  EXPECT_EQ(face_lengths(r.graph), (std::vector<int>{5, 5}));
  EXPECT_THROW(contract_edge(cycle_graph(1), 0), InputError);
}

TEST(Surgery, IdentifyOppositeEdgesOfOctagon) {
  auto g = cycle_graph(8);
  int face = g.face_of(dart_of(0, 0));
  auto r = identify_edges(g, 0, 4, face);
  EXPECT_EQ(r.graph.edge_count(), 7);
  EXPECT_EQ(r.graph.vertex_count(), 6);
  EXPECT_EQ(face_lengths(r.graph), (std::vector<int>{3, 3, 8}));
  EXPECT_EQ(r.edge_map[4], r.edge_map[0]);
}

TEST(Surgery, IdentifyErrors) {
  auto g = cycle_graph(8);
  int face = g.face_of(dart_of(0, 0));
  EXPECT_THROW(identify_edges(g, 0, 1, face), InputError);
  EXPECT_THROW(identify_edges(g, 0, 0, face), InputError);
  auto cube = prism(4);
  // a top edge and a bottom edge lie on no common face
  bool thrown = false;
  for (int e = 0; e < cube.edge_count() && !thrown; ++e)
    for (int f = 0; f < cube.edge_count() && !thrown; ++f) {
      if (facial_distance(cube, e, f)) continue;
      EXPECT_THROW(identify_edges(cube, e, f, 0), InputError);
      thrown = true;
    }
  EXPECT_TRUE(thrown);
}

TEST(Surgery, DeleteVertex) {
  auto g = k4();
  auto r = delete_vertex(g, 0);
  EXPECT_EQ(r.graph.vertex_count(), 3);
  EXPECT_EQ(face_lengths(r.graph), (std::vector<int>{3, 3}));
  EXPECT_FALSE(r.vertex_map[0].has_value());
}

TEST(Medial, K4IsOctahedron) {
  auto m = medial(k4());
  EXPECT_EQ(m.graph.vertex_count(), 6);
  EXPECT_EQ(m.graph.edge_count(), 12);
  EXPECT_EQ(face_lengths(m.graph), std::vector<int>(8, 3));
  for (int v = 0; v < 6; ++v) EXPECT_EQ(m.graph.degree(v), 4);
}

TEST(Medial, FacesCorrespondToFacesAndVertices) {
  for (const auto& ng : catalog_graphs()) {
    const auto& g = ng.graph;
    auto m = medial(g);
    EXPECT_EQ(m.graph.vertex_count(), g.edge_count());
    EXPECT_EQ(m.graph.edge_count(), 2 * g.edge_count());
    EXPECT_EQ(m.graph.face_count(), g.face_count() + g.vertex_count()) << ng.name;
  }
}

TEST(Medial, RefusesIsolatedVertex) {
  EmbeddedGraph g(1, {}, {{}});
  EXPECT_THROW(medial(g), PreconditionError);
}

TEST(Medial, EquivalenceOnSubcubicGraphs) {
  std::mt19937_64 rng(11);
  for (const auto& ng : catalog_graphs()) {
    auto m = medial(ng.graph);
    for (int ell = 1; ell <= 3; ++ell) {
      if (ell > 1 && max_degree(ng.graph) > 3) continue;
      for (int trial = 0; trial < 20; ++trial) {
        PartialColoring pc(ng.graph.edge_count(), 4);
        for (auto& c : pc.color) c = static_cast<int>(rng() % 4) + 1;
        EXPECT_EQ(verify(ng.graph, ell, pc, true).ok, verify_vertex(m.graph, ell, through(m, pc), true).ok)
            << ng.name << " ell=" << ell;
      }
    }
  }
}

TEST(Medial, VertexFacesAddConflictsAtDegreeFour) {
  // Conflict counts agree on a cubic host; the 4-regular medial graph, taken
  // as a host in turn, gains conflicts through its vertex-faces.
  auto g = prism(4);
  auto m = medial(g);
  auto medial_conflicts = vertex_conflicts(m.graph, 2);
  auto edge_conflicts = conflict_graph(g, 2);
  int extra = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    extra += static_cast<int>(medial_conflicts[static_cast<std::size_t>(m.vertex_of_edge[static_cast<std::size_t>(e)])].size()) -
             static_cast<int>(edge_conflicts.adj[static_cast<std::size_t>(e)].size());
  EXPECT_EQ(extra, 0);  // prism(4) is cubic
  auto big = medial(m.graph);
  EXPECT_GT(vertex_conflicts(big.graph, 2)[0].size(), conflict_graph(m.graph, 2).adj[0].size());
}
