#include <gtest/gtest.h>

#include "facet/reducibility.hpp"

using namespace facet;

namespace {

int colored_neighbors(const EmbeddedGraph& g, int ell, int e, const std::vector<int>& uncolored) {
  int count = 0;
  for (int f = 0; f < g.edge_count(); ++f) {
    if (f == e || std::find(uncolored.begin(), uncolored.end(), f) != uncolored.end()) continue;
    auto d = facial_distance(g, e, f);
    count += d && *d <= ell;
  }
  return count;
}

const CheckItem* item(const CertificateReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Reducibility, EveryConfigurationCertifies) {
  for (const auto& c : catalog()) {
    auto r = check(c);
    EXPECT_TRUE(r.passed) << c.name;
    for (const auto& it : r.checks) EXPECT_TRUE(it.passed) << c.name << ": " << it.name << " " << it.detail;
    for (std::size_t i = 0; i < c.bounds.size(); ++i) EXPECT_GE(r.recomputed_bounds[i], c.bounds[i]) << c.name;
  }
}

TEST(Reducibility, PublishedCoefficientsReported) {
  for (const auto& name : {"four-vertex", "nine-face", "ten-face-adjacent", "ten-face-dist3", "ten-face-dist4"}) {
    auto c = configuration(name);
    auto r = check(c);
    ASSERT_TRUE(r.coefficient.has_value()) << name;
    EXPECT_EQ(*r.coefficient, BigInt(*c.published)) << name;
  }
}

TEST(Reducibility, ThreeThreadMiddleEdgeSeesNine) {
  auto c = configuration("three-thread");
  auto rows = neighborhood_audit(c.host, 3, c.uncolored);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].colored_neighbors, 9);
  EXPECT_EQ(colored_neighbors(c.host, 3, c.variables[0], c.uncolored), 9);
}

TEST(Reducibility, ContractedFaceEdgesSeeSix) {
  auto c = configuration("face-length-4");
  for (const auto& row : neighborhood_audit(c.host, 3, c.uncolored)) {
    EXPECT_LE(row.colored_neighbors, 6);
    EXPECT_EQ(row.colored_neighbors, colored_neighbors(c.host, 3, row.edge, c.uncolored));
  }
}

TEST(Reducibility, InflatedBoundIsCaught) {
  auto c = configuration("nine-face");
  c.bounds[0] += 1;
  auto r = check(c);
  EXPECT_FALSE(r.passed);
  auto it = item(r, "neighborhood");
  ASSERT_NE(it, nullptr);
  EXPECT_FALSE(it->passed);
}

TEST(Reducibility, MissingConflictIsCaught) {
  auto c = configuration("ten-face-adjacent");
  auto pairs = c.pairs.pairs;
  pairs.erase(pairs.begin());
  c.pairs = ConflictPairs(c.pairs.vars, pairs);
  auto r = check(c);
  EXPECT_FALSE(r.passed);
  auto it = item(r, "conflicts");
  ASSERT_NE(it, nullptr);
  EXPECT_FALSE(it->passed);
}

TEST(Reducibility, WrongPublishedValueIsCaught) {
  auto c = configuration("four-vertex");
  c.published = 7;
  EXPECT_FALSE(check(c).passed);
}

TEST(Reducibility, JsonRoundTrip) {
  for (const auto& c : catalog()) {
    auto back = configuration_from_json(nlohmann::json::parse(to_json(c).dump()));
    EXPECT_EQ(back.host, c.host);
    EXPECT_EQ(back.variables, c.variables);
    EXPECT_EQ(back.pairs.pairs, c.pairs.pairs);
    EXPECT_EQ(back.bounds, c.bounds);
    EXPECT_EQ(check(back).passed, check(c).passed);
  }
}

TEST(Reducibility, SchemaErrors) {
  auto j = to_json(configuration("eight-face"));
  auto broken = j;
  broken.erase("variables");
  EXPECT_THROW(configuration_from_json(broken), InputError);
  broken = j;
  broken["method"] = "magic";
  EXPECT_THROW(configuration_from_json(broken), InputError);
  broken = j;
  broken["pairs"] = {{1, 99}};
  EXPECT_THROW(configuration_from_json(broken), InputError);
  EXPECT_THROW(configuration("no-such"), InputError);
}
