#include <gtest/gtest.h>

#include <cmath>

#include "oracle/naive.hpp"
#include "qcube/cycle_search.hpp"
#include "qcube/extremal.hpp"

namespace qcube {
namespace {

std::uint64_t naive_path2(const Subgraph& g) {
  const int n = g.dimension();
  std::uint64_t total = 0;
  for (unsigned v = 0; v < (1u << n); ++v) {
    int d = 0;
    for (unsigned w = 0; w < (1u << n); ++w) d += oracle::adjacent(v, w) && g.contains(v, w);
    total += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d - 1) / 2;
  }
  return total;
}

TEST(Hv, SquareHasOneEdge) {
  const HvGraph h = build_hv(Subgraph::full(2), Vertex::parse("00"));
  ASSERT_EQ(h.vertices.size(), 2u);
  EXPECT_EQ(h.vertices[0].to_string(), "10");
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_EQ(h.edges[0].midpoint.to_string(), "11");
}

TEST(Hv, CubeGivesTriangle) {
  const HvGraph h = build_hv(Subgraph::full(3), Vertex::parse("000"));
  EXPECT_EQ(h.edges.size(), 3u);
  EXPECT_EQ(odd_cycles(h.adjacency, 3).size(), 1u);
}

TEST(Hv, MissingEdgesRemovePaths) {
  Subgraph g = Subgraph::full(3);
  g.remove(edge_between(Vertex::parse("110"), Vertex::parse("111")));
  g.remove(edge_between(Vertex::parse("100"), Vertex::parse("110")));
  const HvGraph h = build_hv(g, Vertex::parse("000"));
  EXPECT_EQ(h.edges.size(), 2u);  // 100-110-010 is gone
}

TEST(Hv, EmptyGraphGivesEmptyHv) {
  for (std::uint32_t v = 0; v < 8; ++v) EXPECT_TRUE(build_hv(Subgraph(3), Vertex(3, v)).edges.empty());
}

TEST(Path2, Examples) {
  EXPECT_EQ(path2_count(Subgraph::full(2)), 4u);
  Subgraph path(3);
  path.add(edge_between(Vertex::parse("000"), Vertex::parse("001")));
  path.add(edge_between(Vertex::parse("001"), Vertex::parse("011")));
  EXPECT_EQ(path2_count(path), 1u);
  const IdentityCheck q2 = verify_identity(Subgraph::full(2));
  EXPECT_EQ(q2.path_count, 4u);
  EXPECT_EQ(q2.hv_edge_total, 4u);
  EXPECT_EQ(path2_count(Subgraph::full(3)), 24u);
  EXPECT_EQ(path2_count(Subgraph(3)), 0u);
  EXPECT_EQ(path2_count(Subgraph::full(4)), 16u * 6u);
}

TEST(Identity, HoldsOnRandomAndExtremeSubgraphs) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Subgraph g = random_subgraph(4, 0.5, seed);
    const IdentityCheck c = verify_identity(g);
    EXPECT_TRUE(c.holds()) << seed;
    EXPECT_EQ(c.path_count, naive_path2(g)) << seed;
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(verify_identity(Subgraph(n)).holds());
    EXPECT_TRUE(verify_identity(Subgraph::full(n)).holds());
  }
}

TEST(RandomSubgraph, DeterministicAndExtremes) {
  EXPECT_EQ(random_subgraph(5, 0.3, 9), random_subgraph(5, 0.3, 9));
  EXPECT_EQ(random_subgraph(4, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(random_subgraph(4, 1.0, 1).edge_count(), 32u);
  EXPECT_THROW(random_subgraph(4, 1.5, 1), std::invalid_argument);
}

TEST(Lift, CubeTriangleLiftsToHexagon) {
  const LiftReport r = odd_cycle_lift_check(Subgraph::full(3), 1);
  EXPECT_TRUE(r.sound());
  EXPECT_EQ(r.odd_cycles, 8u);
  ASSERT_TRUE(r.first_witness);
  EXPECT_EQ(r.first_witness->center.to_string(), "000");
  const std::vector<std::string> hex{"100", "110", "010", "011", "001", "101"};
  EXPECT_EQ(r.first_witness->lifted.canonical(), Cycle::parse(hex).canonical());
}

TEST(Lift, RandomQ4SamplesAreSound) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_TRUE(odd_cycle_lift_check(random_subgraph(4, 0.7, seed), 1).sound()) << seed;
  }
  EXPECT_THROW(odd_cycle_lift_check(Subgraph::full(5), 1), GuardError);
}

TEST(Lift, SixCycleFreeSamplesHaveTriangleFreeHv) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const CycleFreeSample s = sample_cycle_free(4, 6, 0.5, seed);
    SearchQuery q;
    q.n = 4;
    q.length = 6;
    q.subgraph = std::make_shared<Subgraph>(s.graph);
    ASSERT_EQ(enumerate_cycles(q).count, 0u) << seed;
    for (std::uint32_t v = 0; v < 16; ++v) {
      EXPECT_TRUE(odd_cycles(build_hv(s.graph, Vertex(4, v)).adjacency, 3).empty()) << seed << " " << v;
    }
    const EdgeCapCheck cap = hv_edge_cap_check(s.graph, 1);
    EXPECT_TRUE(cap.premise_holds);
    EXPECT_TRUE(cap.cap_holds);
    EXPECT_LE(cap.max_hv_edges, 4u);
  }
}

TEST(Lift, EmptyGraphIsVacuous) {
  const LiftReport r = odd_cycle_lift_check(Subgraph(4), 1);
  EXPECT_EQ(r.odd_cycles, 0u);
  EXPECT_TRUE(r.sound());
  const EdgeCapCheck cap = hv_edge_cap_check(Subgraph(4), 1);
  EXPECT_TRUE(cap.premise_holds);
  EXPECT_TRUE(cap.cap_holds);
}

TEST(EdgeCap, CubeIsExempt) {
  const EdgeCapCheck cap = hv_edge_cap_check(Subgraph::full(3), 1);
  EXPECT_FALSE(cap.premise_holds);
  EXPECT_DOUBLE_EQ(cap.cap, 9.0 / 4.0);
}

TEST(UpperBound, SmallValues) {
  const BoundFormula f = upper_bound_edges(2);
  ASSERT_TRUE(f.e_max);
  EXPECT_DOUBLE_EQ(*f.e_max, 4.0);
  EXPECT_DOUBLE_EQ(f.ratio, 1.0);
}

TEST(UpperBound, RatioAtTen) {
  const BoundFormula f = upper_bound_edges(10);
  EXPECT_NEAR(f.ratio, (1.0 + std::sqrt(201.0)) / 20.0, 1e-15);
  EXPECT_NEAR(f.printed_a_bound, f.ratio, 1e-12);
  EXPECT_NEAR(*f.e_max, 256.0 * (1.0 + std::sqrt(201.0)), 1e-9);
}

TEST(UpperBound, Asymptotics) {
  const BoundFormula f = upper_bound_edges(10000);
  EXPECT_FALSE(f.e_max);
  EXPECT_NEAR(f.ratio, 1.0 / std::sqrt(2.0), 1e-3);
  double prev = 2.0;
  for (int n = 1; n <= 200; ++n) {
    const BoundFormula g = upper_bound_edges(n);
    EXPECT_LT(g.relative_residual, 1e-12) << n;
    EXPECT_LT(g.ratio, prev) << n;
    EXPECT_NEAR(g.printed_a_bound, g.ratio, 1e-12) << n;
    prev = g.ratio;
  }
}

TEST(BoundReport, FullCube) {
  const BoundReport r = bound_report(Subgraph::full(4));
  EXPECT_EQ(r.edges, 32u);
  EXPECT_EQ(r.path2, r.hv_edges);
  EXPECT_DOUBLE_EQ(r.rhs, 16.0 * 16.0 / 4.0);
  EXPECT_LE(r.cauchy_schwarz_lower, static_cast<double>(r.path2));
}

TEST(CycleFreeSample, FallbackProducesFreeGraph) {
  const CycleFreeSample s = sample_cycle_free(4, 6, 0.9, 3, 2);
  EXPECT_TRUE(s.fallback);
  EXPECT_GT(s.removed_edges, 0u);
  SearchQuery q;
  q.n = 4;
  q.length = 6;
  q.subgraph = std::make_shared<Subgraph>(s.graph);
  EXPECT_EQ(enumerate_cycles(q).count, 0u);
}

}  // namespace
}  // namespace qcube
