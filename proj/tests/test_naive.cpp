#include <doctest.h>

#include "fixtures.hpp"
#include "wcsd/naive_index.hpp"
#include "wcsd/online.hpp"
#include "wcsd/ordering.hpp"

using namespace wcsd;

TEST_CASE("naive labeling on the running example") {
  QualityGraph g = fixtures::gstar();
  PerThresholdIndex idx = build_naive(g, identity_order(6));
  CHECK(idx.thresholds.size() == 5);
  CHECK(query_naive(idx, 2, 5, g.rank_for_threshold(2)) == 2);
  CHECK(query_naive(idx, 0, 5, g.rank_for_threshold(3)) == 5);
  CHECK(query_naive(idx, 0, 4, g.rank_for_threshold(2)) == 3);
  CHECK(query_naive(idx, 3, 3, 2) == 0);
  CHECK(query_naive(idx, 0, 5, g.top_rank()) == kInfDist);
}

TEST_CASE("single edge graph") {
  std::vector<RawEdge> edges = {{0, 1, 4.0, 1}};
  QualityGraph g = QualityGraph::from_edges(edges, false);
  PerThresholdIndex idx = build_naive(g, identity_order(2));
  CHECK(idx.thresholds.size() == 1);
  REQUIRE(idx.labels[0][1].size() >= 1);
  CHECK(idx.labels[0][1][0].hub_rank == 0);
  CHECK(idx.labels[0][1][0].dist == 1);
}

TEST_CASE("per-vertex hub lists are rank-increasing and unique") {
  QualityGraph g = QualityGraph::generate_random(30, 70, 3, GenModel::kGnm, 11);
  PerThresholdIndex idx = build_naive(g, degree_order(g));
  for (const auto& sub : idx.labels) {
    for (const auto& l : sub) {
      for (std::size_t i = 1; i < l.size(); ++i) CHECK(l[i - 1].hub_rank < l[i].hub_rank);
    }
  }
}

TEST_CASE("naive agrees with the oracle on random graphs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    QualityGraph g = QualityGraph::generate_random(22, 50, 4, GenModel::kGnm, seed * 7 + 1);
    AllPairsOracle oracle(g);
    PerThresholdIndex idx = build_naive(g, degree_order(g));
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
      for (VertexId t = 0; t < g.num_vertices(); ++t) {
        for (QualityRank w = 0; w < g.num_qualities(); ++w) {
          CHECK(query_naive(idx, s, t, w) == oracle.at(s, t, w));
        }
      }
    }
  }
}

TEST_CASE("memory guard aborts oversized builds") {
  QualityGraph g = QualityGraph::generate_random(40, 120, 5, GenModel::kGnm, 2);
  CHECK_THROWS_AS(build_naive(g, degree_order(g), /*mem_cap_bytes=*/64), MemoryGuardError);
}
