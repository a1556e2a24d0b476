#include <doctest.h>

#include "fixtures.hpp"
#include "wcsd/online.hpp"

using namespace wcsd;

namespace {

QualityRank rk(const QualityGraph& g, double w) { return g.rank_for_threshold(w); }

}  // namespace

TEST_CASE("wc_bfs on the running example") {
  QualityGraph g = fixtures::gstar();
  FrontierState fs;
  CHECK(wc_bfs(g, 2, 5, rk(g, 2), fs) == 2);
  CHECK(wc_bfs(g, 0, 4, rk(g, 3), fs) == 4);
  CHECK(wc_bfs(g, 0, 0, rk(g, 5), fs) == 0);
  CHECK(wc_bfs(g, 0, 5, rk(g, 9), fs) == kInfDist);
  CHECK_THROWS_AS(wc_bfs(g, 0, 99, 0, fs), GraphError);
}

TEST_CASE("wc_dijkstra") {
  QualityGraph g = fixtures::gstar();
  FrontierState fs;
  SUBCASE("matches bfs under unit lengths") {
    CHECK(wc_dijkstra(g, 2, 5, rk(g, 2), fs) == 2);
    CHECK(wc_dijkstra(g, 1, 4, rk(g, 4), fs) == 3);  // v1-v2-v3-v4
  }
  SUBCASE("sums explicit lengths") {
    std::vector<RawEdge> edges = {{0, 1, 9, 5}, {1, 2, 9, 7}};
    QualityGraph h = QualityGraph::from_edges(edges, false);
    CHECK(wc_dijkstra(h, 0, 2, 0, fs) == 12);
  }
}

TEST_CASE("partitioned bfs") {
  QualityGraph g = fixtures::gstar();
  PartitionCache cache(g);
  FrontierState fs;
  CHECK(partitioned_bfs(cache, 2, 5, rk(g, 2), fs) == 2);
  CHECK(partitioned_bfs(cache, 0, 3, rk(g, 1), fs) == 1);
  // a threshold between qualities uses the next partition up
  CHECK(partitioned_bfs(cache, 2, 5, rk(g, 2.5), fs) == wc_bfs(g, 2, 5, rk(g, 2.5), fs));
  CHECK(partitioned_bfs(cache, 0, 5, g.top_rank(), fs) == kInfDist);
}

TEST_CASE("all pairs oracle") {
  QualityGraph g = fixtures::gstar();
  AllPairsOracle oracle(g);
  CHECK(oracle.at(0, 5, rk(g, 3)) == 5);
  CHECK(oracle.at(1, 3, rk(g, 4)) == 2);
  for (VertexId v = 0; v < 6; ++v) CHECK(oracle.at(v, v, 3) == 0);
  CHECK_THROWS_AS(AllPairsOracle(QualityGraph::generate_random(600, 900, 2, GenModel::kGnm, 0)),
                  GraphError);
}

TEST_CASE("baseline agreement and metric properties on random graphs") {
  FrontierState fs;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    QualityGraph g = QualityGraph::generate_random(20, 45, 4, GenModel::kGnm, seed);
    PartitionCache cache(g);
    AllPairsOracle oracle(g);
    VertexId n = g.num_vertices();
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) {
        Dist prev = 0;
        for (QualityRank w = 0; w < g.num_qualities(); ++w) {
          Dist d = wc_bfs(g, s, t, w, fs);
          CHECK(d == wc_dijkstra(g, s, t, w, fs));
          CHECK(d == partitioned_bfs(cache, s, t, w, fs));
          CHECK(d == oracle.at(s, t, w));
          CHECK(d == wc_bfs(g, t, s, w, fs));  // undirected symmetry
          CHECK(d >= prev);                    // monotone in the threshold
          prev = d;
        }
      }
    }
    // triangle inequality at a fixed threshold
    QualityRank w = g.num_qualities() / 2;
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) {
        for (VertexId u = 0; u < n; ++u) {
          Dist su = oracle.at(s, u, w), ut = oracle.at(u, t, w);
          if (su != kInfDist && ut != kInfDist) CHECK(oracle.at(s, t, w) <= su + ut);
        }
      }
    }
  }
}
