#include <doctest.h>

#include <cstdio>

#include "fixtures.hpp"
#include "wcsd/ordering.hpp"

using namespace wcsd;

namespace {

QualityGraph path_graph(VertexId n) {
  std::vector<RawEdge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0, 1});
  return QualityGraph::from_edges(edges, false);
}

QualityGraph cycle_graph(VertexId n) {
  std::vector<RawEdge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1.0, 1});
  return QualityGraph::from_edges(edges, false);
}

}  // namespace

TEST_CASE("degree order") {
  SUBCASE("gstar") {
    VertexOrder o = degree_order(fixtures::gstar());
    CHECK(o.sequence == std::vector<VertexId>{3, 1, 0, 2, 4, 5});
  }
  SUBCASE("star center first") {
    std::vector<RawEdge> edges = {{4, 0, 1, 1}, {4, 1, 1, 1}, {4, 2, 1, 1}, {4, 3, 1, 1}};
    VertexOrder o = degree_order(QualityGraph::from_edges(edges, false));
    CHECK(o.sequence[0] == 4);
  }
  SUBCASE("all-equal degrees fall back to identity") {
    VertexOrder o = degree_order(cycle_graph(5));
    CHECK(o.sequence == std::vector<VertexId>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("order validity and inverses") {
  QualityGraph g = QualityGraph::generate_random(40, 90, 4, GenModel::kGnm, 3);
  for (const VertexOrder& o :
       {identity_order(40), random_order(40, 9), degree_order(g), mde_order(g).order,
        hybrid_order(g, degree_percentile(g, 99.0))}) {
    CHECK(o.valid_for(40));
  }
}

TEST_CASE("mde order and decomposition") {
  SUBCASE("3-path eliminates endpoints first, width 1") {
    auto [order, td] = mde_order(path_graph(3));
    CHECK(td.width == 1);
    CHECK(td.elimination_sequence[0] == 0);  // degree tie broken by lowest id
    CHECK(td.bags[0] == std::vector<VertexId>{0, 1});
    CHECK(td.validate(path_graph(3)));
  }
  SUBCASE("triangle width 2, lowest id first") {
    std::vector<RawEdge> edges = {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 1, 1}};
    QualityGraph g = QualityGraph::from_edges(edges, false);
    auto [order, td] = mde_order(g);
    CHECK(td.width == 2);
    CHECK(td.elimination_sequence[0] == 0);
    CHECK(td.validate(g));
  }
  SUBCASE("single vertex") {
    std::vector<RawEdge> edges = {{0, 1, 1, 1}};
    auto [order, td] = mde_order(QualityGraph::from_edges(edges, false));
    CHECK(td.bags.size() == 2);
    CHECK(td.width == 1);
  }
  SUBCASE("order reverses elimination") {
    auto [order, td] = mde_order(path_graph(5));
    for (std::uint32_t i = 0; i < 5; ++i) {
      CHECK(order.sequence[i] == td.elimination_sequence[4 - i]);
    }
  }
  SUBCASE("known widths: trees 1, cycles 2") {
    CHECK(mde_order(path_graph(10)).decomposition.width == 1);
    CHECK(mde_order(cycle_graph(8)).decomposition.width == 2);
  }
  SUBCASE("decomposition validates on random graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      QualityGraph g = QualityGraph::generate_random(24, 50, 3, GenModel::kGnm, seed);
      auto [order, td] = mde_order(g);
      std::string why;
      CHECK_MESSAGE(td.validate(g, &why), why);
    }
  }
}

TEST_CASE("hybrid order") {
  QualityGraph g = fixtures::gstar();
  SUBCASE("gstar with delta 2") {
    VertexOrder o = hybrid_order(g, 2);
    CHECK(o.sequence[0] == 3);
    CHECK(o.sequence[1] == 1);
    // periphery {0,2,4,5} MDE: isolated 0,2 go first, then the 4-5 pair
    CHECK(o.sequence == std::vector<VertexId>{3, 1, 5, 4, 2, 0});
  }
  SUBCASE("delta 0 equals degree order on all-positive degrees") {
    CHECK(hybrid_order(g, 0).sequence == degree_order(g).sequence);
  }
  SUBCASE("delta >= max degree equals mde order") {
    CHECK(hybrid_order(g, 5).sequence == mde_order(g).order.sequence);
  }
}

TEST_CASE("order files round trip") {
  VertexOrder o = degree_order(fixtures::gstar());
  std::string path = "order_tmp.txt";
  save_order(path, o);
  VertexOrder back = load_order(path, 6);
  CHECK(back.sequence == o.sequence);
  CHECK(back.rank == o.rank);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_order("no_such_order_file.txt", 6), GraphError);
}

TEST_CASE("degree percentile") {
  QualityGraph g = fixtures::gstar();
  CHECK(degree_percentile(g, 0) == 2);
  CHECK(degree_percentile(g, 100) == 5);
}
