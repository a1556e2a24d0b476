// Shared fixtures: the 6-vertex running-example graph and the exact label
// table an identity-order build must produce on it.
#ifndef WCSD_TESTS_FIXTURES_HPP
#define WCSD_TESTS_FIXTURES_HPP

#include <vector>

#include "wcsd/graph.hpp"
#include "wcsd/wc_index.hpp"

namespace fixtures {

// 8 edges, qualities 1..5 all present, so rank = raw - 1 and TOP rank = 5.
inline std::vector<wcsd::RawEdge> gstar_edges() {
  return {
      {0, 1, 3.0, 1}, {0, 3, 1.0, 1}, {1, 2, 5.0, 1}, {1, 3, 2.0, 1},
      {2, 3, 4.0, 1}, {3, 4, 4.0, 1}, {3, 5, 2.0, 1}, {4, 5, 3.0, 1},
  };
}

inline wcsd::QualityGraph gstar() {
  return wcsd::QualityGraph::from_edges(gstar_edges(), /*directed=*/false);
}

struct GoldenEntry {
  wcsd::VertexId owner;
  wcsd::VertexId hub;
  wcsd::Dist dist;
  wcsd::QualityRank quality;  // rank; 5 = TOP for self entries
};

// The full 32-entry table for the identity order, frozen by hand. Quality
// ranks are raw-1 since the quality table is [1,2,3,4,5].
inline std::vector<GoldenEntry> gstar_golden() {
  return {
      {0, 0, 0, 5},
      {1, 0, 1, 2}, {1, 1, 0, 5},
      {2, 0, 2, 2}, {2, 1, 1, 4}, {2, 2, 0, 5},
      {3, 0, 1, 0}, {3, 0, 2, 1}, {3, 0, 3, 2}, {3, 1, 1, 1}, {3, 1, 2, 3},
      {3, 2, 1, 3}, {3, 3, 0, 5},
      {4, 0, 2, 0}, {4, 0, 3, 1}, {4, 0, 4, 2}, {4, 1, 2, 1}, {4, 1, 3, 3},
      {4, 2, 2, 3}, {4, 3, 1, 3}, {4, 4, 0, 5},
      {5, 0, 2, 0}, {5, 0, 3, 1}, {5, 0, 5, 2}, {5, 1, 2, 1}, {5, 1, 4, 2},
      {5, 2, 2, 1}, {5, 2, 3, 2}, {5, 3, 1, 1}, {5, 3, 2, 2}, {5, 4, 1, 2},
      {5, 5, 0, 5},
  };
}

// Entry-by-entry comparison against the golden table; the index order must
// be the identity so hub ranks equal hub ids.
inline bool matches_golden(const wcsd::WcIndex& idx, std::string* why = nullptr) {
  auto golden = gstar_golden();
  std::size_t g = 0;
  for (wcsd::VertexId v = 0; v < idx.num_vertices(); ++v) {
    for (const wcsd::LabelEntry& e : idx.out_labels(v).entries()) {
      if (g >= golden.size()) {
        if (why) *why = "extra entries beyond 32";
        return false;
      }
      const GoldenEntry& want = golden[g++];
      if (want.owner != v || want.hub != e.hub_rank || want.dist != e.dist ||
          want.quality != e.quality) {
        if (why) {
          *why = "mismatch at owner v" + std::to_string(v) + ": got (v" +
                 std::to_string(e.hub_rank) + "," + std::to_string(e.dist) + ",q" +
                 std::to_string(e.quality) + ") want (v" + std::to_string(want.hub) + "," +
                 std::to_string(want.dist) + ",q" + std::to_string(want.quality) + ")";
        }
        return false;
      }
    }
  }
  if (g != golden.size()) {
    if (why) *why = "only " + std::to_string(g) + " of 32 entries present";
    return false;
  }
  return true;
}

}  // namespace fixtures

#endif  // WCSD_TESTS_FIXTURES_HPP
