#ifndef WCSD_NAIVE_INDEX_HPP
#define WCSD_NAIVE_INDEX_HPP

#include <vector>

#include "wcsd/graph.hpp"
#include "wcsd/ordering.hpp"

namespace wcsd {

struct MemoryGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One classical pruned 2-hop labeling per distinct quality rank. All
/// sub-indices share a single vertex order so size comparisons against the
/// combined index are apples-to-apples.
struct PerThresholdIndex {
  struct Entry {
    std::uint32_t hub_rank;  // order rank of the hub vertex
    Dist dist;
  };

  std::vector<QualityRank> thresholds;                  // 0..|w|-1
  std::vector<std::vector<std::vector<Entry>>> labels;  // [threshold][vertex], hub_rank ascending
  VertexOrder order;
  std::uint64_t fingerprint = 0;

  std::size_t total_entries() const;
  std::size_t entries_at(QualityRank r) const;
};

inline constexpr std::size_t kDefaultEntryCapBytes = 2ull << 30;  // 2 GiB of label entries

PerThresholdIndex build_naive(const QualityGraph& g, const VertexOrder& order,
                              std::size_t mem_cap_bytes = kDefaultEntryCapBytes);

Dist query_naive(const PerThresholdIndex& idx, VertexId s, VertexId t, QualityRank w);

}  // namespace wcsd

#endif  // WCSD_NAIVE_INDEX_HPP
