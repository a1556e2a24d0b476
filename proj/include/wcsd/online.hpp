#ifndef WCSD_ONLINE_HPP
#define WCSD_ONLINE_HPP

#include <vector>

#include "wcsd/graph.hpp"

namespace wcsd {

/// Per-query BFS/Dijkstra scratch. Epoch stamps make re-initialization O(1):
/// a vertex counts as visited iff its stamp equals the current epoch.
class FrontierState {
 public:
  void ensure(VertexId n) {
    if (stamp_.size() < n) {
      stamp_.resize(n, 0);
      dist_.resize(n, 0);
    }
  }
  void new_epoch() { ++epoch_; }
  bool visited(VertexId v) const { return stamp_[v] == epoch_; }
  void visit(VertexId v) { stamp_[v] = epoch_; }
  /// Tentative distance slot, valid only while visited(v).
  Dist& dist(VertexId v) { return dist_[v]; }

  std::vector<VertexId> queue;  // reused BFS round storage

 private:
  std::vector<std::uint64_t> stamp_;
  std::vector<Dist> dist_;
  std::uint64_t epoch_ = 0;
};

/// Constrained BFS: w-constrained distance under unit edge lengths.
Dist wc_bfs(const QualityGraph& g, VertexId s, VertexId t, QualityRank w, FrontierState& scratch);

/// Constrained Dijkstra over edge lengths; equals wc_bfs when all lengths are 1.
Dist wc_dijkstra(const QualityGraph& g, VertexId s, VertexId t, QualityRank w,
                 FrontierState& scratch);

/// Pre-filtered graphs, one per distinct quality rank.
class PartitionCache {
 public:
  explicit PartitionCache(const QualityGraph& g);
  /// Partition whose threshold is the smallest quality >= rank w.
  const QualityGraph* at(QualityRank w) const {
    return w < parts_.size() ? &parts_[w] : nullptr;
  }

 private:
  std::vector<QualityGraph> parts_;
};

Dist partitioned_bfs(const PartitionCache& cache, VertexId s, VertexId t, QualityRank w,
                     FrontierState& scratch);

/// Exhaustive ground truth: plain BFS on every filtered graph, independent of
/// the traversal code it validates. Guarded to small graphs.
class AllPairsOracle {
 public:
  explicit AllPairsOracle(const QualityGraph& g, VertexId guard = 512);
  Dist at(VertexId s, VertexId t, QualityRank w) const;
  VertexId num_vertices() const { return n_; }
  std::uint32_t num_ranks() const { return ranks_; }

 private:
  VertexId n_ = 0;
  std::uint32_t ranks_ = 0;
  std::vector<Dist> table_;  // [rank][s][t]
};

}  // namespace wcsd

#endif  // WCSD_ONLINE_HPP
