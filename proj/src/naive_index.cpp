#include "wcsd/naive_index.hpp"

#include <algorithm>

namespace wcsd {

std::size_t PerThresholdIndex::total_entries() const {
  std::size_t total = 0;
  for (const auto& sub : labels) {
    for (const auto& l : sub) total += l.size();
  }
  return total;
}

std::size_t PerThresholdIndex::entries_at(QualityRank r) const {
  std::size_t total = 0;
  for (const auto& l : labels[r]) total += l.size();
  return total;
}

PerThresholdIndex build_naive(const QualityGraph& g, const VertexOrder& order,
                              std::size_t mem_cap_bytes) {
  if (g.directed()) throw GraphError("naive labeling supports undirected graphs only");
  if (!order.valid_for(g.num_vertices())) throw GraphError("order/graph mismatch");
  VertexId n = g.num_vertices();
  std::size_t entry_cap = mem_cap_bytes / sizeof(PerThresholdIndex::Entry);

  PerThresholdIndex idx;
  idx.order = order;
  idx.fingerprint = g.fingerprint();
  idx.labels.resize(g.num_qualities());
  std::size_t total = 0;

  // Pruned landmark labeling per filtered graph. source_dist is the
  // direct-addressed table of the current source's labels, epoch-stamped.
  std::vector<Dist> source_dist(n, kInfDist);
  std::vector<std::uint64_t> source_stamp(n, 0), visited(n, 0);
  std::uint64_t epoch = 0;
  std::vector<VertexId> queue(n);
  std::vector<Dist> depth(n);

  for (QualityRank r = 0; r < g.num_qualities(); ++r) {
    idx.thresholds.push_back(r);
    QualityGraph part = g.filter_at_rank(r);
    auto& labels = idx.labels[r];
    labels.assign(n, {});

    for (std::uint32_t k = 0; k < n; ++k) {
      VertexId src = order.sequence[k];
      ++epoch;
      labels[src].push_back({k, 0});  // self entry, mirrors the combined index
      ++total;
      for (const auto& e : labels[src]) {
        source_stamp[order.sequence[e.hub_rank]] = epoch;
        source_dist[order.sequence[e.hub_rank]] = e.dist;
      }
      source_stamp[src] = epoch;
      source_dist[src] = 0;

      std::size_t head = 0, tail = 0;
      queue[tail] = src;
      depth[tail++] = 0;
      visited[src] = epoch;
      while (head < tail) {
        VertexId u = queue[head];
        Dist d = depth[head++];
        if (u != src) {
          // Prune if existing labels already certify a distance <= d.
          Dist best = kInfDist;
          for (const auto& e : labels[u]) {
            VertexId hub = order.sequence[e.hub_rank];
            if (source_stamp[hub] == epoch && source_dist[hub] != kInfDist) {
              best = std::min(best, e.dist + source_dist[hub]);
            }
          }
          if (best <= d) continue;
          labels[u].push_back({k, d});
          if (++total > entry_cap) {
            throw MemoryGuardError("naive labeling exceeded memory cap (" +
                                   std::to_string(total * sizeof(PerThresholdIndex::Entry)) +
                                   " bytes)");
          }
        }
        for (const auto& e : part.neighbors(u)) {
          if (visited[e.to] == epoch) continue;
          if (order.rank[e.to] <= k) continue;
          visited[e.to] = epoch;
          queue[tail] = e.to;
          depth[tail++] = d + 1;
        }
      }
    }
  }
  return idx;
}

Dist query_naive(const PerThresholdIndex& idx, VertexId s, VertexId t, QualityRank w) {
  if (s == t) return 0;
  if (w >= idx.labels.size()) return kInfDist;
  const auto& ls = idx.labels[w][s];
  const auto& lt = idx.labels[w][t];
  Dist best = kInfDist;
  std::size_t i = 0, j = 0;
  while (i < ls.size() && j < lt.size()) {
    if (ls[i].hub_rank < lt[j].hub_rank) {
      ++i;
    } else if (ls[i].hub_rank > lt[j].hub_rank) {
      ++j;
    } else {
      best = std::min(best, ls[i].dist + lt[j].dist);
      ++i;
      ++j;
    }
  }
  return best;
}

}  // namespace wcsd
