#include "wcsd/online.hpp"

#include <queue>
#include <stdexcept>

namespace wcsd {

Dist wc_bfs(const QualityGraph& g, VertexId s, VertexId t, QualityRank w, FrontierState& scratch) {
  VertexId n = g.num_vertices();
  if (s >= n || t >= n) throw GraphError("invalid vertex id");
  if (s == t) return 0;
  scratch.ensure(n);
  scratch.new_epoch();
  scratch.queue.clear();
  scratch.queue.push_back(s);
  scratch.visit(s);
  Dist dis = 0;
  std::size_t head = 0;
  while (head < scratch.queue.size()) {
    std::size_t round_end = scratch.queue.size();
    ++dis;
    for (; head < round_end; ++head) {
      VertexId u = scratch.queue[head];
      for (const auto& e : g.neighbors(u)) {
        if (e.quality < w || scratch.visited(e.to)) continue;
        if (e.to == t) return dis;
        scratch.queue.push_back(e.to);
        scratch.visit(e.to);
      }
    }
  }
  return kInfDist;
}

Dist wc_dijkstra(const QualityGraph& g, VertexId s, VertexId t, QualityRank w,
                 FrontierState& scratch) {
  VertexId n = g.num_vertices();
  if (s >= n || t >= n) throw GraphError("invalid vertex id");
  if (s == t) return 0;
  scratch.ensure(n);
  scratch.new_epoch();
  using Item = std::pair<Dist, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  scratch.visit(s);
  scratch.dist(s) = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > scratch.dist(u)) continue;  // stale
    if (u == t) return d;
    for (const auto& e : g.neighbors(u)) {
      if (e.quality < w) continue;
      if (e.length == 0) throw GraphError("non-positive edge length");
      Dist nd = d + e.length;
      if (!scratch.visited(e.to) || nd < scratch.dist(e.to)) {
        scratch.visit(e.to);
        scratch.dist(e.to) = nd;
        pq.push({nd, e.to});
      }
    }
  }
  return kInfDist;
}

PartitionCache::PartitionCache(const QualityGraph& g) {
  parts_.reserve(g.num_qualities());
  for (QualityRank r = 0; r < g.num_qualities(); ++r) {
    parts_.push_back(g.filter_at_rank(r));
  }
}

Dist partitioned_bfs(const PartitionCache& cache, VertexId s, VertexId t, QualityRank w,
                     FrontierState& scratch) {
  if (s == t) return 0;
  const QualityGraph* part = cache.at(w);
  if (part == nullptr) return kInfDist;  // threshold above every edge quality
  // Plain BFS: the partition already contains only qualifying edges.
  return wc_bfs(*part, s, t, 0, scratch);
}

AllPairsOracle::AllPairsOracle(const QualityGraph& g, VertexId guard) {
  n_ = g.num_vertices();
  if (n_ > guard) {
    throw GraphError("oracle guard exceeded: n=" + std::to_string(n_) + " > " +
                     std::to_string(guard));
  }
  ranks_ = g.num_qualities();
  table_.assign(static_cast<std::size_t>(ranks_) * n_ * n_, kInfDist);
  std::vector<VertexId> queue(n_);
  for (QualityRank r = 0; r < ranks_; ++r) {
    QualityGraph part = g.filter_at_rank(r);
    for (VertexId s = 0; s < n_; ++s) {
      Dist* row = table_.data() + (static_cast<std::size_t>(r) * n_ + s) * n_;
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        VertexId u = queue[head++];
        for (const auto& e : part.neighbors(u)) {
          if (row[e.to] != kInfDist) continue;
          row[e.to] = row[u] + 1;
          queue[tail++] = e.to;
        }
      }
    }
  }
}

Dist AllPairsOracle::at(VertexId s, VertexId t, QualityRank w) const {
  if (s == t) return 0;
  if (w >= ranks_) return kInfDist;
  return table_[(static_cast<std::size_t>(w) * n_ + s) * n_ + t];
}

}  // namespace wcsd
