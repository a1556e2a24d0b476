#include "wcsd/wc_index.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "wcsd/online.hpp"

namespace wcsd {

void LabelSet::append(std::uint32_t hub_rank, Dist dist, QualityRank quality, VertexId parent,
                      bool keep_parent) {
  if (groups_.empty() || groups_.back().hub_rank != hub_rank) {
    groups_.push_back({hub_rank, static_cast<std::uint32_t>(entries_.size()), 0});
  }
  entries_.push_back({hub_rank, dist, quality});
  ++groups_.back().count;
  if (keep_parent) parents_.push_back(parent);
}

std::size_t WcIndex::total_entries() const {
  std::size_t total = 0;
  for (const auto& fam : labels) {
    for (const auto& l : fam) total += l.size();
  }
  return total;
}

bool prune_query_reference(const LabelSet& source_labels, std::uint32_t source_rank,
                           const LabelSet& target_labels, QualityRank w, Dist d) {
  for (const auto& tg : target_labels.groups()) {
    if (tg.hub_rank > source_rank) continue;  // hub must be at least as high-priority as v_k
    auto sgs = source_labels.groups();
    auto sit = std::lower_bound(sgs.begin(), sgs.end(), tg.hub_rank,
                                [](const LabelSet::HubGroup& g, std::uint32_t r) {
                                  return g.hub_rank < r;
                                });
    if (sit == sgs.end() || sit->hub_rank != tg.hub_rank) continue;
    for (const LabelEntry& ej : target_labels.group_entries(tg)) {
      if (ej.quality < w) continue;
      for (const LabelEntry& ei : source_labels.group_entries(*sit)) {
        if (ei.quality >= w && ei.dist + ej.dist <= d) return true;
      }
    }
  }
  return false;
}

namespace {

struct QueueItem {
  VertexId v;
  QualityRank quality;
  VertexId parent;
};

class Builder {
 public:
  Builder(const QualityGraph& g, const VertexOrder& order, BuildOptions opts)
      : g_(g), opts_(opts) {
    if (!order.valid_for(g.num_vertices())) throw GraphError("order/graph mismatch");
    if (g.directed() && opts.path_mode) {
      throw GraphError("path mode is supported on undirected graphs only");
    }
    idx_.order = order;
    idx_.fingerprint = g.fingerprint();
    idx_.directed = g.directed();
    idx_.path_mode = opts.path_mode;
    VertexId n = g.num_vertices();
    idx_.labels[0].resize(n);
    if (g.directed()) idx_.labels[1].resize(n);
    top_ = g.top_rank();
    r_val_.resize(n);
    r_stamp_.assign(n, 0);
    pending_parent_.resize(n);
    vec_stamp_.assign(n, 0);
    table_group_.resize(n);
    table_stamp_.assign(n, 0);
    cache_q_.resize(n);
    cache_stamp_.assign(n, 0);
  }

  WcIndex run() {
    for (std::uint32_t k = 0; k < g_.num_vertices(); ++k) {
      VertexId vk = idx_.order.sequence[k];
      append_entry(0, vk, k, 0, top_, vk);
      if (idx_.directed) append_entry(1, vk, k, 0, top_, vk);
      if (idx_.directed) {
        run_source(k, /*reverse=*/false, /*store=*/1, /*source_fam=*/0);
        run_source(k, /*reverse=*/true, /*store=*/0, /*source_fam=*/1);
      } else {
        run_source(k, false, 0, 0);
      }
    }
    return std::move(idx_);
  }

 private:
  void append_entry(std::uint8_t fam, VertexId owner, std::uint32_t hub_rank, Dist d,
                    QualityRank w, VertexId parent) {
    idx_.labels[fam][owner].append(hub_rank, d, w, parent, opts_.path_mode);
    if (opts_.record_appends) idx_.append_log.push_back({owner, fam, {hub_rank, d, w}});
  }

  void seed_source_table(const LabelSet& src) {
    ++table_epoch_;
    ++cache_epoch_;
    for (const auto& grp : src.groups()) {
      table_group_[grp.hub_rank] = grp;
      table_stamp_[grp.hub_rank] = table_epoch_;
    }
  }

  static const LabelEntry* first_at_least(std::span<const LabelEntry> entries, QualityRank w) {
    auto it = std::partition_point(entries.begin(), entries.end(),
                                   [&](const LabelEntry& e) { return e.quality < w; });
    return it == entries.end() ? nullptr : &*it;
  }

  bool covered_fast(const LabelSet& src, std::uint32_t k, VertexId t, QualityRank w, Dist d) {
    if (cache_stamp_[t] == cache_epoch_ && w <= cache_q_[t]) return true;
    const LabelSet& target = *current_target_;
    for (const auto& tg : target.groups()) {
      if (tg.hub_rank > k) break;  // groups ascend in hub rank
      if (table_stamp_[tg.hub_rank] != table_epoch_) continue;
      const LabelEntry* ej = first_at_least(target.group_entries(tg), w);
      if (ej == nullptr) continue;
      const LabelEntry* ei = first_at_least(src.group_entries(table_group_[tg.hub_rank]), w);
      if (ei == nullptr) continue;
      if (ei->dist + ej->dist <= d) {
        if (cache_stamp_[t] != cache_epoch_ || cache_q_[t] < w) {
          cache_stamp_[t] = cache_epoch_;
          cache_q_[t] = w;
        }
        return true;
      }
    }
    return false;
  }

  bool covered(const LabelSet& src, std::uint32_t k, const LabelSet& target, VertexId t,
               QualityRank w, Dist d) {
    current_target_ = &target;
    switch (opts_.prune) {
      case PruneKind::kNaive:
        return prune_query_reference(src, k, target, w, d);
      case PruneKind::kFast:
        return covered_fast(src, k, t, w, d);
      case PruneKind::kBoth: {
        bool fast = covered_fast(src, k, t, w, d);
        bool naive = prune_query_reference(src, k, target, w, d);
        if (fast != naive) {
          throw std::logic_error("prune divergence at t=" + std::to_string(t) +
                                 " w=" + std::to_string(w) + " d=" + std::to_string(d));
        }
        return fast;
      }
    }
    return false;
  }

  std::span<const QualityGraph::Edge> adjacency(VertexId u, bool reverse) const {
    return reverse ? g_.in_neighbors(u) : g_.neighbors(u);
  }

  void run_source(std::uint32_t k, bool reverse, std::uint8_t store, std::uint8_t source_fam) {
    VertexId vk = idx_.order.sequence[k];
    const LabelSet& src = idx_.labels[source_fam][vk];
    seed_source_table(src);
    ++source_epoch_;
    r_stamp_[vk] = source_epoch_;
    r_val_[vk] = top_;  // the source itself is never re-labeled
    if (g_.weighted()) {
      run_weighted(k, vk, reverse, store, src);
    } else {
      run_rounds(k, vk, reverse, store, src);
    }
  }

  // Round-synchronous constrained BFS: distance implicit in the round
  // counter, largest quality processed first within a round.
  void run_rounds(std::uint32_t k, VertexId vk, bool reverse, std::uint8_t store,
                  const LabelSet& src) {
    cur_.clear();
    cur_.push_back({vk, top_, vk});
    Dist d = 0;
    while (!cur_.empty()) {
      std::stable_sort(cur_.begin(), cur_.end(),
                       [](const QueueItem& a, const QueueItem& b) { return a.quality > b.quality; });
      ++round_token_;
      vec_.clear();
      for (const QueueItem& item : cur_) {
        VertexId u = item.v;
        if (d > 0) {
          if (covered(src, k, idx_.labels[store][u], u, item.quality, d)) continue;
          append_entry(store, u, k, d, item.quality, item.parent);
        }
        for (const auto& e : adjacency(u, reverse)) {
          if (idx_.order.rank[e.to] <= k) continue;
          QualityRank wp = std::min(e.quality, item.quality);
          if (r_stamp_[e.to] == source_epoch_ && wp <= r_val_[e.to]) continue;
          if (vec_stamp_[e.to] != round_token_) {
            vec_stamp_[e.to] = round_token_;
            vec_.push_back(e.to);
          }
          r_stamp_[e.to] = source_epoch_;
          r_val_[e.to] = wp;
          pending_parent_[e.to] = u;
        }
      }
      ++d;
      cur_.clear();
      for (VertexId v : vec_) cur_.push_back({v, r_val_[v], pending_parent_[v]});
    }
  }

  // Weighted lengths: priority queue ordered by (dist asc, quality desc).
  // R(v) tracks the best quality already accepted at a no-larger distance.
  void run_weighted(std::uint32_t k, VertexId vk, bool reverse, std::uint8_t store,
                    const LabelSet& src) {
    struct Item {
      Dist d;
      QualityRank quality;
      VertexId v;
      VertexId parent;
      bool operator>(const Item& o) const {
        if (d != o.d) return d > o.d;
        if (quality != o.quality) return quality < o.quality;
        return v > o.v;
      }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, top_, vk, vk});
    while (!pq.empty()) {
      Item item = pq.top();
      pq.pop();
      VertexId u = item.v;
      if (u != vk) {
        if (r_stamp_[u] == source_epoch_ && item.quality <= r_val_[u]) continue;  // dominated
        r_stamp_[u] = source_epoch_;
        r_val_[u] = item.quality;
        if (covered(src, k, idx_.labels[store][u], u, item.quality, item.d)) continue;
        append_entry(store, u, k, item.d, item.quality, item.parent);
      }
      for (const auto& e : adjacency(u, reverse)) {
        if (idx_.order.rank[e.to] <= k) continue;
        QualityRank wp = std::min(e.quality, item.quality);
        if (r_stamp_[e.to] == source_epoch_ && wp <= r_val_[e.to]) continue;
        pq.push({item.d + e.length, wp, e.to, u});
      }
    }
  }

  const QualityGraph& g_;
  BuildOptions opts_;
  WcIndex idx_;
  QualityRank top_ = 0;

  std::vector<QualityRank> r_val_;
  std::vector<std::uint64_t> r_stamp_;
  std::vector<VertexId> pending_parent_;
  std::vector<std::uint64_t> vec_stamp_;
  std::vector<LabelSet::HubGroup> table_group_;
  std::vector<std::uint64_t> table_stamp_;
  std::vector<QualityRank> cache_q_;
  std::vector<std::uint64_t> cache_stamp_;
  std::uint64_t source_epoch_ = 0;
  std::uint64_t table_epoch_ = 0;
  std::uint64_t cache_epoch_ = 0;
  std::uint64_t round_token_ = 0;
  std::vector<QueueItem> cur_;
  std::vector<VertexId> vec_;
  const LabelSet* current_target_ = nullptr;
};

}  // namespace

WcIndex build(const QualityGraph& g, const VertexOrder& order, BuildOptions opts) {
  if (g.directed()) throw GraphError("use build_directed for directed graphs");
  return Builder(g, order, opts).run();
}

WcIndex build_directed(const QualityGraph& g, const VertexOrder& order, BuildOptions opts) {
  if (!g.directed()) throw GraphError("build_directed requires a directed graph");
  return Builder(g, order, opts).run();
}

namespace {

// Best hub pair with entry positions, for tracing and path reconstruction.
struct BestPair {
  std::uint32_t hub_rank;
  std::size_t index_s;
  std::size_t index_t;
  Dist dist_s;
  Dist dist_t;
};

// Scans the group linearly from the front; entries are quality-ascending so
// the first qualifying entry has the minimal distance. Counts entry reads.
const LabelEntry* scan_group(std::span<const LabelEntry> entries, std::uint32_t offset,
                             QualityRank w, std::size_t* touched, std::size_t* index_out) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (touched) ++*touched;
    if (entries[i].quality >= w) {
      if (index_out) *index_out = offset + i;
      return &entries[i];
    }
  }
  return nullptr;
}

template <typename PerHub>
Dist merge_query(const LabelSet& a, const LabelSet& b, QualityRank w, std::size_t* touched,
                 PerHub&& per_hub) {
  Dist best = kInfDist;
  auto ga = a.groups();
  auto gb = b.groups();
  std::size_t i = 0, j = 0;
  while (i < ga.size() && j < gb.size()) {
    if (ga[i].hub_rank < gb[j].hub_rank) {
      ++i;
    } else if (ga[i].hub_rank > gb[j].hub_rank) {
      ++j;
    } else {
      std::size_t ia = 0, ib = 0;
      const LabelEntry* ea = scan_group(a.group_entries(ga[i]), ga[i].offset, w, touched, &ia);
      const LabelEntry* eb = scan_group(b.group_entries(gb[j]), gb[j].offset, w, touched, &ib);
      if (ea != nullptr && eb != nullptr) {
        Dist total = ea->dist + eb->dist;
        per_hub(ga[i].hub_rank, ia, ib, ea->dist, eb->dist);
        best = std::min(best, total);
      }
      ++i;
      ++j;
    }
  }
  return best;
}

std::optional<BestPair> best_pair(const WcIndex& idx, VertexId s, VertexId t, QualityRank w) {
  std::optional<BestPair> best;
  merge_query(idx.out_labels(s), idx.in_labels(t), w, nullptr,
              [&](std::uint32_t hub, std::size_t ia, std::size_t ib, Dist da, Dist db) {
                if (!best || da + db < best->dist_s + best->dist_t) {
                  best = BestPair{hub, ia, ib, da, db};
                }
              });
  return best;
}

}  // namespace

Dist query_distance(const WcIndex& idx, VertexId s, VertexId t, QualityRank w, QueryStats* stats) {
  if (s >= idx.num_vertices() || t >= idx.num_vertices()) throw GraphError("invalid vertex id");
  std::size_t touched = 0;
  Dist best = merge_query(idx.out_labels(s), idx.in_labels(t), w, &touched,
                          [](std::uint32_t, std::size_t, std::size_t, Dist, Dist) {});
  if (stats) stats->entries_touched = touched;
  return best;
}

Dist query_distance_traced(const WcIndex& idx, VertexId s, VertexId t, QualityRank w,
                           std::vector<HubCandidate>& candidates) {
  candidates.clear();
  return merge_query(idx.out_labels(s), idx.in_labels(t), w, nullptr,
                     [&](std::uint32_t hub, std::size_t, std::size_t, Dist da, Dist db) {
                       candidates.push_back({idx.order.sequence[hub], da, db, da + db});
                     });
}

std::optional<std::vector<VertexId>> reconstruct_path(const WcIndex& idx, VertexId s, VertexId t,
                                                      QualityRank w) {
  if (!idx.path_mode) throw GraphError("index was not built in path mode");
  std::vector<VertexId> front, back;
  while (s != t) {
    auto bp = best_pair(idx, s, t, w);
    if (!bp) return std::nullopt;
    if (bp->dist_s > 0) {
      front.push_back(s);
      s = idx.out_labels(s).parent_at(bp->index_s);
    } else {
      back.push_back(t);
      t = idx.in_labels(t).parent_at(bp->index_t);
    }
  }
  front.push_back(s);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

namespace {

// Query with one entry masked out, for leave-one-out necessity checks.
Dist query_skipping(const WcIndex& idx, VertexId s, VertexId t, QualityRank w, std::uint8_t fam,
                    VertexId owner, std::size_t skip_index) {
  const LabelSet& a = idx.out_labels(s);
  const LabelSet& b = idx.in_labels(t);
  std::uint8_t fam_out = 0;
  std::uint8_t fam_in = idx.directed ? 1 : 0;
  bool skip_a = (fam == fam_out && s == owner);
  bool skip_b = (fam == fam_in && t == owner);
  Dist best = kInfDist;
  auto ga = a.groups();
  auto gb = b.groups();
  std::size_t i = 0, j = 0;
  while (i < ga.size() && j < gb.size()) {
    if (ga[i].hub_rank < gb[j].hub_rank) {
      ++i;
    } else if (ga[i].hub_rank > gb[j].hub_rank) {
      ++j;
    } else {
      Dist da = kInfDist, db = kInfDist;
      auto ea = a.group_entries(ga[i]);
      for (std::size_t x = 0; x < ea.size(); ++x) {
        if (skip_a && ga[i].offset + x == skip_index) continue;
        if (ea[x].quality >= w) {
          da = ea[x].dist;
          break;
        }
      }
      auto eb = b.group_entries(gb[j]);
      for (std::size_t x = 0; x < eb.size(); ++x) {
        if (skip_b && gb[j].offset + x == skip_index) continue;
        if (eb[x].quality >= w) {
          db = eb[x].dist;
          break;
        }
      }
      if (da != kInfDist && db != kInfDist) best = std::min(best, da + db);
      ++i;
      ++j;
    }
  }
  return best;
}

}  // namespace

ValidationReport validate_sound(const WcIndex& idx, const QualityGraph& g) {
  ValidationReport report;
  AllPairsOracle oracle(g);
  int families = idx.directed ? 2 : 1;
  for (int fam = 0; fam < families; ++fam) {
    for (VertexId v = 0; v < idx.num_vertices(); ++v) {
      for (const LabelEntry& e : idx.labels[fam][v].entries()) {
        ++report.checks;
        VertexId hub = idx.order.sequence[e.hub_rank];
        if (hub == v) {
          if (e.dist != 0 || e.quality != g.top_rank()) {
            report.violations.push_back("self entry of v" + std::to_string(v) + " malformed");
          }
          continue;
        }
        // fam 0 entries describe dist(v -> hub), fam 1 dist(hub -> v).
        Dist expect = fam == 0 ? oracle.at(v, hub, e.quality) : oracle.at(hub, v, e.quality);
        if (expect != e.dist) {
          report.violations.push_back(
              "entry (v" + std::to_string(hub) + "," + std::to_string(e.dist) + ",q" +
              std::to_string(e.quality) + ") in L(v" + std::to_string(v) + ") but dist^w=" +
              (expect == kInfDist ? std::string("INF") : std::to_string(expect)));
        }
      }
    }
  }
  return report;
}

ValidationReport validate_complete(const WcIndex& idx, const QualityGraph& g) {
  ValidationReport report;
  AllPairsOracle oracle(g);
  VertexId n = g.num_vertices();
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = 0; t < n; ++t) {
      for (QualityRank w = 0; w < g.num_qualities(); ++w) {
        ++report.checks;
        Dist got = query_distance(idx, s, t, w);
        Dist expect = oracle.at(s, t, w);
        if (got != expect) {
          report.violations.push_back("query (" + std::to_string(s) + "," + std::to_string(t) +
                                      ",q" + std::to_string(w) + ") = " + std::to_string(got) +
                                      " expected " + std::to_string(expect));
        }
      }
    }
  }
  return report;
}

ValidationReport validate_minimal(const WcIndex& idx, const QualityGraph& g) {
  ValidationReport report;
  AllPairsOracle oracle(g);
  VertexId n = g.num_vertices();
  int families = idx.directed ? 2 : 1;
  for (int fam = 0; fam < families; ++fam) {
    for (VertexId v = 0; v < n; ++v) {
      const LabelSet& ls = idx.labels[fam][v];
      for (const auto& grp : ls.groups()) {
        auto es = ls.group_entries(grp);
        for (std::size_t i = 1; i < es.size(); ++i) {
          ++report.checks;
          if (es[i].dist <= es[i - 1].dist || es[i].quality <= es[i - 1].quality) {
            report.violations.push_back("dominated entry in L(v" + std::to_string(v) +
                                        ") group hub-rank " + std::to_string(grp.hub_rank));
          }
        }
      }
      // Necessity: deleting any non-self entry must flip some query.
      auto entries = ls.entries();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        VertexId hub = idx.order.sequence[entries[i].hub_rank];
        if (hub == v) continue;  // self entries define dist(s,s)=0
        ++report.checks;
        bool needed = false;
        for (VertexId x = 0; x < n && !needed; ++x) {
          for (QualityRank w = 0; w < g.num_qualities() && !needed; ++w) {
            VertexId qs = fam == 0 ? v : x;
            VertexId qt = fam == 0 ? x : v;
            Dist without = query_skipping(idx, qs, qt, w, static_cast<std::uint8_t>(fam), v, i);
            if (without != oracle.at(qs, qt, w)) needed = true;
          }
        }
        if (!needed) {
          report.violations.push_back("redundant entry (v" + std::to_string(hub) + "," +
                                      std::to_string(entries[i].dist) + ",q" +
                                      std::to_string(entries[i].quality) + ") in L(v" +
                                      std::to_string(v) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace wcsd
