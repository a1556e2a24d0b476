#ifndef WCSD_WC_INDEX_HPP
#define WCSD_WC_INDEX_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcsd/graph.hpp"
#include "wcsd/ordering.hpp"

namespace wcsd {

/// (hub, distance, quality) triple. Hubs are stored as order ranks so group
/// directories are naturally sorted and the query merge compares integers.
/// quality == the graph's top rank marks a self entry (dist 0).
struct LabelEntry {
  std::uint32_t hub_rank;
  Dist dist;
  QualityRank quality;
};

/// Flat entry array plus a hub directory of contiguous groups. Within each
/// group dist and quality are strictly increasing in lockstep.
class LabelSet {
 public:
  struct HubGroup {
    std::uint32_t hub_rank;
    std::uint32_t offset;
    std::uint32_t count;
  };

  void append(std::uint32_t hub_rank, Dist dist, QualityRank quality, VertexId parent,
              bool keep_parent);

  std::span<const LabelEntry> entries() const { return entries_; }
  std::span<const HubGroup> groups() const { return groups_; }
  std::span<const LabelEntry> group_entries(const HubGroup& g) const {
    return {entries_.data() + g.offset, g.count};
  }
  VertexId parent_at(std::size_t entry_index) const { return parents_[entry_index]; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LabelEntry> entries_;
  std::vector<HubGroup> groups_;
  std::vector<VertexId> parents_;  // path mode only, parallel to entries_
};

enum class PruneKind {
  kNaive,  // reference cover test, linear scan of hub pairs
  kFast,   // per-group first-qualifying search + round-result cache
  kBoth,   // run both, throw on divergence (differential testing)
};

struct BuildOptions {
  bool path_mode = false;
  PruneKind prune = PruneKind::kFast;
  bool record_appends = false;
};

struct AppendRecord {
  VertexId owner;
  std::uint8_t family;  // 0 = out/undirected, 1 = in
  LabelEntry entry;
};

struct WcIndex {
  // family 0: undirected labels, or L_out for directed graphs
  // (entries describe dist(owner -> hub)); family 1: L_in.
  std::vector<LabelSet> labels[2];
  VertexOrder order;
  std::uint64_t fingerprint = 0;
  bool directed = false;
  bool path_mode = false;
  std::vector<AppendRecord> append_log;  // populated when record_appends

  VertexId num_vertices() const { return static_cast<VertexId>(labels[0].size()); }
  const LabelSet& out_labels(VertexId v) const { return labels[0][v]; }
  const LabelSet& in_labels(VertexId v) const { return directed ? labels[1][v] : labels[0][v]; }
  std::size_t total_entries() const;
};

WcIndex build(const QualityGraph& g, const VertexOrder& order, BuildOptions opts = {});
WcIndex build_directed(const QualityGraph& g, const VertexOrder& order, BuildOptions opts = {});

struct QueryStats {
  std::size_t entries_touched = 0;
};

Dist query_distance(const WcIndex& idx, VertexId s, VertexId t, QualityRank w,
                    QueryStats* stats = nullptr);

struct HubCandidate {
  VertexId hub;
  Dist dist_s;
  Dist dist_t;
  Dist total;
};

/// Like query_distance but reports every qualifying hub pair considered.
Dist query_distance_traced(const WcIndex& idx, VertexId s, VertexId t, QualityRank w,
                           std::vector<HubCandidate>& candidates);

/// Path-mode only: a w-path s -> t of length query_distance(s,t,w).
std::optional<std::vector<VertexId>> reconstruct_path(const WcIndex& idx, VertexId s, VertexId t,
                                                      QualityRank w);

struct ValidationReport {
  std::vector<std::string> violations;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_sound(const WcIndex& idx, const QualityGraph& g);
ValidationReport validate_complete(const WcIndex& idx, const QualityGraph& g);
ValidationReport validate_minimal(const WcIndex& idx, const QualityGraph& g);

/// Reference cover test (construction-time query), kept for differential
/// testing against the fast path. source_labels/source_rank describe the
/// active source v_k; returns true iff some hub pair certifies a w-path of
/// length <= d between the source and t.
bool prune_query_reference(const LabelSet& source_labels, std::uint32_t source_rank,
                           const LabelSet& target_labels, QualityRank w, Dist d);

}  // namespace wcsd

#endif  // WCSD_WC_INDEX_HPP
