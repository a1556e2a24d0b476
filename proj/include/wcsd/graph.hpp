#ifndef WCSD_GRAPH_HPP
#define WCSD_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wcsd {

using VertexId = std::uint32_t;
using Dist = std::uint32_t;
using QualityRank = std::uint32_t;

inline constexpr Dist kInfDist = 0xFFFFFFFFu;

struct QueryTriple {
  VertexId s = 0;
  VertexId t = 0;
  double w = 0.0;  // raw quality threshold
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Edge as read from an input file, before normalization.
struct RawEdge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  double quality = 0.0;
  std::uint32_t length = 1;
};

enum class GenModel { kGnm, kGrid };

/// Immutable graph with one total-ordered quality per edge.
///
/// Qualities are compared through dense integer ranks assigned once at
/// construction; raw values are kept only for reporting and threshold
/// conversion. Rank top_rank() is reserved for the infinite quality of
/// self label entries and strictly exceeds every edge rank.
class QualityGraph {
 public:
  struct Edge {
    VertexId to;
    QualityRank quality;
    std::uint32_t length;
  };

  /// universe_n > 0 pre-seeds ids 0..universe_n-1 so isolated vertices survive.
  static QualityGraph from_edges(const std::vector<RawEdge>& edges, bool directed,
                                 VertexId universe_n = 0);
  static QualityGraph load_edge_list(const std::string& path, bool directed);
  static QualityGraph load_dimacs(const std::string& path, bool directed);
  static QualityGraph generate_random(VertexId n, std::size_t m, std::uint32_t k_qualities,
                                      GenModel model, std::uint64_t seed);

  VertexId num_vertices() const { return n_; }
  std::size_t num_edges() const { return edge_count_; }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  std::span<const Edge> neighbors(VertexId u) const {
    return {out_edges_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
  }
  /// For undirected graphs this is the same list as neighbors().
  std::span<const Edge> in_neighbors(VertexId u) const {
    if (!directed_) return neighbors(u);
    return {in_edges_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
  }
  VertexId degree(VertexId u) const {
    return static_cast<VertexId>(out_offsets_[u + 1] - out_offsets_[u]);
  }

  std::uint32_t num_qualities() const { return static_cast<std::uint32_t>(quality_table_.size()); }
  QualityRank top_rank() const { return num_qualities(); }
  const std::vector<double>& quality_table() const { return quality_table_; }
  double raw_quality(QualityRank r) const { return quality_table_.at(r); }
  /// Smallest rank whose raw value is >= w; top_rank() when no edge qualifies.
  QualityRank rank_for_threshold(double w) const;

  std::int64_t original_id(VertexId v) const { return original_ids_[v]; }
  std::optional<VertexId> internal_id(std::int64_t original) const;

  /// Subgraph view with exactly the edges of quality rank >= r; vertex set,
  /// quality table and id map unchanged.
  QualityGraph filter_at_rank(QualityRank r) const;

  std::uint64_t fingerprint() const { return fingerprint_; }
  void write_edge_list(const std::string& path) const;

  bool same_structure(const QualityGraph& other) const;

 private:
  QualityGraph() = default;
  void finalize(std::vector<std::vector<Edge>> adj, std::vector<std::vector<Edge>> in_adj);
  void compute_fingerprint();

  VertexId n_ = 0;
  std::size_t edge_count_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<std::size_t> out_offsets_;
  std::vector<Edge> out_edges_;
  std::vector<std::size_t> in_offsets_;  // empty when undirected
  std::vector<Edge> in_edges_;
  std::vector<double> quality_table_;
  std::vector<std::int64_t> original_ids_;
  std::unordered_map<std::int64_t, VertexId> id_map_;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace wcsd

#endif  // WCSD_GRAPH_HPP
