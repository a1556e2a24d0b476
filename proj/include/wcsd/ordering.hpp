#ifndef WCSD_ORDERING_HPP
#define WCSD_ORDERING_HPP

#include <string>
#include <vector>

#include "wcsd/graph.hpp"

namespace wcsd {

/// Global hub priority permutation: position in `sequence` = priority,
/// earlier = higher (more hub-like). rank is the inverse array.
struct VertexOrder {
  std::vector<VertexId> sequence;
  std::vector<std::uint32_t> rank;

  static VertexOrder from_sequence(std::vector<VertexId> seq);
  bool valid_for(VertexId n) const;
};

VertexOrder identity_order(VertexId n);
VertexOrder random_order(VertexId n, std::uint64_t seed);

/// Degree descending, ties by ascending vertex id.
VertexOrder degree_order(const QualityGraph& g);

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;      // bag i = {v_i} U transient neighbors
  std::vector<VertexId> elimination_sequence;   // v_i
  std::vector<std::int64_t> parent;             // bag tree edge, -1 = root
  std::uint32_t width = 0;                      // max bag size - 1

  /// Checks the three tree-decomposition conditions against g.
  bool validate(const QualityGraph& g, std::string* why = nullptr) const;
};

struct MdeResult {
  VertexOrder order;  // reverse of elimination: last eliminated = highest priority
  TreeDecomposition decomposition;
};

/// Minimum degree elimination; ties broken by lowest vertex id.
MdeResult mde_order(const QualityGraph& g);

/// Core (degree > delta, degree-ordered) followed by periphery
/// (MDE on the periphery-induced subgraph).
VertexOrder hybrid_order(const QualityGraph& g, VertexId delta);

/// Degree value at the given percentile of the degree distribution.
VertexId degree_percentile(const QualityGraph& g, double pct);

VertexOrder load_order(const std::string& path, VertexId n);
void save_order(const std::string& path, const VertexOrder& order);

}  // namespace wcsd

#endif  // WCSD_ORDERING_HPP
