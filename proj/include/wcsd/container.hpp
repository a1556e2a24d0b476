#ifndef WCSD_CONTAINER_HPP
#define WCSD_CONTAINER_HPP

#include <optional>
#include <string>

#include "wcsd/naive_index.hpp"
#include "wcsd/wc_index.hpp"

namespace wcsd {

struct ContainerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SectionTag : std::uint8_t {
  kWc = 1,
  kNaive = 2,
  kWcPath = 3,
  kWcDirected = 4,
};

/// One index per file. The quality table travels with the index so the CLI
/// can convert raw thresholds to ranks without reloading the graph.
struct LoadedIndex {
  SectionTag tag = SectionTag::kWc;
  std::uint64_t fingerprint = 0;
  std::vector<double> quality_table;
  std::optional<WcIndex> wc;
  std::optional<PerThresholdIndex> naive;

  QualityRank rank_for_threshold(double w) const;
};

void save_index(const std::string& path, const WcIndex& idx,
                const std::vector<double>& quality_table);
void save_index(const std::string& path, const PerThresholdIndex& idx,
                const std::vector<double>& quality_table);

LoadedIndex load_index(const std::string& path);

/// Hard error when the index was built over a different graph.
void verify_fingerprint(const LoadedIndex& idx, const QualityGraph& g);

}  // namespace wcsd

#endif  // WCSD_CONTAINER_HPP
