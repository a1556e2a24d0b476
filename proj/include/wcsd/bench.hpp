#ifndef WCSD_BENCH_HPP
#define WCSD_BENCH_HPP

#include <string>
#include <vector>

#include "wcsd/graph.hpp"
#include "wcsd/naive_index.hpp"

namespace wcsd {

enum class Algo {
  kWbfs,        // plain BFS on pre-filtered partitions
  kDijkstra,    // constrained Dijkstra
  kCbfs,        // constrained BFS on the full graph
  kNaive,       // per-threshold 2-hop labelings
  kWcIndex,     // combined index, reference prune path at build time
  kWcIndexPlus, // combined index, fast prune path
};

const char* algo_name(Algo a);

std::vector<QueryTriple> gen_workload(const QualityGraph& g, std::size_t count,
                                      std::uint64_t seed);

struct AlgoReport {
  std::string name;
  bool feasible = true;
  std::string note;  // infeasibility reason
  double build_seconds = 0.0;
  std::size_t index_entries = 0;
  std::size_t index_bytes = 0;
  double mean_us = 0.0;
  double median_us = 0.0;
  double p99_us = 0.0;
  std::size_t query_count = 0;
};

struct BenchReport {
  VertexId n = 0;
  std::size_t m = 0;
  std::uint32_t num_qualities = 0;
  bool directed = false;
  std::uint64_t workload_seed = 0;
  std::size_t workload_size = 0;
  std::vector<AlgoReport> algos;

  std::string to_json() const;
  std::string to_csv() const;
};

struct BenchOptions {
  std::size_t mem_cap_bytes = kDefaultEntryCapBytes;
  std::uint64_t workload_seed = 0;  // recorded in the report for replay
};

/// Builds each requested variant, checks that all feasible algorithms agree
/// on every workload answer (throwing on mismatch), then times a measured
/// pass per algorithm. One warmup pass precedes timing.
BenchReport run_bench(const QualityGraph& g, const std::vector<Algo>& algos,
                      const std::vector<QueryTriple>& workload, BenchOptions opts = {});

void write_report(const BenchReport& report, const std::string& json_path,
                  const std::string& csv_path);

}  // namespace wcsd

#endif  // WCSD_BENCH_HPP
