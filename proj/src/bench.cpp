#include "wcsd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wcsd/online.hpp"
#include "wcsd/ordering.hpp"
#include "wcsd/wc_index.hpp"

namespace wcsd {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::kWbfs: return "wbfs";
    case Algo::kDijkstra: return "dijkstra";
    case Algo::kCbfs: return "cbfs";
    case Algo::kNaive: return "naive";
    case Algo::kWcIndex: return "wcindex";
    case Algo::kWcIndexPlus: return "wcindex+";
  }
  return "?";
}

std::vector<QueryTriple> gen_workload(const QualityGraph& g, std::size_t count,
                                      std::uint64_t seed) {
  if (count < 1) throw GraphError("workload count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, g.num_vertices() - 1);
  std::uniform_int_distribution<std::size_t> pick_q(0, g.quality_table().size() - 1);
  std::vector<QueryTriple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({pick(rng), pick(rng), g.quality_table()[pick_q(rng)]});
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Runner {
  AlgoReport report;
  std::function<Dist(VertexId, VertexId, QualityRank)> query;
};

void time_queries(Runner& r, const std::vector<QueryTriple>& workload,
                  const std::vector<QualityRank>& ranks) {
  std::vector<double> lat_us(workload.size());
  for (std::size_t i = 0; i < workload.size(); ++i) {
    auto t0 = Clock::now();
    volatile Dist d = r.query(workload[i].s, workload[i].t, ranks[i]);
    (void)d;
    lat_us[i] = seconds_since(t0) * 1e6;
  }
  std::sort(lat_us.begin(), lat_us.end());
  double sum = 0;
  for (double x : lat_us) sum += x;
  r.report.query_count = lat_us.size();
  r.report.mean_us = sum / static_cast<double>(lat_us.size());
  r.report.median_us = lat_us[lat_us.size() / 2];
  r.report.p99_us = lat_us[std::min(lat_us.size() - 1,
                                    static_cast<std::size_t>(lat_us.size() * 0.99))];
}

}  // namespace

BenchReport run_bench(const QualityGraph& g, const std::vector<Algo>& algos,
                      const std::vector<QueryTriple>& workload, BenchOptions opts) {
  BenchReport report;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.num_qualities = g.num_qualities();
  report.directed = g.directed();
  report.workload_seed = opts.workload_seed;
  report.workload_size = workload.size();

  std::vector<QualityRank> ranks;
  ranks.reserve(workload.size());
  for (const auto& q : workload) {
    if (q.s >= g.num_vertices() || q.t >= g.num_vertices()) {
      throw GraphError("workload references an invalid vertex id");
    }
    ranks.push_back(g.rank_for_threshold(q.w));
  }

  // All index variants share one vertex order so timings compare prune
  // paths and data structures, not hub choices.
  VertexOrder order;
  bool need_order = false;
  for (Algo a : algos) {
    if (a == Algo::kNaive || a == Algo::kWcIndex || a == Algo::kWcIndexPlus) need_order = true;
  }
  if (need_order) order = degree_order(g);

  // Build phase (timed), then shared structures for the online baselines.
  std::vector<Runner> runners;
  std::optional<PartitionCache> partitions;
  std::optional<PerThresholdIndex> naive;
  std::optional<WcIndex> wc_ref, wc_fast;
  auto scratch = std::make_shared<FrontierState>();

  for (Algo a : algos) {
    Runner r;
    r.report.name = algo_name(a);
    switch (a) {
      case Algo::kWbfs: {
        auto t0 = Clock::now();
        partitions.emplace(g);
        r.report.build_seconds = seconds_since(t0);
        const PartitionCache* cache = &*partitions;
        r.query = [cache, scratch](VertexId s, VertexId t, QualityRank w) {
          return partitioned_bfs(*cache, s, t, w, *scratch);
        };
        break;
      }
      case Algo::kDijkstra:
        r.query = [&g, scratch](VertexId s, VertexId t, QualityRank w) {
          return wc_dijkstra(g, s, t, w, *scratch);
        };
        break;
      case Algo::kCbfs:
        r.query = [&g, scratch](VertexId s, VertexId t, QualityRank w) {
          return wc_bfs(g, s, t, w, *scratch);
        };
        break;
      case Algo::kNaive: {
        auto t0 = Clock::now();
        try {
          naive.emplace(build_naive(g, order, opts.mem_cap_bytes));
        } catch (const MemoryGuardError& e) {
          r.report.feasible = false;
          r.report.note = e.what();
          runners.push_back(std::move(r));
          continue;
        }
        r.report.build_seconds = seconds_since(t0);
        r.report.index_entries = naive->total_entries();
        r.report.index_bytes = r.report.index_entries * sizeof(PerThresholdIndex::Entry);
        const PerThresholdIndex* idx = &*naive;
        r.query = [idx](VertexId s, VertexId t, QualityRank w) {
          return query_naive(*idx, s, t, w);
        };
        break;
      }
      case Algo::kWcIndex:
      case Algo::kWcIndexPlus: {
        auto& slot = a == Algo::kWcIndex ? wc_ref : wc_fast;
        BuildOptions bo;
        bo.prune = a == Algo::kWcIndex ? PruneKind::kNaive : PruneKind::kFast;
        auto t0 = Clock::now();
        slot.emplace(g.directed() ? build_directed(g, order, bo) : build(g, order, bo));
        r.report.build_seconds = seconds_since(t0);
        r.report.index_entries = slot->total_entries();
        r.report.index_bytes = r.report.index_entries * sizeof(LabelEntry);
        const WcIndex* idx = &*slot;
        r.query = [idx](VertexId s, VertexId t, QualityRank w) {
          return query_distance(*idx, s, t, w);
        };
        break;
      }
    }
    runners.push_back(std::move(r));
  }

  // Agreement check doubles as warmup: every feasible algorithm must give
  // the same answer for every workload query before anything is timed.
  const Runner* reference = nullptr;
  std::vector<Dist> answers;
  for (const Runner& r : runners) {
    if (!r.report.feasible) continue;
    if (reference == nullptr) {
      reference = &r;
      answers.reserve(workload.size());
      for (std::size_t i = 0; i < workload.size(); ++i) {
        answers.push_back(r.query(workload[i].s, workload[i].t, ranks[i]));
      }
      continue;
    }
    for (std::size_t i = 0; i < workload.size(); ++i) {
      Dist d = r.query(workload[i].s, workload[i].t, ranks[i]);
      if (d != answers[i]) {
        std::ostringstream msg;
        msg << "algorithm disagreement on query " << i << " (" << workload[i].s << ","
            << workload[i].t << ",w=" << workload[i].w << "): " << reference->report.name << "="
            << answers[i] << " vs " << r.report.name << "=" << d;
        throw std::runtime_error(msg.str());
      }
    }
  }

  for (Runner& r : runners) {
    if (r.report.feasible) time_queries(r, workload, ranks);
    report.algos.push_back(std::move(r.report));
  }
  return report;
}

std::string BenchReport::to_json() const {
  nlohmann::json j;
  j["graph"] = {{"n", n}, {"m", m}, {"num_qualities", num_qualities}, {"directed", directed}};
  j["workload"] = {{"seed", workload_seed}, {"size", workload_size}};
  j["algorithms"] = nlohmann::json::array();
  for (const auto& a : algos) {
    nlohmann::json ja = {{"name", a.name}, {"feasible", a.feasible}};
    if (!a.feasible) {
      ja["note"] = a.note;
    } else {
      ja["build_seconds"] = a.build_seconds;
      ja["index_entries"] = a.index_entries;
      ja["index_bytes"] = a.index_bytes;
      ja["mean_us"] = a.mean_us;
      ja["median_us"] = a.median_us;
      ja["p99_us"] = a.p99_us;
      ja["query_count"] = a.query_count;
    }
    j["algorithms"].push_back(std::move(ja));
  }
  return j.dump(2);
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "algorithm,feasible,build_seconds,index_entries,index_bytes,"
         "mean_us,median_us,p99_us,query_count\n";
  for (const auto& a : algos) {
    out << a.name << ',' << (a.feasible ? 1 : 0) << ',' << a.build_seconds << ','
        << a.index_entries << ',' << a.index_bytes << ',' << a.mean_us << ',' << a.median_us
        << ',' << a.p99_us << ',' << a.query_count << '\n';
  }
  return out.str();
}

void write_report(const BenchReport& report, const std::string& json_path,
                  const std::string& csv_path) {
  {
    std::ofstream out(json_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << report.to_json() << '\n';
  }
  {
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + csv_path);
    out << report.to_csv();
  }
}

}  // namespace wcsd
