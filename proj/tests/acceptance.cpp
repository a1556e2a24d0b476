// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Heavier than the unit suite; run through ctest.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "wcsd/bench.hpp"
#include "wcsd/naive_index.hpp"
#include "wcsd/online.hpp"
#include "wcsd/ordering.hpp"
#include "wcsd/wc_index.hpp"

using namespace wcsd;

namespace {

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool g_all_ok = true;

void report(int num, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", num, name, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  g_all_ok = g_all_ok && ok;
}

// ---------- 1: golden table ----------
void criterion1() {
  auto t0 = Clock::now();
  QualityGraph g = fixtures::gstar();
  WcIndex idx = build(g, identity_order(6));
  double elapsed = secs(t0);
  std::string why;
  bool ok = fixtures::matches_golden(idx, &why) && elapsed < 1.0;
  report(1, "golden table", ok,
         ok ? "32/32 entries in " + std::to_string(elapsed) + "s" : why);
}

// ---------- 2: worked query with trace ----------
void criterion2() {
  QualityGraph g = fixtures::gstar();
  WcIndex idx = build(g, identity_order(6));
  std::vector<HubCandidate> cands;
  Dist d = query_distance_traced(idx, 2, 5, g.rank_for_threshold(2), cands);
  bool ok = d == 2 && cands.size() == 3 && cands[0].hub == 0 && cands[0].total == 5 &&
            cands[1].hub == 1 && cands[1].total == 3 && cands[2].hub == 2 && cands[2].total == 2;
  report(2, "worked query", ok, ok ? "hub candidates 5/3/2, answer 2" : "trace mismatch");
}

// ---------- 3/4/5: randomized sweep ----------
struct SweepStats {
  std::size_t graphs = 0;
  std::size_t mismatches = 0;          // criterion 3
  std::size_t property_violations = 0; // criterion 4
  std::size_t necessity_graphs = 0;
  std::size_t size_violations = 0;     // criterion 5
  std::size_t bound_violations = 0;
  std::string first_error;
};

void note(SweepStats& st, std::size_t& counter, const std::string& msg) {
  ++counter;
  if (st.first_error.empty()) st.first_error = msg;
}

void sweep(SweepStats& st, std::size_t graph_count) {
  const std::uint32_t kChoices[] = {1, 2, 3, 5, 9};
  FrontierState fs;
  for (std::uint64_t seed = 0; seed < graph_count; ++seed) {
    std::mt19937_64 rng(seed * 1000003 + 17);
    VertexId n = 4 + static_cast<VertexId>(rng() % 61);  // 4..64
    std::size_t max_m = std::min<std::size_t>(4ull * n, static_cast<std::size_t>(n) * (n - 1) / 2);
    std::size_t m = 1 + rng() % max_m;
    std::uint32_t k = kChoices[rng() % 5];
    QualityGraph g = QualityGraph::generate_random(n, m, k, GenModel::kGnm, seed);
    ++st.graphs;
    std::uint32_t ranks = g.num_qualities();

    // baseline agreement, and the table everything else is checked against
    PartitionCache parts(g);
    std::vector<Dist> base(static_cast<std::size_t>(ranks) * n * n);
    for (QualityRank w = 0; w < ranks; ++w) {
      for (VertexId s = 0; s < n; ++s) {
        for (VertexId t = 0; t < n; ++t) {
          Dist d = wc_bfs(g, s, t, w, fs);
          base[(static_cast<std::size_t>(w) * n + s) * n + t] = d;
          if (wc_dijkstra(g, s, t, w, fs) != d || partitioned_bfs(parts, s, t, w, fs) != d) {
            note(st, st.mismatches, "baseline disagreement seed " + std::to_string(seed));
          }
        }
      }
    }

    std::vector<VertexOrder> orders = {degree_order(g), mde_order(g).order,
                                       hybrid_order(g, degree_percentile(g, 99.0)),
                                       random_order(n, seed + 12345)};
    // constrained diameter: largest finite distance over every threshold
    Dist diameter = 0;
    for (Dist d : base) {
      if (d != kInfDist) diameter = std::max(diameter, d);
    }

    for (const VertexOrder& order : orders) {
      BuildOptions opts;
      opts.record_appends = true;
      WcIndex idx = build(g, order, opts);
      PerThresholdIndex naive = build_naive(g, order);

      // criterion 3: five-way agreement over every (s,t,rank)
      for (QualityRank w = 0; w < ranks; ++w) {
        for (VertexId s = 0; s < n; ++s) {
          for (VertexId t = 0; t < n; ++t) {
            Dist d = base[(static_cast<std::size_t>(w) * n + s) * n + t];
            if (query_distance(idx, s, t, w) != d || query_naive(naive, s, t, w) != d) {
              note(st, st.mismatches,
                   "index disagreement seed " + std::to_string(seed) + " (" + std::to_string(s) +
                       "," + std::to_string(t) + ",w" + std::to_string(w) + ")");
            }
          }
        }
      }

      // criterion 4 (a,b,d): group monotonicity + hub rank
      for (VertexId v = 0; v < n; ++v) {
        const LabelSet& ls = idx.out_labels(v);
        for (const auto& grp : ls.groups()) {
          if (grp.hub_rank != order.rank[v] && grp.hub_rank >= order.rank[v]) {
            note(st, st.property_violations, "hub rank violation seed " + std::to_string(seed));
          }
          auto es = ls.group_entries(grp);
          for (std::size_t i = 1; i < es.size(); ++i) {
            if (es[i].dist <= es[i - 1].dist || es[i].quality <= es[i - 1].quality) {
              note(st, st.property_violations, "group order violation seed " + std::to_string(seed));
            }
          }
        }
      }
      // criterion 4 (c): append order never dominates backwards
      std::map<std::pair<VertexId, std::uint32_t>, std::vector<LabelEntry>> groups;
      for (const AppendRecord& rec : idx.append_log) {
        auto& prior = groups[{rec.owner, rec.entry.hub_rank}];
        for (const LabelEntry& e : prior) {
          if (rec.entry.dist <= e.dist && rec.entry.quality >= e.quality) {
            note(st, st.property_violations, "append dominance seed " + std::to_string(seed));
          }
        }
        prior.push_back(rec.entry);
      }
      // criterion 4 (e): leave-one-out necessity on small graphs
      if (n <= 32) {
        ++st.necessity_graphs;
        ValidationReport rep = validate_minimal(idx, g);
        if (!rep.ok()) {
          note(st, st.property_violations,
               "necessity violation seed " + std::to_string(seed) + ": " + rep.violations[0]);
        }
      }

      // criterion 5: size dominance and the min(D,|w|) pair bound
      if (idx.total_entries() > naive.total_entries()) {
        note(st, st.size_violations, "size dominance violated seed " + std::to_string(seed));
      }
      if (n <= 32) {
        std::size_t bound = static_cast<std::size_t>(n) * n *
                            std::min<std::size_t>(diameter, g.num_qualities());
        bound += n;  // self entries sit outside the per-pair argument
        if (idx.total_entries() > bound) {
          note(st, st.bound_violations, "pair bound violated seed " + std::to_string(seed));
        }
      }
    }
  }
}

// ---------- 6/7: desk-scale performance graph ----------
void criteria67() {
  auto t0 = Clock::now();
  // Near-critical density (mean degree ~1.4): constrained BFS has to sweep a
  // large giant component while labels stay tractable to build.
  QualityGraph g = QualityGraph::generate_random(143000, 100000, 2, GenModel::kGnm, 4242);
  VertexOrder order = degree_order(g);

  BuildOptions fast_opts;
  fast_opts.prune = PruneKind::kFast;
  auto tb = Clock::now();
  WcIndex idx = build(g, order, fast_opts);
  double fast_build = secs(tb);

  auto workload = gen_workload(g, 10000, 99);
  std::vector<QualityRank> ranks;
  ranks.reserve(workload.size());
  for (const auto& q : workload) ranks.push_back(g.rank_for_threshold(q.w));

  // criterion 6: instrumented entry-touch bound
  std::size_t over_budget = 0;
  for (std::size_t i = 0; i < workload.size(); ++i) {
    QueryStats stats;
    query_distance(idx, workload[i].s, workload[i].t, ranks[i], &stats);
    std::size_t budget =
        idx.out_labels(workload[i].s).size() + idx.in_labels(workload[i].t).size();
    if (stats.entries_touched > budget) ++over_budget;
  }
  report(6, "query work bound", over_budget == 0,
         over_budget == 0
             ? "10000 queries within |L(s)|+|L(t)| on n=143000 m=" + std::to_string(g.num_edges()) +
                   ", " + std::to_string(idx.total_entries()) + " entries"
             : std::to_string(over_budget) + " queries over budget");

  // criterion 7a: query latency ratio vs constrained BFS
  FrontierState fs;
  volatile Dist sink = 0;
  auto tq = Clock::now();
  for (std::size_t i = 0; i < workload.size(); ++i) {
    sink = wc_bfs(g, workload[i].s, workload[i].t, ranks[i], fs);
  }
  double cbfs_mean = secs(tq) / static_cast<double>(workload.size());
  tq = Clock::now();
  for (std::size_t i = 0; i < workload.size(); ++i) {
    sink = query_distance(idx, workload[i].s, workload[i].t, ranks[i]);
  }
  double wc_mean = secs(tq) / static_cast<double>(workload.size());
  (void)sink;

  // criterion 7b: fast prune path must not build slower than the reference
  BuildOptions ref_opts;
  ref_opts.prune = PruneKind::kNaive;
  tb = Clock::now();
  WcIndex ref_idx = build(g, order, ref_opts);
  double ref_build = secs(tb);
  bool same_size = ref_idx.total_entries() == idx.total_entries();

  double ratio = wc_mean > 0 ? cbfs_mean / wc_mean : 1e9;
  bool ok = ratio >= 100.0 && fast_build <= ref_build && same_size;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "cbfs %.1fus vs index %.3fus (%.0fx); build fast %.2fs vs reference %.2fs%s",
                cbfs_mean * 1e6, wc_mean * 1e6, ratio, fast_build, ref_build,
                same_size ? "" : "; SIZE MISMATCH");
  report(7, "performance ordering", ok, detail);
  std::printf("  [criteria 6/7 total %.1fs]\n", secs(t0));
}

// ---------- 8: extensions ----------
void criterion8() {
  std::size_t bad_paths = 0, directed_mismatches = 0;

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    QualityGraph g = QualityGraph::generate_random(18, 40, 4, GenModel::kGnm, seed + 7000);
    BuildOptions opts;
    opts.path_mode = true;
    WcIndex idx = build(g, degree_order(g), opts);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
      for (VertexId t = 0; t < g.num_vertices(); ++t) {
        for (QualityRank w = 0; w < g.num_qualities(); ++w) {
          Dist d = query_distance(idx, s, t, w);
          if (d == kInfDist) continue;
          auto p = reconstruct_path(idx, s, t, w);
          if (!p || p->size() != d + 1 || p->front() != s || p->back() != t) {
            ++bad_paths;
            continue;
          }
          for (std::size_t i = 0; i + 1 < p->size(); ++i) {
            bool edge_ok = false;
            for (const auto& e : g.neighbors((*p)[i])) {
              if (e.to == (*p)[i + 1] && e.quality >= w) edge_ok = true;
            }
            if (!edge_ok) ++bad_paths;
          }
        }
      }
    }
  }

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed + 9000);
    VertexId n = 6 + static_cast<VertexId>(rng() % 27);  // 6..32
    std::uniform_int_distribution<VertexId> vd(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> qd(1, 4);
    std::vector<RawEdge> edges;
    std::map<std::pair<VertexId, VertexId>, bool> seen;
    std::size_t m = std::min<std::size_t>(3ull * n, static_cast<std::size_t>(n) * (n - 1));
    while (edges.size() < m) {
      VertexId u = vd(rng), v = vd(rng);
      if (u == v || seen.count({u, v})) continue;
      seen[{u, v}] = true;
      edges.push_back({u, v, static_cast<double>(qd(rng)), 1});
    }
    QualityGraph g = QualityGraph::from_edges(edges, true, n);
    WcIndex idx = build_directed(g, degree_order(g));
    AllPairsOracle oracle(g);
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) {
        for (QualityRank w = 0; w < g.num_qualities(); ++w) {
          if (query_distance(idx, s, t, w) != oracle.at(s, t, w)) ++directed_mismatches;
        }
      }
    }
  }

  bool ok = bad_paths == 0 && directed_mismatches == 0;
  report(8, "extensions", ok,
         ok ? "path mode valid on 40 graphs; directed sweep clean on 40 digraphs"
            : std::to_string(bad_paths) + " bad paths, " + std::to_string(directed_mismatches) +
                  " directed mismatches");
}

}  // namespace

int main() {
  criterion1();
  criterion2();

  auto t0 = Clock::now();
  SweepStats st;
  sweep(st, 1000);
  report(3, "oracle equivalence", st.mismatches == 0,
         std::to_string(st.graphs) + " graphs x 4 orderings in " + std::to_string(secs(t0)) +
             "s" + (st.mismatches ? "; first: " + st.first_error : ""));
  report(4, "property suite", st.property_violations == 0,
         st.property_violations == 0
             ? "monotone groups, append log, hub ranks, necessity on " +
                   std::to_string(st.necessity_graphs) + " small indexes"
             : st.first_error);
  report(5, "size dominance", st.size_violations == 0 && st.bound_violations == 0,
         st.size_violations == 0 && st.bound_violations == 0
             ? "combined index never larger than the flattened baseline"
             : st.first_error);

  criteria67();
  criterion8();

  std::printf("%s\n", g_all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return g_all_ok ? 0 : 1;
}
