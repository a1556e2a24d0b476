// Command-line front end: graph generation, vertex orders, index
// construction, queries, validation, benchmarks and format conversion.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wcsd/bench.hpp"
#include "wcsd/container.hpp"
#include "wcsd/graph.hpp"
#include "wcsd/naive_index.hpp"
#include "wcsd/online.hpp"
#include "wcsd/ordering.hpp"
#include "wcsd/wc_index.hpp"

namespace {

using namespace wcsd;

std::string fmt_dist(Dist d) { return d == kInfDist ? "INF" : std::to_string(d); }

QualityGraph load_graph(const std::string& path, bool directed, const std::string& format) {
  if (format == "dimacs") return QualityGraph::load_dimacs(path, directed);
  return QualityGraph::load_edge_list(path, directed);
}

VertexOrder make_order(const QualityGraph& g, const std::string& spec, double delta_pct,
                       std::uint64_t seed) {
  if (spec == "identity") return identity_order(g.num_vertices());
  if (spec == "degree") return degree_order(g);
  if (spec == "mde") return mde_order(g).order;
  if (spec == "hybrid") return hybrid_order(g, degree_percentile(g, delta_pct));
  if (spec == "random") return random_order(g.num_vertices(), seed);
  return load_order(spec, g.num_vertices());  // treat as a file path
}

std::size_t default_mem_cap() {
  if (const char* env = std::getenv("WCSD_MEM_CAP")) {
    return static_cast<std::size_t>(std::stoull(env));
  }
  return kDefaultEntryCapBytes;
}

VertexId resolve_id(const std::optional<QualityGraph>& g, std::int64_t raw) {
  if (!g) {
    if (raw < 0) throw GraphError("negative vertex id");
    return static_cast<VertexId>(raw);
  }
  auto v = g->internal_id(raw);
  if (!v) throw GraphError("vertex id " + std::to_string(raw) + " not in graph");
  return *v;
}

std::int64_t echo_id(const std::optional<QualityGraph>& g, VertexId v) {
  return g ? g->original_id(v) : static_cast<std::int64_t>(v);
}

int run_query(const LoadedIndex& idx, const std::optional<QualityGraph>& g, std::int64_t raw_s,
              std::int64_t raw_t, double w, bool trace, bool path) {
  VertexId s = resolve_id(g, raw_s);
  VertexId t = resolve_id(g, raw_t);
  QualityRank rank = idx.rank_for_threshold(w);
  if (idx.naive) {
    std::cout << fmt_dist(query_naive(*idx.naive, s, t, rank)) << '\n';
    return 0;
  }
  const WcIndex& wc = *idx.wc;
  if (trace) {
    std::vector<HubCandidate> cands;
    Dist d = query_distance_traced(wc, s, t, rank, cands);
    for (const auto& c : cands) {
      std::cout << "# hub " << echo_id(g, c.hub) << ": " << c.dist_s << "+" << c.dist_t << "="
                << c.total << '\n';
    }
    std::cout << fmt_dist(d) << '\n';
    return 0;
  }
  if (path) {
    auto p = reconstruct_path(wc, s, t, rank);
    if (!p) {
      std::cout << "NONE\n";
      return 0;
    }
    for (std::size_t i = 0; i < p->size(); ++i) {
      std::cout << (i ? " " : "") << echo_id(g, (*p)[i]);
    }
    std::cout << '\n';
    return 0;
  }
  std::cout << fmt_dist(query_distance(wc, s, t, rank)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quality-constrained shortest distance toolkit"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate a synthetic graph");
  struct {
    std::uint32_t n = 0;
    std::size_t m = 0;
    std::uint32_t k = 1;
    std::string model = "gnm";
    std::uint64_t seed = 0;
    std::string out;
  } g_opts;
  gen->add_option("--n", g_opts.n, "vertex count")->required();
  gen->add_option("--m", g_opts.m, "edge count")->required();
  gen->add_option("--k", g_opts.k, "number of distinct qualities");
  gen->add_option("--model", g_opts.model)->check(CLI::IsMember({"gnm", "grid"}));
  gen->add_option("--seed", g_opts.seed);
  gen->add_option("--out", g_opts.out, "output edge-list path")->required();

  // --- order ---
  auto* ord = app.add_subcommand("order", "compute a vertex order");
  struct {
    std::string graph;
    bool directed = false;
    std::string strategy = "degree";
    double delta_pct = 99.0;
    std::uint64_t seed = 0;
    std::string out;
  } o_opts;
  ord->add_option("--graph", o_opts.graph)->required();
  ord->add_flag("--directed", o_opts.directed);
  ord->add_option("--strategy", o_opts.strategy)
      ->check(CLI::IsMember({"degree", "mde", "hybrid", "identity", "random"}));
  ord->add_option("--delta-percentile", o_opts.delta_pct, "hybrid core cutoff percentile");
  ord->add_option("--seed", o_opts.seed);
  ord->add_option("--out", o_opts.out)->required();

  // --- build ---
  auto* bld = app.add_subcommand("build", "construct an index");
  struct {
    std::string graph;
    std::string format = "edgelist";
    std::string mode = "wc";
    std::string order = "degree";
    std::string prune = "fast";
    double delta_pct = 99.0;
    std::uint64_t seed = 0;
    std::size_t mem_cap = default_mem_cap();
    std::string out;
  } b_opts;
  bld->add_option("--graph", b_opts.graph)->required();
  bld->add_option("--format", b_opts.format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  bld->add_option("--mode", b_opts.mode)
      ->check(CLI::IsMember({"wc", "naive", "wc-path", "wc-directed"}));
  bld->add_option("--order", b_opts.order, "strategy name or order file path");
  bld->add_option("--prune", b_opts.prune)->check(CLI::IsMember({"naive", "fast", "both"}));
  bld->add_option("--delta-percentile", b_opts.delta_pct);
  bld->add_option("--seed", b_opts.seed);
  bld->add_option("--mem-cap", b_opts.mem_cap, "naive labeling entry-byte cap");
  bld->add_option("--out", b_opts.out)->required();

  // --- query ---
  auto* qry = app.add_subcommand("query", "answer queries against an index");
  struct {
    std::string index;
    std::string graph;
    bool directed = false;
    std::int64_t s = 0, t = 0;
    double w = 0;
    bool trace = false;
    bool path = false;
    std::string batch;
  } q_opts;
  qry->add_option("--index", q_opts.index)->required();
  qry->add_option("--graph", q_opts.graph, "map external vertex ids through this graph");
  qry->add_flag("--directed", q_opts.directed);
  auto* qs = qry->add_option("--s", q_opts.s);
  auto* qt = qry->add_option("--t", q_opts.t);
  auto* qw = qry->add_option("--w", q_opts.w, "quality threshold (raw value)");
  qry->add_flag("--trace", q_opts.trace, "print candidate hub pairs");
  qry->add_flag("--path", q_opts.path, "print a witness path (path-mode index)");
  auto* qb = qry->add_option("--batch", q_opts.batch, "file of 's t w' lines");
  qs->excludes(qb);
  qb->excludes(qs)->excludes(qt)->excludes(qw);

  // --- bench ---
  auto* ben = app.add_subcommand("bench", "run the benchmark harness");
  struct {
    std::string graph;
    std::string format = "edgelist";
    bool directed = false;
    std::vector<std::string> algos = {"wbfs", "dijkstra", "cbfs", "naive", "wcindex", "wcindex+"};
    std::size_t queries = 10000;
    std::uint64_t seed = 0;
    std::size_t mem_cap = default_mem_cap();
    std::string out = "bench";
  } n_opts;
  ben->add_option("--graph", n_opts.graph)->required();
  ben->add_option("--format", n_opts.format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  ben->add_flag("--directed", n_opts.directed);
  ben->add_option("--algos", n_opts.algos, "subset to run")->delimiter(',');
  ben->add_option("--queries", n_opts.queries);
  ben->add_option("--seed", n_opts.seed);
  ben->add_option("--mem-cap", n_opts.mem_cap);
  ben->add_option("--out", n_opts.out, "report path prefix (.json/.csv appended)");

  // --- validate ---
  auto* val = app.add_subcommand("validate", "check an index against its graph");
  struct {
    std::string graph;
    std::string format = "edgelist";
    bool directed = false;
    std::string index;
    std::string mode = "all";
  } v_opts;
  val->add_option("--graph", v_opts.graph)->required();
  val->add_option("--format", v_opts.format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  val->add_flag("--directed", v_opts.directed);
  val->add_option("--index", v_opts.index)->required();
  val->add_option("--mode", v_opts.mode)
      ->check(CLI::IsMember({"sound", "complete", "minimal", "all"}));

  // --- convert ---
  auto* cnv = app.add_subcommand("convert", "convert between graph formats");
  struct {
    std::string in;
    std::string in_format = "dimacs";
    std::string out;
    bool directed = false;
  } c_opts;
  cnv->add_option("--in", c_opts.in)->required();
  cnv->add_option("--in-format", c_opts.in_format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  cnv->add_flag("--directed", c_opts.directed);
  cnv->add_option("--out", c_opts.out, "output edge-list path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (gen->parsed()) {
      GenModel model = g_opts.model == "grid" ? GenModel::kGrid : GenModel::kGnm;
      QualityGraph g =
          QualityGraph::generate_random(g_opts.n, g_opts.m, g_opts.k, model, g_opts.seed);
      g.write_edge_list(g_opts.out);
      std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
                << " qualities=" << g.num_qualities() << '\n';
      return 0;
    }

    if (ord->parsed()) {
      QualityGraph g = load_graph(o_opts.graph, o_opts.directed, "edgelist");
      VertexOrder order = make_order(g, o_opts.strategy, o_opts.delta_pct, o_opts.seed);
      save_order(o_opts.out, order);
      return 0;
    }

    if (bld->parsed()) {
      bool directed = b_opts.mode == "wc-directed";
      QualityGraph g = load_graph(b_opts.graph, directed, b_opts.format);
      VertexOrder order = make_order(g, b_opts.order, b_opts.delta_pct, b_opts.seed);
      if (b_opts.mode == "naive") {
        PerThresholdIndex idx = build_naive(g, order, b_opts.mem_cap);
        save_index(b_opts.out, idx, g.quality_table());
        std::cout << "entries=" << idx.total_entries() << '\n';
        return 0;
      }
      BuildOptions bo;
      bo.path_mode = b_opts.mode == "wc-path";
      bo.prune = b_opts.prune == "naive"  ? PruneKind::kNaive
                 : b_opts.prune == "both" ? PruneKind::kBoth
                                          : PruneKind::kFast;
      WcIndex idx = directed ? build_directed(g, order, bo) : build(g, order, bo);
      save_index(b_opts.out, idx, g.quality_table());
      std::cout << "entries=" << idx.total_entries() << '\n';
      return 0;
    }

    if (qry->parsed()) {
      LoadedIndex idx = load_index(q_opts.index);
      std::optional<QualityGraph> g;
      if (!q_opts.graph.empty()) {
        g = load_graph(q_opts.graph, q_opts.directed || idx.tag == SectionTag::kWcDirected,
                       "edgelist");
        verify_fingerprint(idx, *g);
      }
      if (!q_opts.batch.empty()) {
        std::ifstream in(q_opts.batch);
        if (!in) throw std::runtime_error("cannot open batch file " + q_opts.batch);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
          ++lineno;
          if (line.empty() || line[0] == '#') continue;
          std::istringstream ls(line);
          std::int64_t s, t;
          double w;
          if (!(ls >> s >> t >> w)) {
            throw ParseError("batch line " + std::to_string(lineno) + ": expected 's t w'");
          }
          run_query(idx, g, s, t, w, q_opts.trace, q_opts.path);
        }
        return 0;
      }
      return run_query(idx, g, q_opts.s, q_opts.t, q_opts.w, q_opts.trace, q_opts.path);
    }

    if (ben->parsed()) {
      QualityGraph g = load_graph(n_opts.graph, n_opts.directed, n_opts.format);
      std::vector<Algo> algos;
      for (const auto& name : n_opts.algos) {
        if (name == "wbfs") algos.push_back(Algo::kWbfs);
        else if (name == "dijkstra") algos.push_back(Algo::kDijkstra);
        else if (name == "cbfs") algos.push_back(Algo::kCbfs);
        else if (name == "naive") algos.push_back(Algo::kNaive);
        else if (name == "wcindex") algos.push_back(Algo::kWcIndex);
        else if (name == "wcindex+") algos.push_back(Algo::kWcIndexPlus);
        else throw std::runtime_error("unknown algorithm: " + name);
      }
      auto workload = gen_workload(g, n_opts.queries, n_opts.seed);
      BenchOptions bo;
      bo.mem_cap_bytes = n_opts.mem_cap;
      bo.workload_seed = n_opts.seed;
      BenchReport report = run_bench(g, algos, workload, bo);
      write_report(report, n_opts.out + ".json", n_opts.out + ".csv");
      std::cout << report.to_csv();
      return 0;
    }

    if (val->parsed()) {
      QualityGraph g = load_graph(v_opts.graph, v_opts.directed, v_opts.format);
      LoadedIndex idx = load_index(v_opts.index);
      verify_fingerprint(idx, g);
      if (!idx.wc) throw std::runtime_error("validate supports combined-index containers only");
      bool ok = true;
      auto run = [&](const char* name, ValidationReport (*fn)(const WcIndex&,
                                                              const QualityGraph&)) {
        ValidationReport rep = fn(*idx.wc, g);
        std::cout << name << ": " << (rep.ok() ? "ok" : "FAIL") << " (" << rep.checks
                  << " checks)\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << '\n';
        ok = ok && rep.ok();
      };
      if (v_opts.mode == "sound" || v_opts.mode == "all") run("sound", validate_sound);
      if (v_opts.mode == "complete" || v_opts.mode == "all") run("complete", validate_complete);
      if (v_opts.mode == "minimal" || v_opts.mode == "all") run("minimal", validate_minimal);
      return ok ? 0 : 1;
    }

    if (cnv->parsed()) {
      QualityGraph g = load_graph(c_opts.in, c_opts.directed, c_opts.in_format);
      g.write_edge_list(c_opts.out);
      std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
