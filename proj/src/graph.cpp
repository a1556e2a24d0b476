#include "wcsd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

namespace wcsd {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xFF;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

QualityGraph QualityGraph::from_edges(const std::vector<RawEdge>& edges, bool directed,
                                      VertexId universe_n) {
  QualityGraph g;
  g.directed_ = directed;

  for (const RawEdge& e : edges) {
    if (e.u < 0 || e.v < 0) throw GraphError("negative vertex id");
    if (e.length == 0) throw GraphError("edge length must be positive");
  }

  // Compact sparse ids to dense [0, n) in ascending numeric order, so a
  // write -> load round trip of an already-dense graph is the identity.
  {
    std::vector<std::int64_t> ids;
    for (VertexId v = 0; v < universe_n; ++v) ids.push_back(v);
    for (const RawEdge& e : edges) {
      ids.push_back(e.u);
      ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    g.original_ids_ = std::move(ids);
    for (std::size_t i = 0; i < g.original_ids_.size(); ++i) {
      g.id_map_.emplace(g.original_ids_[i], static_cast<VertexId>(i));
    }
  }
  g.n_ = static_cast<VertexId>(g.original_ids_.size());
  if (g.n_ == 0) throw GraphError("empty graph");

  // Collapse parallel edges keeping the maximum quality (a lower-quality
  // duplicate is dominated for every query); drop self-loops.
  struct Best {
    double quality;
    std::uint32_t length;
  };
  std::map<std::pair<VertexId, VertexId>, Best> best;
  for (const RawEdge& e : edges) {
    VertexId u = g.id_map_.at(e.u), v = g.id_map_.at(e.v);
    if (u == v) continue;
    auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    auto [it, inserted] = best.try_emplace(key, Best{e.quality, e.length});
    if (!inserted && e.quality > it->second.quality) it->second = Best{e.quality, e.length};
  }
  if (best.empty()) throw GraphError("graph has no usable edges");

  std::vector<double> raws;
  raws.reserve(best.size());
  for (const auto& [k, b] : best) raws.push_back(b.quality);
  std::sort(raws.begin(), raws.end());
  raws.erase(std::unique(raws.begin(), raws.end()), raws.end());
  g.quality_table_ = std::move(raws);

  std::vector<std::vector<Edge>> adj(g.n_), in_adj(directed ? g.n_ : 0);
  for (const auto& [k, b] : best) {
    auto r = static_cast<QualityRank>(
        std::lower_bound(g.quality_table_.begin(), g.quality_table_.end(), b.quality) -
        g.quality_table_.begin());
    if (b.length != 1) g.weighted_ = true;
    adj[k.first].push_back({k.second, r, b.length});
    if (directed) {
      in_adj[k.second].push_back({k.first, r, b.length});
    } else {
      adj[k.second].push_back({k.first, r, b.length});
    }
  }
  g.edge_count_ = best.size();
  g.finalize(std::move(adj), std::move(in_adj));
  return g;
}

void QualityGraph::finalize(std::vector<std::vector<Edge>> adj,
                            std::vector<std::vector<Edge>> in_adj) {
  auto flatten = [](std::vector<std::vector<Edge>>& lists, std::vector<std::size_t>& offsets,
                    std::vector<Edge>& out) {
    offsets.assign(lists.size() + 1, 0);
    for (std::size_t i = 0; i < lists.size(); ++i) {
      std::sort(lists[i].begin(), lists[i].end(),
                [](const Edge& a, const Edge& b) { return a.to < b.to; });
      offsets[i + 1] = offsets[i] + lists[i].size();
    }
    out.clear();
    out.reserve(offsets.back());
    for (auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  };
  flatten(adj, out_offsets_, out_edges_);
  if (directed_) flatten(in_adj, in_offsets_, in_edges_);
  compute_fingerprint();
}

void QualityGraph::compute_fingerprint() {
  std::uint64_t h = 14695981039346656037ULL;
  h = fnv1a(h, n_);
  h = fnv1a(h, edge_count_);
  h = fnv1a(h, directed_ ? 1 : 0);
  for (double q : quality_table_) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(q));
    std::memcpy(&bits, &q, sizeof(bits));
    h = fnv1a(h, bits);
  }
  for (VertexId u = 0; u < n_; ++u) {
    for (const Edge& e : neighbors(u)) {
      h = fnv1a(h, (static_cast<std::uint64_t>(u) << 32) | e.to);
      h = fnv1a(h, (static_cast<std::uint64_t>(e.quality) << 32) | e.length);
    }
  }
  fingerprint_ = h;
}

QualityGraph QualityGraph::load_edge_list(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t lineno = 0;
  VertexId universe_n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      // Our own writer records the vertex count so isolated vertices survive.
      if (line.rfind("# wcsd edge list n=", 0) == 0) {
        universe_n = static_cast<VertexId>(std::stoul(line.substr(19)));
      }
      continue;
    }
    std::istringstream ss(line);
    RawEdge e;
    if (!(ss >> e.u >> e.v >> e.quality)) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'u v q [len]'");
    }
    long long len;
    if (ss >> len) {
      if (len <= 0) throw ParseError(path + ":" + std::to_string(lineno) + ": non-positive length");
      e.length = static_cast<std::uint32_t>(len);
    }
    if (e.u < 0 || e.v < 0) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": negative vertex id");
    }
    edges.push_back(e);
  }
  if (edges.empty()) throw GraphError(path + ": empty graph");
  return from_edges(edges, directed, universe_n);
}

QualityGraph QualityGraph::load_dimacs(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c' || line[0] == 'p' || line[0] == '#') continue;
    if (line[0] != 'a') continue;
    std::istringstream ss(line);
    char tag;
    RawEdge e;
    if (!(ss >> tag >> e.u >> e.v >> e.quality)) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'a u v q'");
    }
    if (e.u < 0 || e.v < 0) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": negative vertex id");
    }
    edges.push_back(e);
  }
  if (edges.empty()) throw GraphError(path + ": empty graph");
  return from_edges(edges, directed);
}

QualityGraph QualityGraph::generate_random(VertexId n, std::size_t m, std::uint32_t k_qualities,
                                           GenModel model, std::uint64_t seed) {
  if (n == 0) throw GraphError("n must be positive");
  if (k_qualities == 0) throw GraphError("k_qualities must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> qdist(1, k_qualities);
  std::vector<RawEdge> edges;

  if (model == GenModel::kGnm) {
    std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (m > max_edges) {
      throw GraphError("m=" + std::to_string(m) + " exceeds max simple-graph edges (" +
                       std::to_string(max_edges) + ")");
    }
    std::unordered_set<std::uint64_t> seen;
    std::uniform_int_distribution<VertexId> vdist(0, n - 1);
    while (edges.size() < m) {
      VertexId u = vdist(rng), v = vdist(rng);
      if (u == v) continue;
      std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
      if (!seen.insert(key).second) continue;
      edges.push_back({u, v, static_cast<double>(qdist(rng)), 1});
    }
    return from_edges(edges, false, n);
  }

  // Grid: most-square r x c lattice with r*c = n.
  VertexId r = static_cast<VertexId>(std::sqrt(static_cast<double>(n)));
  while (r > 1 && n % r != 0) --r;
  VertexId c = n / r;
  for (VertexId i = 0; i < r; ++i) {
    for (VertexId j = 0; j < c; ++j) {
      VertexId v = i * c + j;
      if (j + 1 < c) edges.push_back({v, v + 1, static_cast<double>(qdist(rng)), 1});
      if (i + 1 < r) edges.push_back({v, v + c, static_cast<double>(qdist(rng)), 1});
    }
  }
  if (edges.empty()) throw GraphError("grid too small");
  return from_edges(edges, false);
}

QualityRank QualityGraph::rank_for_threshold(double w) const {
  return static_cast<QualityRank>(
      std::lower_bound(quality_table_.begin(), quality_table_.end(), w) - quality_table_.begin());
}

std::optional<VertexId> QualityGraph::internal_id(std::int64_t original) const {
  auto it = id_map_.find(original);
  if (it == id_map_.end()) return std::nullopt;
  return it->second;
}

QualityGraph QualityGraph::filter_at_rank(QualityRank r) const {
  QualityGraph g;
  g.n_ = n_;
  g.directed_ = directed_;
  g.weighted_ = weighted_;
  g.quality_table_ = quality_table_;
  g.original_ids_ = original_ids_;
  g.id_map_ = id_map_;
  std::vector<std::vector<Edge>> adj(n_), in_adj(directed_ ? n_ : 0);
  std::size_t kept = 0;
  for (VertexId u = 0; u < n_; ++u) {
    for (const Edge& e : neighbors(u)) {
      if (e.quality < r) continue;
      adj[u].push_back(e);
      if (directed_ || u < e.to) ++kept;
    }
    if (directed_) {
      for (const Edge& e : in_neighbors(u)) {
        if (e.quality >= r) in_adj[u].push_back(e);
      }
    }
  }
  g.edge_count_ = kept;
  g.finalize(std::move(adj), std::move(in_adj));
  return g;
}

void QualityGraph::write_edge_list(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  out.precision(17);
  out << "# wcsd edge list n=" << n_ << " m=" << edge_count_ << (directed_ ? " directed" : "")
      << "\n";
  for (VertexId u = 0; u < n_; ++u) {
    for (const Edge& e : neighbors(u)) {
      if (!directed_ && e.to < u) continue;
      out << u << ' ' << e.to << ' ' << raw_quality(e.quality);
      if (weighted_) out << ' ' << e.length;
      out << '\n';
    }
  }
}

bool QualityGraph::same_structure(const QualityGraph& other) const {
  return n_ == other.n_ && edge_count_ == other.edge_count_ && directed_ == other.directed_ &&
         quality_table_ == other.quality_table_ && out_offsets_ == other.out_offsets_ &&
         std::equal(out_edges_.begin(), out_edges_.end(), other.out_edges_.begin(),
                    [](const Edge& a, const Edge& b) {
                      return a.to == b.to && a.quality == b.quality && a.length == b.length;
                    });
}

}  // namespace wcsd
