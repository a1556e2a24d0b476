#include "wcsd/ordering.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_set>

namespace wcsd {

VertexOrder VertexOrder::from_sequence(std::vector<VertexId> seq) {
  VertexOrder o;
  o.rank.assign(seq.size(), 0);
  for (std::uint32_t i = 0; i < seq.size(); ++i) o.rank[seq[i]] = i;
  o.sequence = std::move(seq);
  return o;
}

bool VertexOrder::valid_for(VertexId n) const {
  if (sequence.size() != n || rank.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (VertexId v : sequence) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rank[sequence[i]] != i) return false;
  }
  return true;
}

VertexOrder identity_order(VertexId n) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), 0u);
  return VertexOrder::from_sequence(std::move(seq));
}

VertexOrder random_order(VertexId n, std::uint64_t seed) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), 0u);
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return VertexOrder::from_sequence(std::move(seq));
}

VertexOrder degree_order(const QualityGraph& g) {
  std::vector<VertexId> seq(g.num_vertices());
  std::iota(seq.begin(), seq.end(), 0u);
  std::stable_sort(seq.begin(), seq.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return VertexOrder::from_sequence(std::move(seq));
}

namespace {

struct MdeRaw {
  std::vector<VertexId> elimination;            // global vertex ids
  std::vector<std::vector<VertexId>> bags;      // sorted
};

// Min-degree elimination over an adjacency-set representation. Fill-in
// edges carry no quality; ordering ignores qualities entirely.
MdeRaw run_mde(std::vector<std::unordered_set<VertexId>> adj, const std::vector<VertexId>& verts) {
  MdeRaw out;
  std::vector<bool> alive(adj.size(), false);
  for (VertexId v : verts) alive[v] = true;

  using Key = std::pair<std::uint32_t, VertexId>;  // (degree, id)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
  for (VertexId v : verts) pq.push({static_cast<std::uint32_t>(adj[v].size()), v});

  while (!pq.empty()) {
    auto [deg, v] = pq.top();
    pq.pop();
    if (!alive[v] || deg != adj[v].size()) continue;  // stale entry
    alive[v] = false;

    std::vector<VertexId> nbrs(adj[v].begin(), adj[v].end());
    std::sort(nbrs.begin(), nbrs.end());
    std::vector<VertexId> bag = nbrs;
    bag.insert(bag.begin(), v);
    std::sort(bag.begin(), bag.end());
    out.elimination.push_back(v);
    out.bags.push_back(std::move(bag));

    for (VertexId u : nbrs) adj[u].erase(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[nbrs[i]].insert(nbrs[j]);
        adj[nbrs[j]].insert(nbrs[i]);
      }
    }
    adj[v].clear();
    for (VertexId u : nbrs) pq.push({static_cast<std::uint32_t>(adj[u].size()), u});
  }
  return out;
}

TreeDecomposition make_decomposition(const MdeRaw& raw, VertexId n) {
  TreeDecomposition td;
  td.elimination_sequence = raw.elimination;
  td.bags = raw.bags;
  td.parent.assign(raw.bags.size(), -1);
  std::vector<std::uint32_t> pos(n, 0);
  for (std::uint32_t i = 0; i < raw.elimination.size(); ++i) pos[raw.elimination[i]] = i;
  std::uint32_t width = 0;
  for (std::uint32_t i = 0; i < raw.bags.size(); ++i) {
    width = std::max<std::uint32_t>(width, static_cast<std::uint32_t>(raw.bags[i].size()) - 1);
    std::int64_t best = -1;
    for (VertexId u : raw.bags[i]) {
      if (u == raw.elimination[i]) continue;
      if (best < 0 || pos[u] < static_cast<std::uint32_t>(best)) best = pos[u];
    }
    td.parent[i] = best;
  }
  td.width = width;
  return td;
}

}  // namespace

MdeResult mde_order(const QualityGraph& g) {
  VertexId n = g.num_vertices();
  std::vector<std::unordered_set<VertexId>> adj(n);
  for (VertexId u = 0; u < n; ++u) {
    for (const auto& e : g.neighbors(u)) {
      adj[u].insert(e.to);
      adj[e.to].insert(u);  // directed graphs use the underlying undirected structure
    }
  }
  std::vector<VertexId> verts(n);
  std::iota(verts.begin(), verts.end(), 0u);
  MdeRaw raw = run_mde(std::move(adj), verts);

  std::vector<VertexId> seq(raw.elimination.rbegin(), raw.elimination.rend());
  MdeResult res;
  res.order = VertexOrder::from_sequence(std::move(seq));
  res.decomposition = make_decomposition(raw, n);
  return res;
}

VertexOrder hybrid_order(const QualityGraph& g, VertexId delta) {
  VertexId n = g.num_vertices();
  std::vector<VertexId> core, periphery;
  for (VertexId v = 0; v < n; ++v) {
    (g.degree(v) > delta ? core : periphery).push_back(v);
  }
  std::stable_sort(core.begin(), core.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  std::vector<bool> is_periphery(n, false);
  for (VertexId v : periphery) is_periphery[v] = true;
  std::vector<std::unordered_set<VertexId>> adj(n);
  for (VertexId u = 0; u < n; ++u) {
    if (!is_periphery[u]) continue;
    for (const auto& e : g.neighbors(u)) {
      if (!is_periphery[e.to]) continue;
      adj[u].insert(e.to);
      adj[e.to].insert(u);
    }
  }
  MdeRaw raw = run_mde(std::move(adj), periphery);

  std::vector<VertexId> seq = core;
  seq.insert(seq.end(), raw.elimination.rbegin(), raw.elimination.rend());
  return VertexOrder::from_sequence(std::move(seq));
}

VertexId degree_percentile(const QualityGraph& g, double pct) {
  VertexId n = g.num_vertices();
  std::vector<VertexId> degs(n);
  for (VertexId v = 0; v < n; ++v) degs[v] = g.degree(v);
  std::sort(degs.begin(), degs.end());
  double clamped = std::clamp(pct, 0.0, 100.0);
  auto idx = static_cast<std::size_t>(clamped / 100.0 * (n - 1));
  return degs[idx];
}

bool TreeDecomposition::validate(const QualityGraph& g, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  VertexId n = g.num_vertices();
  std::vector<bool> covered(n, false);
  for (const auto& bag : bags) {
    for (VertexId v : bag) {
      if (v >= n) return fail("bag contains out-of-range vertex");
      covered[v] = true;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!covered[v]) return fail("vertex " + std::to_string(v) + " in no bag");
  }
  for (VertexId u = 0; u < n; ++u) {
    for (const auto& e : g.neighbors(u)) {
      if (e.to < u) continue;
      bool found = false;
      for (const auto& bag : bags) {
        if (std::binary_search(bag.begin(), bag.end(), u) &&
            std::binary_search(bag.begin(), bag.end(), e.to)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return fail("edge (" + std::to_string(u) + "," + std::to_string(e.to) + ") in no bag");
      }
    }
  }
  // Connectivity: for each vertex the bags containing it must form one
  // subtree, i.e. exactly one of them lacks an in-set parent.
  std::vector<std::vector<std::uint32_t>> holding(n);
  for (std::uint32_t i = 0; i < bags.size(); ++i) {
    for (VertexId v : bags[i]) holding[v].push_back(i);
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto& ids = holding[v];
    std::unordered_set<std::uint32_t> in_set(ids.begin(), ids.end());
    std::size_t roots = 0;
    for (std::uint32_t i : ids) {
      if (parent[i] < 0 || !in_set.count(static_cast<std::uint32_t>(parent[i]))) ++roots;
    }
    if (roots != 1) {
      return fail("bags of vertex " + std::to_string(v) + " are not a connected subtree");
    }
  }
  return true;
}

VertexOrder load_order(const std::string& path, VertexId n) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open order file " + path);
  std::vector<VertexId> seq;
  std::int64_t v;
  while (in >> v) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
      throw GraphError("order file vertex id out of range: " + std::to_string(v));
    }
    seq.push_back(static_cast<VertexId>(v));
  }
  VertexOrder o = VertexOrder::from_sequence(std::move(seq));
  if (!o.valid_for(n)) throw GraphError("order file is not a permutation of [0," +
                                        std::to_string(n) + ")");
  return o;
}

void save_order(const std::string& path, const VertexOrder& order) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write order file " + path);
  for (VertexId v : order.sequence) out << v << '\n';
}

}  // namespace wcsd
