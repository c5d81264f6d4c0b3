#pragma once

// Brute-force oracles and graph generators shared by the unit and acceptance
// tests. Oracles work from a dense adjacency matrix and never call the
// library's counting code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "motifgen/graph.hpp"
#include "motifgen/motif_census.hpp"

namespace motifgen::testing {

using Adjacency = std::vector<std::vector<char>>;

inline Adjacency dense(const Graph& g) {
  Adjacency a(g.node_count(), std::vector<char>(g.node_count(), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back(make_edge(a, b));
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back(make_edge(i, static_cast<NodeId>((i + 1) % n)));
  return Graph::from_edges(n, std::move(edges));
}

// --- generators --------------------------------------------------------------

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

/// Random graph plus a random spanning tree, so it is always connected.
inline Graph connected_random(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  auto g = erdos_renyi(n, p, seed);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.push_back(make_edge(order[i], order[pick(rng)]));
  }
  return Graph::from_edges(n, std::move(edges));
}

/// Holme-Kim growth: preferential attachment with triad formation. Connected
/// and triangle-rich for m >= 2 and a high triad probability.
inline Graph holme_kim(std::size_t n, std::size_t m, double triad_p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::set<NodeId>> adj(n);
  std::vector<NodeId> ends;  // one entry per edge endpoint
  const auto link = [&](NodeId a, NodeId b) {
    if (a == b || adj[a].count(b)) return false;
    adj[a].insert(b);
    adj[b].insert(a);
    ends.push_back(a);
    ends.push_back(b);
    return true;
  };
  const auto m0 = static_cast<NodeId>(std::max<std::size_t>(m + 1, 3));
  for (NodeId i = 0; i < m0; ++i) {
    for (NodeId j = i + 1; j < m0; ++j) link(i, j);
  }
  for (auto v = m0; v < n; ++v) {
    std::size_t added = 0;
    std::optional<NodeId> last;
    for (std::size_t guard = 0; added < m && guard < 100 * m; ++guard) {
      if (last && unit(rng) < triad_p && !adj[*last].empty()) {
        std::vector<NodeId> cand(adj[*last].begin(), adj[*last].end());
        const NodeId w = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
        if (link(v, w)) {
          ++added;
          continue;
        }
      }
      const NodeId target = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
      if (link(v, target)) {
        ++added;
        last = target;
      }
    }
  }
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (const NodeId b : adj[a]) {
      if (a < b) edges.push_back({a, b});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

// --- oracles -----------------------------------------------------------------

inline int triple_edges(const Adjacency& a, NodeId i, NodeId j, NodeId k) { return a[i][j] + a[i][k] + a[j][k]; }

inline MotifCensus brute_census(const Graph& g) {
  const auto a = dense(g);
  const auto n = static_cast<NodeId>(g.node_count());
  MotifCensus c;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      for (NodeId k = j + 1; k < n; ++k) {
        const int e = triple_edges(a, i, j, k);
        if (e == 2) ++c.count_v;
        if (e == 3) ++c.count_t;
      }
    }
  }
  return c;
}

inline EdgeMotifCounts brute_participation(const Graph& g) {
  const auto a = dense(g);
  const auto n = static_cast<NodeId>(g.node_count());
  EdgeMotifCounts c;
  c.n_v.assign(g.edge_count(), 0);
  c.n_t.assign(g.edge_count(), 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto [u, v] = g.edge(id);
    for (NodeId k = 0; k < n; ++k) {
      if (k == u || k == v) continue;
      const int e = triple_edges(a, u, v, k);
      if (e == 2) ++c.n_v[id];
      if (e == 3) ++c.n_t[id];
    }
  }
  return c;
}

/// Instances in the library's canonical form, sorted.
inline std::vector<MotifInstance> brute_instances(const Graph& g, MotifType type) {
  const auto a = dense(g);
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<MotifInstance> out;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      for (NodeId k = j + 1; k < n; ++k) {
        const int e = triple_edges(a, i, j, k);
        if (type == MotifType::T && e == 3) out.push_back({MotifType::T, {i, j, k}});
        if (type == MotifType::V && e == 2) {
          // The center is the node adjacent to both others.
          if (a[i][j] && a[i][k]) out.push_back({MotifType::V, {i, j, k}});
          if (a[j][i] && a[j][k]) out.push_back({MotifType::V, {j, i, k}});
          if (a[k][i] && a[k][j]) out.push_back({MotifType::V, {k, i, j}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Each 4-subset {a,b,c,d} supports three distinct 4-cycles.
inline Count brute_four_cycles(const Graph& g) {
  const auto x = dense(g);
  const auto n = static_cast<NodeId>(g.node_count());
  Count total = 0;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) {
        for (NodeId d = c + 1; d < n; ++d) {
          total += (x[a][b] && x[b][c] && x[c][d] && x[d][a]);
          total += (x[a][b] && x[b][d] && x[d][c] && x[c][a]);
          total += (x[a][c] && x[c][b] && x[b][d] && x[d][a]);
        }
      }
    }
  }
  return total;
}

inline std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline bool bfs_connected(const Graph& g) {
  if (g.node_count() == 0) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const NodeId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.node_count();
}

/// Mann-Whitney AUC by enumerating every (positive, negative) pair.
inline double brute_auc(const std::vector<double>& pos, const std::vector<double>& neg) {
  double wins = 0.0;
  for (const double p : pos) {
    for (const double q : neg) wins += p > q ? 1.0 : (p == q ? 0.5 : 0.0);
  }
  return wins / static_cast<double>(pos.size() * neg.size());
}

/// AP with ties resolved against the positives: a positive at score s is
/// preceded by every item scoring above s and every negative scoring s.
inline double brute_ap(const std::vector<double>& pos, const std::vector<double>& neg) {
  double sum = 0.0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    // Among tied positives, order is irrelevant to the sum; rank them by index.
    std::size_t above = 0;
    std::size_t hits = 1;
    for (const double q : neg) above += q >= pos[i];
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (j == i) continue;
      if (pos[j] > pos[i] || (pos[j] == pos[i] && j < i)) ++hits;
    }
    sum += static_cast<double>(hits) / static_cast<double>(hits + above);
  }
  return sum / static_cast<double>(pos.size());
}

}  // namespace motifgen::testing
