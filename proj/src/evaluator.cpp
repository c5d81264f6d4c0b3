#include "motifgen/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "motifgen/rng.hpp"

namespace motifgen {

double kl_divergence(std::array<double, 2> p, std::array<double, 2> q) {
  for (auto* dist : {&p, &q}) {
    for (double& x : *dist) {
      if (x < 0.0) throw std::invalid_argument("kl_divergence: negative probability");
      if (x == 0.0) x = kKlFloor;
    }
  }
  double kl = 0.0;
  for (std::size_t k = 0; k < 2; ++k) kl += p[k] * std::log(p[k] / q[k]);
  return std::max(kl, 0.0);
}

MotifReport motif_report(const MotifCensus& input, const MotifCensus& generated) {
  MotifReport r;
  r.input = input;
  r.generated = generated;
  if (input.count_v > 0) r.normalized_v = static_cast<double>(generated.count_v) / static_cast<double>(input.count_v);
  if (input.count_t > 0) r.normalized_t = static_cast<double>(generated.count_t) / static_cast<double>(input.count_t);
  r.kl = kl_divergence({input.conc_v(), input.conc_t()}, {generated.conc_v(), generated.conc_t()});
  return r;
}

MotifReport motif_report(const Graph& input, const Graph& generated) {
  return motif_report(census3(input), census3(generated));
}

// ---------------------------------------------------------------------------

namespace {

/// Checks whether u and v stay connected once `skip` is removed, ignoring
/// edges already marked removed.
class BridgeProbe {
 public:
  explicit BridgeProbe(const Graph& g) : g_(g), stamp_(g.node_count(), 0) {}

  bool connected_without(NodeId u, NodeId v, EdgeId skip, const std::vector<char>& removed) {
    ++epoch_;
    frontier_.clear();
    frontier_.push_back(u);
    stamp_[u] = epoch_;
    for (std::size_t head = 0; head < frontier_.size(); ++head) {
      const NodeId x = frontier_[head];
      const auto nb = g_.neighbors(x);
      const auto inc = g_.incident_edges(x);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (inc[k] == skip || removed[inc[k]] || stamp_[nb[k]] == epoch_) continue;
        if (nb[k] == v) return true;
        stamp_[nb[k]] = epoch_;
        frontier_.push_back(nb[k]);
      }
    }
    return false;
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> frontier_;
};

std::array<Edge, 3> motif_edges(const MotifInstance& m, std::size_t* count) {
  const auto [a, b, c] = m.nodes;
  if (m.type == MotifType::V) {
    *count = 2;
    return {make_edge(a, b), make_edge(a, c), Edge{}};
  }
  *count = 3;
  return {make_edge(a, b), make_edge(a, c), make_edge(b, c)};
}

template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t k, Rng& rng) {
  for (std::size_t i = 0; i < k && i + 1 < items.size(); ++i) {
    const auto j = i + uniform_index(rng, items.size() - i);
    std::swap(items[i], items[j]);
  }
}

}  // namespace

HoldoutSplit split_holdout(const Graph& g, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw std::invalid_argument("split_holdout: test_fraction must be in (0, 1)");
  if (!is_connected(g)) throw std::invalid_argument("split_holdout: graph must be connected");

  auto rng = make_rng(seed, Stream::holdout);
  auto instances = enumerate_instances(g, MotifType::V);
  {
    auto triangles = enumerate_instances(g, MotifType::T);
    instances.insert(instances.end(), triangles.begin(), triangles.end());
  }
  const auto k = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(instances.size())));
  partial_shuffle(instances, k, rng);
  instances.resize(k);

  std::vector<EdgeId> candidates;
  for (const auto& m : instances) {
    std::size_t count = 0;
    const auto edges = motif_edges(m, &count);
    for (std::size_t e = 0; e < count; ++e) candidates.push_back(*g.edge_id(edges[e].u, edges[e].v));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  partial_shuffle(candidates, candidates.size(), rng);

  HoldoutSplit split;
  split.requested_removals = candidates.size();
  std::vector<char> removed(g.edge_count(), 0);
  BridgeProbe probe(g);
  for (const EdgeId id : candidates) {
    const auto& e = g.edge(id);
    if (probe.connected_without(e.u, e.v, id, removed)) {
      removed[id] = 1;
      split.test_edges.push_back(e);
    }
  }
  std::sort(split.test_edges.begin(), split.test_edges.end());

  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - split.test_edges.size());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!removed[id]) kept.push_back(g.edge(id));
  }
  split.train = Graph::from_edges(g.node_count(), std::move(kept));

  for (const auto& m : instances) {
    std::size_t count = 0;
    const auto edges = motif_edges(m, &count);
    for (std::size_t e = 0; e < count; ++e) {
      if (removed[*g.edge_id(edges[e].u, edges[e].v)]) {
        split.test_motifs.push_back(m);
        break;
      }
    }
  }
  std::sort(split.test_motifs.begin(), split.test_motifs.end());

  if (split.requested_removals > 0 && 2 * split.test_edges.size() < split.requested_removals) {
    split.warning = "connectivity allowed only " + std::to_string(split.test_edges.size()) + " of " +
                    std::to_string(split.requested_removals) + " requested edge removals";
  }

  // Negatives. Attempts are bounded so that near-complete graphs terminate.
  const std::size_t n = g.node_count();
  std::unordered_set<std::uint64_t> seen;
  const std::size_t edge_budget = 100 * split.test_edges.size() + 1000;
  for (std::size_t attempt = 0; split.test_non_edges.size() < split.test_edges.size() && attempt < edge_budget; ++attempt) {
    const auto a = static_cast<NodeId>(uniform_index(rng, n));
    const auto b = static_cast<NodeId>(uniform_index(rng, n));
    if (a == b || g.has_edge(a, b) || !seen.insert(edge_key(a, b)).second) continue;
    split.test_non_edges.push_back(make_edge(a, b));
  }

  std::set<std::array<NodeId, 4>> used;  // (type, sorted triple)
  const auto remember = [&used](MotifType type, std::array<NodeId, 3> nodes) {
    std::sort(nodes.begin(), nodes.end());
    return used.insert({static_cast<NodeId>(type), nodes[0], nodes[1], nodes[2]}).second;
  };
  for (const auto& positive : split.test_motifs) {
    for (std::size_t attempt = 0; attempt < 1000; ++attempt) {
      if (positive.type == MotifType::T) {
        // An open wedge scored as if it were closed.
        const auto c = static_cast<NodeId>(uniform_index(rng, n));
        const auto nb = g.neighbors(c);
        if (nb.size() < 2) continue;
        const auto i = uniform_index(rng, nb.size());
        const auto j = uniform_index(rng, nb.size());
        if (i == j || g.has_edge(nb[i], nb[j])) continue;
        const std::array<NodeId, 3> nodes{c, std::min(nb[i], nb[j]), std::max(nb[i], nb[j])};
        if (!remember(MotifType::T, nodes)) continue;
        split.test_non_motifs.push_back({MotifType::T, nodes});
      } else {
        // Exactly one edge present: center-other is an edge, center-far is not.
        const auto& e = g.edge(static_cast<EdgeId>(uniform_index(rng, g.edge_count())));
        const bool flip = bernoulli(rng, 0.5);
        const NodeId center = flip ? e.v : e.u;
        const NodeId other = flip ? e.u : e.v;
        const auto far = static_cast<NodeId>(uniform_index(rng, n));
        if (far == center || far == other || g.has_edge(center, far) || g.has_edge(other, far)) continue;
        const std::array<NodeId, 3> nodes{center, other, far};
        if (!remember(MotifType::V, nodes)) continue;
        split.test_non_motifs.push_back({MotifType::V, nodes});
      }
      break;
    }
  }
  return split;
}

// ---------------------------------------------------------------------------

std::vector<double> score_edges(const ScoreMatrix& s, std::span<const Edge> edges) {
  std::vector<double> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(s.at(e.u, e.v));
  return out;
}

double score_triple(const ScoreMatrix& s, MotifType type, const std::array<NodeId, 3>& nodes) {
  const auto [a, b, c] = nodes;
  switch (type) {
    case MotifType::V: return (s.at(a, b) + s.at(a, c)) / 2.0;
    case MotifType::T: return (s.at(a, b) + s.at(a, c) + s.at(b, c)) / 3.0;
    case MotifType::E: return s.at(a, b);
  }
  return 0.0;
}

std::vector<double> score_triples(const ScoreMatrix& s, std::span<const ScoredTriple> triples) {
  std::vector<double> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back(score_triple(s, t.type, t.nodes));
  return out;
}

std::vector<double> score_motifs(const ScoreMatrix& s, std::span<const MotifInstance> motifs) {
  std::vector<double> out;
  out.reserve(motifs.size());
  for (const auto& m : motifs) out.push_back(score_triple(s, m.type, m.nodes));
  return out;
}

RankMetrics rank_metrics(std::span<const double> positives, std::span<const double> negatives) {
  if (positives.empty() || negatives.empty()) throw std::invalid_argument("rank_metrics: empty score list");
  struct Item {
    double score;
    bool positive;
  };
  std::vector<Item> items;
  items.reserve(positives.size() + negatives.size());
  for (const double s : positives) items.push_back({s, true});
  for (const double s : negatives) items.push_back({s, false});

  // AUC from average ranks (ascending).
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.score < b.score; });
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j].score == items[i].score) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (items[k].positive) rank_sum += mid_rank;
    }
    i = j;
  }
  const auto np = static_cast<double>(positives.size());
  const auto nn = static_cast<double>(negatives.size());
  RankMetrics r;
  r.auc = (rank_sum - np * (np + 1.0) / 2.0) / (np * nn);

  // AP: descending score, negatives first within ties.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.score != b.score ? a.score > b.score : (!a.positive && b.positive);
  });
  double hits = 0.0;
  double precision_sum = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].positive) continue;
    hits += 1.0;
    precision_sum += hits / static_cast<double>(i + 1);
  }
  r.ap = precision_sum / np;
  return r;
}

}  // namespace motifgen
