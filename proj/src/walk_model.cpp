#include "motifgen/walk_model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "motifgen/combiner.hpp"

namespace motifgen {

namespace {

constexpr auto kNoArc = static_cast<std::uint64_t>(-1);

}  // namespace

MarkovWalkModel MarkovWalkModel::fit(const WalkSet& walks, const Graph& g, double smoothing) {
  if (walks.empty()) throw std::invalid_argument("fit_markov: empty walk set");
  if (!(smoothing >= 0.0) || std::isinf(smoothing)) throw std::invalid_argument("fit_markov: smoothing must be finite and >= 0");
  const std::size_t length = walks.walk_length();
  const std::size_t count = walks.size();

  // arcs[i * (L-1) + s] is the arc id of step s of walk i.
  std::vector<std::uint64_t> arcs(count * (length - 1));
  std::atomic<bool> bad_step{false};
  const auto total_walks = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total_walks; ++i) {
    const auto walk = walks[static_cast<std::size_t>(i)];
    for (std::size_t s = 1; s < length; ++s) {
      const auto a = g.arc(walk[s - 1], walk[s]);
      if (!a) bad_step.store(true, std::memory_order_relaxed);
      arcs[static_cast<std::size_t>(i) * (length - 1) + s - 1] = a ? *a : kNoArc;
    }
  }
  if (bad_step) throw std::invalid_argument("fit_markov: walk step is not an edge of the graph");

  MarkovWalkModel model;
  model.graph_ = g;
  model.smoothing_ = smoothing;

  // Order 1.
  std::vector<Count> first(g.arc_count(), 0);
  for (const auto a : arcs) ++first[a];
  model.first_cumulative_.resize(g.arc_count());
  model.first_total_.assign(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Count acc = 0;
    for (std::size_t a = g.arc_begin(v); a < g.arc_begin(v) + g.degree(v); ++a) {
      acc += first[a];
      model.first_cumulative_[a] = acc;
    }
    model.first_total_[v] = acc;
  }

  // Order 2: key = (arc prev->cur) << 32 | next.
  std::vector<std::uint64_t> keys;
  if (length > 2) {
    keys.resize(count * (length - 2));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total_walks; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const auto walk = walks[idx];
      for (std::size_t s = 2; s < length; ++s) {
        keys[idx * (length - 2) + s - 2] = (arcs[idx * (length - 1) + s - 2] << 32) | walk[s];
      }
    }
    std::sort(keys.begin(), keys.end());
  }
  model.arc_offsets_.assign(g.arc_count() + 1, 0);
  for (std::size_t k = 0; k < keys.size();) {
    std::size_t run = k;
    while (run < keys.size() && keys[run] == keys[k]) ++run;
    const auto arc = keys[k] >> 32;
    const auto next = static_cast<NodeId>(keys[k] & 0xffffffffULL);
    const Count prior = (!model.next_.empty() && model.arc_offsets_[arc + 1] > 0) ? model.cumulative_.back() : 0;
    model.next_.push_back(next);
    model.cumulative_.push_back(prior + (run - k));
    ++model.arc_offsets_[arc + 1];
    k = run;
  }
  for (std::size_t a = 0; a < g.arc_count(); ++a) model.arc_offsets_[a + 1] += model.arc_offsets_[a];

  // Start nodes.
  std::vector<NodeId> starts(count);
  for (std::size_t i = 0; i < count; ++i) starts[i] = walks[i][0];
  std::sort(starts.begin(), starts.end());
  for (std::size_t k = 0; k < starts.size();) {
    std::size_t run = k;
    while (run < starts.size() && starts[run] == starts[k]) ++run;
    model.start_nodes_.push_back(starts[k]);
    model.start_cumulative_.push_back(static_cast<Count>(run));
    k = run;
  }
  return model;
}

MarkovWalkModel::Observed MarkovWalkModel::second_order(std::optional<NodeId> prev, NodeId cur) const {
  if (!prev) return {};
  const auto a = graph_.arc(*prev, cur);
  if (!a) throw std::invalid_argument("MarkovWalkModel: (prev, cur) is not an edge");
  Observed obs{arc_offsets_[*a], arc_offsets_[*a + 1], 0};
  // cumulative_ restarts at every arc, so its last value in range is the total.
  if (obs.end > obs.begin) obs.total = cumulative_[obs.end - 1];
  return obs;
}

std::vector<double> MarkovWalkModel::distribution(std::optional<NodeId> prev, NodeId cur) const {
  const auto nb = graph_.neighbors(cur);
  if (nb.empty()) throw std::invalid_argument("MarkovWalkModel: node without neighbors");
  std::vector<double> counts(nb.size(), 0.0);
  double total = 0.0;
  const auto obs = second_order(prev, cur);
  if (obs.total > 0) {
    Count before = 0;
    for (std::size_t k = obs.begin; k < obs.end; ++k) {
      const auto pos = std::lower_bound(nb.begin(), nb.end(), next_[k]) - nb.begin();
      counts[static_cast<std::size_t>(pos)] = static_cast<double>(cumulative_[k] - before);
      before = cumulative_[k];
    }
    total = static_cast<double>(obs.total);
  } else if (first_total_[cur] > 0) {
    Count before = 0;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const Count c = first_cumulative_[graph_.arc_begin(cur) + k];
      counts[k] = static_cast<double>(c - before);
      before = c;
    }
    total = static_cast<double>(first_total_[cur]);
  }
  const double d = static_cast<double>(nb.size());
  const double denom = total + smoothing_ * d;
  std::vector<double> dist(nb.size());
  for (std::size_t k = 0; k < nb.size(); ++k) {
    dist[k] = denom > 0.0 ? (counts[k] + smoothing_) / denom : 1.0 / d;
  }
  return dist;
}

NodeId MarkovWalkModel::draw(const Observed& obs, NodeId cur, Rng& rng, std::span<const NodeId> next,
                             std::span<const Count> cumulative) const {
  const auto nb = graph_.neighbors(cur);
  const double d = static_cast<double>(nb.size());
  const double observed = static_cast<double>(obs.total);
  const double mass = observed + smoothing_ * d;
  if (!(mass > 0.0)) return nb[uniform_index(rng, nb.size())];
  const double u = uniform01(rng) * mass;
  if (u < observed) {
    // cumulative is relative to the start of this state's range.
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), static_cast<Count>(u));
    return next[static_cast<std::size_t>(it - cumulative.begin())];
  }
  auto k = static_cast<std::size_t>((u - observed) / smoothing_);
  return nb[std::min(k, nb.size() - 1)];
}

NodeId MarkovWalkModel::sample_next(std::optional<NodeId> prev, NodeId cur, Rng& rng) const {
  const auto nb = graph_.neighbors(cur);
  if (nb.empty()) throw std::invalid_argument("MarkovWalkModel: node without neighbors");
  const auto obs = second_order(prev, cur);
  if (obs.total > 0) {
    return draw(obs, cur, rng, std::span<const NodeId>(next_).subspan(obs.begin, obs.end - obs.begin),
                std::span<const Count>(cumulative_).subspan(obs.begin, obs.end - obs.begin));
  }
  const auto begin = graph_.arc_begin(cur);
  const Observed first{begin, begin + nb.size(), first_total_[cur]};
  return draw(first, cur, rng, nb, std::span<const Count>(first_cumulative_).subspan(begin, nb.size()));
}

NodeId MarkovWalkModel::sample_start(Rng& rng) const {
  const Count total = start_cumulative_.back();
  const auto u = uniform_index(rng, total);
  const auto it = std::upper_bound(start_cumulative_.begin(), start_cumulative_.end(), u);
  return start_nodes_[static_cast<std::size_t>(it - start_cumulative_.begin())];
}

// ---------------------------------------------------------------------------

namespace {

void generate_one(const MarkovWalkModel& model, std::uint64_t seed, std::size_t index, std::span<NodeId> out) {
  auto rng = make_rng(seed, Stream::walk_generate, index);
  out[0] = model.sample_start(rng);
  out[1] = model.sample_next(std::nullopt, out[0], rng);
  for (std::size_t s = 2; s < out.size(); ++s) out[s] = model.sample_next(out[s - 2], out[s - 1], rng);
}

}  // namespace

WalkSet generate_walks(const MarkovWalkModel& model, std::size_t count, std::size_t length, std::uint64_t seed) {
  if (length < 2) throw std::invalid_argument("generate_walks: length must be >= 2");
  std::vector<NodeId> flat(count * length);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    generate_one(model, seed, idx, std::span<NodeId>(flat.data() + idx * length, length));
  }
  return WalkSet(length, std::move(flat));
}

ScoreMatrix score_matrix(const WalkSet& walks, std::size_t n) {
  if (walks.empty()) return ScoreMatrix(n);
  const std::size_t length = walks.walk_length();
  const std::size_t count = walks.size();
  std::vector<std::uint64_t> keys(count * (length - 1));
  std::atomic<bool> out_of_range{false};
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const auto walk = walks[idx];
    for (std::size_t s = 1; s < length; ++s) {
      if (walk[s - 1] >= n || walk[s] >= n) out_of_range.store(true, std::memory_order_relaxed);
      keys[idx * (length - 1) + s - 1] = edge_key(walk[s - 1], walk[s]);
    }
  }
  if (out_of_range) throw std::invalid_argument("score_matrix: node id out of range");
  std::sort(keys.begin(), keys.end());

  std::vector<ScoreEntry> entries;
  for (std::size_t k = 0; k < keys.size();) {
    std::size_t run = k;
    while (run < keys.size() && keys[run] == keys[k]) ++run;
    const auto u = static_cast<NodeId>(keys[k] >> 32);
    const auto v = static_cast<NodeId>(keys[k] & 0xffffffffULL);
    // A repeated node contributes nothing: the matrix has no diagonal.
    if (u != v) entries.push_back({u, v, static_cast<double>(run - k)});
    k = run;
  }
  return ScoreMatrix::from_entries(n, std::move(entries));
}

namespace serial {

WalkSet generate_walks(const MarkovWalkModel& model, std::size_t count, std::size_t length, std::uint64_t seed) {
  if (length < 2) throw std::invalid_argument("generate_walks: length must be >= 2");
  WalkSet walks(length);
  std::vector<NodeId> walk(length);
  for (std::size_t i = 0; i < count; ++i) {
    generate_one(model, seed, i, walk);
    walks.append(walk);
  }
  return walks;
}

ScoreMatrix score_matrix(const WalkSet& walks, std::size_t n) {
  std::vector<ScoreEntry> entries;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto walk = walks[i];
    for (std::size_t s = 1; s < walk.size(); ++s) {
      if (walk[s - 1] >= n || walk[s] >= n) throw std::invalid_argument("score_matrix: node id out of range");
      if (walk[s - 1] != walk[s]) entries.push_back({walk[s - 1], walk[s], 1.0});
    }
  }
  return ScoreMatrix::from_entries(n, std::move(entries));
}

}  // namespace serial

// ---------------------------------------------------------------------------

ViewBudget default_budget(const Graph& g, const WalkConfig& cfg) {
  const std::size_t steps = 100 * std::max<std::size_t>(g.edge_count(), 1);
  const std::size_t per_walk = cfg.walk_length > 1 ? cfg.walk_length - 1 : 1;
  const std::size_t walks = (steps + per_walk - 1) / per_walk;
  return {walks, walks};
}

ScoreMatrix build_view(const Graph& g, const EdgeMotifCounts& counts, const MotifCensus& census, BiasKind kind,
                       const WalkConfig& cfg, const ViewBudget& budget, double smoothing, std::uint64_t seed) {
  if (!is_connected(g)) throw std::invalid_argument("build_view: graph must be connected");
  if (budget.train_walks == 0 || budget.gen_walks == 0) throw std::invalid_argument("build_view: walk budgets must be >= 1");
  const auto weights = motif_biased_weights(counts, census, kind);
  const auto train = sample_walks(g, weights, cfg, budget.train_walks, seed);
  const auto model = MarkovWalkModel::fit(train, g, smoothing);
  const auto generated = generate_walks(model, budget.gen_walks, cfg.walk_length, seed);
  return score_matrix(generated, g.node_count());
}

ScoreMatrix build_view(const Graph& g, BiasKind kind, const WalkConfig& cfg, const ViewBudget& budget,
                       double smoothing, std::uint64_t seed) {
  const auto counts = edge_participation(g);
  return build_view(g, counts, census_from_participation(g, counts), kind, cfg, budget, smoothing, seed);
}

SmoothingChoice select_smoothing(const Graph& g, const WalkConfig& cfg, const ViewBudget& budget,
                                 const std::vector<double>& grid, double target_overlap, std::uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("select_smoothing: empty grid");
  const auto counts = edge_participation(g);
  const auto census = census_from_participation(g, counts);
  SmoothingChoice choice;
  std::optional<std::size_t> best;
  for (const double smoothing : grid) {
    const auto view = build_view(g, counts, census, BiasKind::none, cfg, budget, smoothing,
                                 derive_seed(seed, Stream::smoothing));
    const std::size_t m = std::min(g.edge_count(), view.nnz());
    const double overlap =
        m == 0 ? 0.0 : edge_overlap(sample_edges_by_score(view, m, derive_seed(seed, Stream::smoothing, 1)), g);
    choice.trials.push_back({smoothing, overlap});
    if (!best || overlap > choice.trials[*best].overlap) best = choice.trials.size() - 1;
    if (overlap >= target_overlap) {
      choice.smoothing = smoothing;
      choice.overlap = overlap;
      choice.reached_target = true;
      return choice;
    }
  }
  choice.smoothing = choice.trials[*best].smoothing;
  choice.overlap = choice.trials[*best].overlap;
  return choice;
}

}  // namespace motifgen
