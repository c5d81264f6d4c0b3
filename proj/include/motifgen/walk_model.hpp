#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "motifgen/graph.hpp"
#include "motifgen/score_matrix.hpp"
#include "motifgen/walk_engine.hpp"

namespace motifgen {

/// Smoothed second-order Markov model over walks on a fixed graph. It plays
/// the part of a trained walk generator: fit it on sampled walks, then draw
/// new walks from it.
///
/// For a state (prev, cur) with observed successor counts c(x), x in adj(cur):
///
///   P(x | prev, cur) = (c(x) + delta) / (sum_y c(y) + delta * deg(cur))
///
/// States never observed fall back to the order-1 counts of cur under the
/// same rule, and then to uniform over adj(cur). The support of every
/// distribution is adj(cur).
class MarkovWalkModel {
 public:
  /// Throws std::invalid_argument on an empty walk set, a negative
  /// smoothing value, or a walk step that is not an edge of g.
  static MarkovWalkModel fit(const WalkSet& walks, const Graph& g, double smoothing);

  const Graph& graph() const noexcept { return graph_; }
  double smoothing() const noexcept { return smoothing_; }

  /// Distribution over graph().neighbors(cur); prev may be absent (first step).
  std::vector<double> distribution(std::optional<NodeId> prev, NodeId cur) const;

  NodeId sample_start(Rng& rng) const;
  NodeId sample_next(std::optional<NodeId> prev, NodeId cur, Rng& rng) const;

 private:
  struct Observed {
    std::size_t begin = 0;  // into next_/cumulative_
    std::size_t end = 0;
    Count total = 0;
  };

  Observed second_order(std::optional<NodeId> prev, NodeId cur) const;
  NodeId draw(const Observed& obs, NodeId cur, Rng& rng, std::span<const NodeId> next,
              std::span<const Count> cumulative) const;

  Graph graph_;
  double smoothing_ = 0.0;
  // Order 2: per arc (prev -> cur), sparse successor counts.
  std::vector<std::size_t> arc_offsets_;
  std::vector<NodeId> next_;
  std::vector<Count> cumulative_;
  // Order 1: per arc (cur -> next), dense counts, stored cumulative per row.
  std::vector<Count> first_cumulative_;
  std::vector<Count> first_total_;
  // Start distribution.
  std::vector<NodeId> start_nodes_;
  std::vector<Count> start_cumulative_;
};

inline MarkovWalkModel fit_markov(const WalkSet& walks, const Graph& g, double smoothing) {
  return MarkovWalkModel::fit(walks, g, smoothing);
}

/// Walk i is drawn from its own RNG stream derived from (seed, i).
WalkSet generate_walks(const MarkovWalkModel& model, std::size_t count, std::size_t length, std::uint64_t seed);

/// Every consecutive pair {u, v} of every walk adds 1 to S{u, v}.
/// Throws std::invalid_argument if a node id is >= n.
ScoreMatrix score_matrix(const WalkSet& walks, std::size_t n);

struct ViewBudget {
  std::size_t train_walks = 0;
  std::size_t gen_walks = 0;
};

/// Walk counts giving at least 100 * |E| transitions per walk set.
ViewBudget default_budget(const Graph& g, const WalkConfig& cfg);

/// motif_biased_weights -> sample_walks -> fit_markov -> generate_walks ->
/// score_matrix. Views built with the same seed share RNG streams and differ
/// only through their weights.
ScoreMatrix build_view(const Graph& g, BiasKind kind, const WalkConfig& cfg, const ViewBudget& budget,
                       double smoothing, std::uint64_t seed);

/// Same pipeline with the census already computed.
ScoreMatrix build_view(const Graph& g, const EdgeMotifCounts& counts, const MotifCensus& census, BiasKind kind,
                       const WalkConfig& cfg, const ViewBudget& budget, double smoothing, std::uint64_t seed);

struct SmoothingTrial {
  double smoothing = 0.0;
  double overlap = 0.0;
};

struct SmoothingChoice {
  double smoothing = 0.0;
  double overlap = 0.0;
  bool reached_target = false;
  std::vector<SmoothingTrial> trials;
};

/// Edge-overlap early stopping for the surrogate: for each smoothing value in
/// `grid` (tried in order, largest first), build the unbiased view, assemble
/// a graph with |E| edges from it and measure its overlap with g. Returns the
/// first value reaching `target_overlap`, else the best trial.
SmoothingChoice select_smoothing(const Graph& g, const WalkConfig& cfg, const ViewBudget& budget,
                                 const std::vector<double>& grid, double target_overlap, std::uint64_t seed);

inline const std::vector<double>& default_smoothing_grid() {
  static const std::vector<double> grid{1.0, 0.1, 0.01, 0.0};
  return grid;
}

namespace serial {

WalkSet generate_walks(const MarkovWalkModel& model, std::size_t count, std::size_t length, std::uint64_t seed);
ScoreMatrix score_matrix(const WalkSet& walks, std::size_t n);

}  // namespace serial

}  // namespace motifgen
