#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifgen/graph.hpp"
#include "motifgen/motif_census.hpp"
#include "motifgen/score_matrix.hpp"

namespace motifgen {

/// Added to empty categories before taking the KL divergence.
inline constexpr double kKlFloor = 1e-9;

/// KL(p || q) in nats over two-category distributions, with kKlFloor added
/// to zero entries of both.
double kl_divergence(std::array<double, 2> p, std::array<double, 2> q);

struct MotifReport {
  MotifCensus input;
  MotifCensus generated;
  std::optional<double> normalized_v;  // absent when the input has no V motifs
  std::optional<double> normalized_t;
  double kl = 0.0;                     // KL(input || generated) over (C_V, C_T)
};

MotifReport motif_report(const Graph& input, const Graph& generated);
MotifReport motif_report(const MotifCensus& input, const MotifCensus& generated);

/// Node triple scored as a motif of `type`. For V the first node is the center.
struct ScoredTriple {
  MotifType type = MotifType::T;
  std::array<NodeId, 3> nodes{};
};

struct HoldoutSplit {
  Graph train;
  std::vector<MotifInstance> test_motifs;
  std::vector<ScoredTriple> test_non_motifs;
  std::vector<Edge> test_edges;
  std::vector<Edge> test_non_edges;
  std::size_t requested_removals = 0;  // distinct edges of the sampled motifs
  std::optional<std::string> warning;
};

/// Holds out `test_fraction` of all V and T instances. Their edges are
/// removed in random order unless a removal would disconnect the training
/// graph. Motifs that lost at least one edge become positives. Negatives:
/// uniformly sampled non-adjacent pairs (as many as test edges); for each T
/// positive an open wedge of g scored as a triangle, for each V positive a
/// triple with exactly one edge scored as a wedge. g must be connected.
HoldoutSplit split_holdout(const Graph& g, double test_fraction, std::uint64_t seed);

/// S{i, j} for each pair (0 when absent).
std::vector<double> score_edges(const ScoreMatrix& s, std::span<const Edge> edges);
/// Mean score over the motif's edges: two center edges for V, three for T.
double score_triple(const ScoreMatrix& s, MotifType type, const std::array<NodeId, 3>& nodes);
std::vector<double> score_triples(const ScoreMatrix& s, std::span<const ScoredTriple> triples);
std::vector<double> score_motifs(const ScoreMatrix& s, std::span<const MotifInstance> motifs);

struct RankMetrics {
  double auc = 0.0;
  double ap = 0.0;
};

/// AUC in Mann-Whitney form (ties count 1/2). AP is the mean precision at the
/// rank of each positive, ranking by descending score with negatives placed
/// ahead of positives on ties. Throws std::invalid_argument on empty input.
RankMetrics rank_metrics(std::span<const double> positives, std::span<const double> negatives);

}  // namespace motifgen
