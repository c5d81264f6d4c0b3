#pragma once

#include <cstdint>

#include "motifgen/graph.hpp"
#include "motifgen/score_matrix.hpp"

namespace motifgen {

/// View-selection and sampling-mode probabilities for motif assembly. The
/// defaults weight views by the edge count of their motif (1, 2, 3 edges).
struct CombineConfig {
  double p1 = 1.0 / 6.0;
  double p2 = 1.0 / 3.0;
  double p3 = 1.0 / 2.0;
  double ps = 0.25;  // probability of max-score selection per step
  std::size_t target_edges = 0;

  /// Throws InputError unless p1+p2+p3 = 1 (within 1e-9), all p_i and ps
  /// are in [0, 1], and target_edges >= 1.
  void validate() const;
};

/// s1: unbiased walks, s2: biased toward V, s3: biased toward T.
struct ViewSet {
  ScoreMatrix s1;
  ScoreMatrix s2;
  ScoreMatrix s3;

  std::size_t n() const noexcept { return s1.n(); }
  /// Throws std::invalid_argument if the views differ in size.
  void validate() const;
};

/// Entry-wise mean of the three views.
ScoreMatrix average_scores(const ViewSet& views);

/// Edge assembly from one score matrix: repeatedly pick a node with positive
/// row sum uniformly, pick a neighbor from its row-normalized scores, and keep
/// the edge if it is new, until m distinct edges are collected.
/// Throws std::invalid_argument if S has fewer than m positive entries.
Graph sample_edges_by_score(const ScoreMatrix& s, std::size_t m, std::uint64_t seed);

/// Per-edge probability of one draw of the node-then-neighbor chain, indexed
/// like s.entries().
std::vector<double> edge_draw_probabilities(const ScoreMatrix& s);

/// Multi-view motif assembly. Each step picks view i with probability p_i,
/// then either the highest remaining entry of that view (probability ps),
/// completed to the best-scoring V or T motif for views 2 and 3 and removed
/// from the view afterwards, or a random node and one or two sampled
/// neighbors. Edges already present are skipped; the last motif may be cut
/// short at the edge budget, keeping its higher-scoring edges.
/// Throws std::runtime_error after 10 * target_edges consecutive steps that
/// add nothing.
Graph mmgan_assemble(const ViewSet& views, const CombineConfig& cfg, std::uint64_t seed);

}  // namespace motifgen
