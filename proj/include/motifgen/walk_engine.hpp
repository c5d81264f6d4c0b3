#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "motifgen/common.hpp"
#include "motifgen/graph.hpp"
#include "motifgen/motif_census.hpp"
#include "motifgen/rng.hpp"

namespace motifgen {

/// Which view a set of walk weights belongs to: none is the plain
/// second-order walk, toward_v and toward_t steer walks onto wedge- and
/// triangle-rich edges.
enum class BiasKind : std::uint8_t { none, toward_v, toward_t };

std::string_view to_string(BiasKind kind) noexcept;
BiasKind parse_bias_kind(std::string_view text);

/// Weight given to an edge that takes part in no 3-node motif (the weight
/// formula is 0/0 there). Only isolated edges qualify.
inline constexpr double kMotifFreeWeight = 1e-3;

struct BiasedWeights {
  BiasKind kind = BiasKind::none;
  double beta = 0.0;
  std::vector<double> weight;  // by EdgeId

  double operator[](EdgeId id) const { return weight[id]; }
};

/// kind=none: every weight is 1.
/// Otherwise beta = max(C_V, C_T) for toward_v and 1 - max(C_V, C_T) for
/// toward_t, and w = (beta*N_V + (1-beta)*N_T) / (N_V + N_T).
/// Throws std::invalid_argument if kind != none and the census is empty.
BiasedWeights motif_biased_weights(const EdgeMotifCounts& counts, const MotifCensus& census, BiasKind kind);

BiasedWeights unit_weights(const Graph& g);

struct WalkConfig {
  double p = 1.0;  // return parameter
  double q = 1.0;  // in-out parameter
  std::size_t walk_length = 16;

  /// Throws InputError when p or q is not positive or walk_length < 2.
  void validate() const;
};

/// Fixed-length walks stored back to back.
class WalkSet {
 public:
  WalkSet() = default;
  explicit WalkSet(std::size_t walk_length) : length_(walk_length) {}
  WalkSet(std::size_t walk_length, std::vector<NodeId> flat);

  std::size_t walk_length() const noexcept { return length_; }
  std::size_t size() const noexcept { return length_ ? nodes_.size() / length_ : 0; }
  bool empty() const noexcept { return nodes_.empty(); }

  std::span<const NodeId> operator[](std::size_t i) const { return {nodes_.data() + i * length_, length_}; }
  std::span<const NodeId> flat() const noexcept { return nodes_; }

  void append(std::span<const NodeId> walk);
  /// Concatenates another set of the same length.
  void append(const WalkSet& other);

  friend bool operator==(const WalkSet&, const WalkSet&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<NodeId> nodes_;
};

/// Next-step distribution from cur, aligned with g.neighbors(cur).
/// pi(x) = alpha(prev, x) * w(cur, x), alpha = 1/p if x == prev, 1 if x is a
/// neighbor of prev, 1/q otherwise; alpha = 1 on the first step (no prev).
std::vector<double> transition_distribution(const Graph& g, const BiasedWeights& weights,
                                            std::optional<NodeId> prev, NodeId cur, const WalkConfig& cfg);

/// Draws one second-order step. Reuses `scratch` for the unnormalized weights.
NodeId sample_next(const Graph& g, const BiasedWeights& weights, std::optional<NodeId> prev, NodeId cur,
                   const WalkConfig& cfg, Rng& rng, std::vector<double>& scratch);

/// `count` walks, each starting at a uniformly chosen node. Walk i uses its
/// own RNG stream derived from (seed, i), so the result does not depend on
/// the number of threads.
WalkSet sample_walks(const Graph& g, const BiasedWeights& weights, const WalkConfig& cfg, std::size_t count,
                     std::uint64_t seed);

/// One walk per line, external node ids separated by spaces.
void write_walks(std::ostream& out, const WalkSet& walks, const NodeIdMap& ids);
/// Inverse of write_walks. Every line must hold the same number (>= 2) of ids
/// known to `ids`.
WalkSet read_walks(std::istream& in, const NodeIdMap& ids);

namespace serial {

WalkSet sample_walks(const Graph& g, const BiasedWeights& weights, const WalkConfig& cfg, std::size_t count,
                     std::uint64_t seed);

}  // namespace serial

}  // namespace motifgen
