#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "motifgen/common.hpp"
#include "motifgen/graph.hpp"

namespace motifgen {

/// E: single edge. V: open wedge (two edges sharing a node, leaves not
/// adjacent). T: triangle.
enum class MotifType : std::uint8_t { E, V, T };

std::string_view to_string(MotifType type) noexcept;

/// Global 3-node motif counts under induced-subgraph semantics: a closed
/// triple counts as one T and never as a V.
struct MotifCensus {
  Count count_v = 0;
  Count count_t = 0;

  Count total() const noexcept { return count_v + count_t; }
  /// 0 when there are no 3-node motifs.
  double conc_v() const noexcept { return total() ? static_cast<double>(count_v) / static_cast<double>(total()) : 0.0; }
  double conc_t() const noexcept { return total() ? static_cast<double>(count_t) / static_cast<double>(total()) : 0.0; }

  friend bool operator==(const MotifCensus&, const MotifCensus&) = default;
};

/// Per-edge participation counts, indexed by EdgeId of the source graph.
struct EdgeMotifCounts {
  std::vector<Count> n_v;
  std::vector<Count> n_t;

  std::size_t size() const noexcept { return n_t.size(); }
  friend bool operator==(const EdgeMotifCounts&, const EdgeMotifCounts&) = default;
};

/// A 3-node motif occurrence. V instances are center-first with ascending
/// leaves; T instances are sorted.
struct MotifInstance {
  MotifType type = MotifType::T;
  std::array<NodeId, 3> nodes{};

  friend bool operator==(const MotifInstance&, const MotifInstance&) = default;
  friend auto operator<=>(const MotifInstance&, const MotifInstance&) = default;
};

struct RandomBaseline {
  double r_v = 0.0;
  double r_t = 0.0;
};

// Parallel (OpenMP) kernels. Results are bit-identical to the serial
// reference versions in motifgen::serial for any thread count.

MotifCensus census3(const Graph& g);
EdgeMotifCounts edge_participation(const Graph& g);
/// Non-induced 4-cycles, each counted once up to rotation and reflection.
Count count_four_cycles(const Graph& g);

MotifCensus census_from_participation(const Graph& g, const EdgeMotifCounts& counts);

/// All induced instances of the given type (V or T), in lexicographic order
/// of the node triple.
std::vector<MotifInstance> enumerate_instances(const Graph& g, MotifType type);

/// Mean concentrations over `samples` degree-preserving rewirings of g.
RandomBaseline random_baseline(const Graph& g, std::size_t samples, std::size_t swap_attempts,
                               std::uint64_t seed);

namespace serial {

MotifCensus census3(const Graph& g);
EdgeMotifCounts edge_participation(const Graph& g);
Count count_four_cycles(const Graph& g);
RandomBaseline random_baseline(const Graph& g, std::size_t samples, std::size_t swap_attempts,
                               std::uint64_t seed);

}  // namespace serial

}  // namespace motifgen
