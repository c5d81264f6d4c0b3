// Single-threaded reference kernels. They take different routes from the
// OpenMP kernels (wedge-centered enumeration instead of per-edge
// intersection) and are used only to cross-check them.

#include <algorithm>

#include "motifgen/motif_census.hpp"
#include "motifgen/rng.hpp"

namespace motifgen::serial {

MotifCensus census3(const Graph& g) {
  Count open = 0;
  Count closed_corners = 0;
  for (NodeId c = 0; c < g.node_count(); ++c) {
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) {
          ++closed_corners;
        } else {
          ++open;
        }
      }
    }
  }
  return {open, closed_corners / 3};
}

EdgeMotifCounts edge_participation(const Graph& g) {
  EdgeMotifCounts counts;
  counts.n_v.assign(g.edge_count(), 0);
  counts.n_t.assign(g.edge_count(), 0);
  for (NodeId c = 0; c < g.node_count(); ++c) {
    const auto nb = g.neighbors(c);
    const auto inc = g.incident_edges(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (const auto opposite = g.edge_id(nb[i], nb[j])) {
          // Seen once from each corner; each visit credits the far edge.
          ++counts.n_t[*opposite];
        } else {
          ++counts.n_v[inc[i]];
          ++counts.n_v[inc[j]];
        }
      }
    }
  }
  return counts;
}

Count count_four_cycles(const Graph& g) {
  Count diagonal_pairs = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = u + 1; v < g.node_count(); ++v) {
      const auto a = g.neighbors(u);
      const auto b = g.neighbors(v);
      Count codeg = 0;
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
          ++i;
        } else if (b[j] < a[i]) {
          ++j;
        } else {
          ++codeg;
          ++i;
          ++j;
        }
      }
      diagonal_pairs += codeg * (codeg - (codeg > 0)) / 2;
    }
  }
  return diagonal_pairs / 2;
}

RandomBaseline random_baseline(const Graph& g, std::size_t samples, std::size_t swap_attempts,
                               std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("random_baseline: samples must be >= 1");
  RandomBaseline out;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto census =
        serial::census3(degree_preserving_rewire(g, swap_attempts, derive_seed(seed, Stream::baseline, k)));
    out.r_v += census.conc_v();
    out.r_t += census.conc_t();
  }
  out.r_v /= static_cast<double>(samples);
  out.r_t /= static_cast<double>(samples);
  return out;
}

}  // namespace motifgen::serial
