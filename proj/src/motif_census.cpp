#include "motifgen/motif_census.hpp"

#include <algorithm>

#include "motifgen/rng.hpp"

namespace motifgen {

std::string_view to_string(MotifType type) noexcept {
  switch (type) {
    case MotifType::E: return "E";
    case MotifType::V: return "V";
    case MotifType::T: return "T";
  }
  return "?";
}

namespace {

Count common_neighbors(std::span<const NodeId> a, std::span<const NodeId> b) noexcept {
  Count shared = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

Count wedge_total(const Graph& g) {
  Count wedges = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const Count d = g.degree(v);
    wedges += d * (d - (d > 0)) / 2;
  }
  return wedges;
}

}  // namespace

EdgeMotifCounts edge_participation(const Graph& g) {
  const auto m = static_cast<std::int64_t>(g.edge_count());
  EdgeMotifCounts counts;
  counts.n_t.resize(g.edge_count());
  counts.n_v.resize(g.edge_count());
  const auto edges = g.edges();

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t id = 0; id < m; ++id) {
    const auto& e = edges[static_cast<std::size_t>(id)];
    const Count t = common_neighbors(g.neighbors(e.u), g.neighbors(e.v));
    counts.n_t[static_cast<std::size_t>(id)] = t;
    counts.n_v[static_cast<std::size_t>(id)] = g.degree(e.u) + g.degree(e.v) - 2 - 2 * t;
  }
  return counts;
}

MotifCensus census_from_participation(const Graph& g, const EdgeMotifCounts& counts) {
  Count closed = 0;
  for (const Count t : counts.n_t) closed += t;
  MotifCensus census;
  census.count_t = closed / 3;
  census.count_v = wedge_total(g) - 3 * census.count_t;
  return census;
}

MotifCensus census3(const Graph& g) {
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const auto edges = g.edges();
  Count closed = 0;

#pragma omp parallel for schedule(dynamic, 256) reduction(+ : closed)
  for (std::int64_t id = 0; id < m; ++id) {
    const auto& e = edges[static_cast<std::size_t>(id)];
    closed += common_neighbors(g.neighbors(e.u), g.neighbors(e.v));
  }
  MotifCensus census;
  census.count_t = closed / 3;
  census.count_v = wedge_total(g) - 3 * census.count_t;
  return census;
}

Count count_four_cycles(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.node_count());
  Count diagonal_pairs = 0;

#pragma omp parallel reduction(+ : diagonal_pairs)
  {
    std::vector<std::uint32_t> paths(g.node_count(), 0);
    std::vector<NodeId> touched;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < n; ++s) {
      const auto u = static_cast<NodeId>(s);
      for (const NodeId w : g.neighbors(u)) {
        for (const NodeId v : g.neighbors(w)) {
          if (v <= u) continue;
          if (paths[v]++ == 0) touched.push_back(v);
        }
      }
      for (const NodeId v : touched) {
        const Count c = paths[v];
        diagonal_pairs += c * (c - 1) / 2;
        paths[v] = 0;
      }
      touched.clear();
    }
  }
  // Each 4-cycle is seen once from each of its two diagonals.
  return diagonal_pairs / 2;
}

std::vector<MotifInstance> enumerate_instances(const Graph& g, MotifType type) {
  std::vector<MotifInstance> out;
  if (type == MotifType::T) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (const NodeId v : g.neighbors(u)) {
        if (v <= u) continue;
        const auto nu = g.neighbors(u);
        const auto nv = g.neighbors(v);
        auto i = std::upper_bound(nu.begin(), nu.end(), v);
        auto j = std::upper_bound(nv.begin(), nv.end(), v);
        while (i != nu.end() && j != nv.end()) {
          if (*i < *j) {
            ++i;
          } else if (*j < *i) {
            ++j;
          } else {
            out.push_back({MotifType::T, {u, v, *i}});
            ++i;
            ++j;
          }
        }
      }
    }
  } else if (type == MotifType::V) {
    for (NodeId c = 0; c < g.node_count(); ++c) {
      const auto nb = g.neighbors(c);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!g.has_edge(nb[i], nb[j])) out.push_back({MotifType::V, {c, nb[i], nb[j]}});
        }
      }
    }
  } else {
    throw std::invalid_argument("enumerate_instances: type must be V or T");
  }
  return out;
}

RandomBaseline random_baseline(const Graph& g, std::size_t samples, std::size_t swap_attempts,
                               std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("random_baseline: samples must be >= 1");
  std::vector<double> conc_v(samples), conc_t(samples);
  const auto count = static_cast<std::int64_t>(samples);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto rewired =
        degree_preserving_rewire(g, swap_attempts, derive_seed(seed, Stream::baseline, static_cast<std::uint64_t>(k)));
    const auto census = census3(rewired);
    conc_v[static_cast<std::size_t>(k)] = census.conc_v();
    conc_t[static_cast<std::size_t>(k)] = census.conc_t();
  }
  RandomBaseline out;
  for (std::size_t k = 0; k < samples; ++k) {
    out.r_v += conc_v[k];
    out.r_t += conc_t[k];
  }
  out.r_v /= static_cast<double>(samples);
  out.r_t /= static_cast<double>(samples);
  return out;
}

}  // namespace motifgen
