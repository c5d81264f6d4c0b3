#include "motifgen/walk_engine.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace motifgen {

std::string_view to_string(BiasKind kind) noexcept {
  switch (kind) {
    case BiasKind::none: return "none";
    case BiasKind::toward_v: return "V";
    case BiasKind::toward_t: return "T";
  }
  return "?";
}

BiasKind parse_bias_kind(std::string_view text) {
  if (text == "none" || text == "None" || text == "E") return BiasKind::none;
  if (text == "V" || text == "v" || text == "toward_v") return BiasKind::toward_v;
  if (text == "T" || text == "t" || text == "toward_t") return BiasKind::toward_t;
  throw InputError("unknown bias kind '" + std::string(text) + "' (expected none, V or T)");
}

BiasedWeights motif_biased_weights(const EdgeMotifCounts& counts, const MotifCensus& census, BiasKind kind) {
  BiasedWeights out;
  out.kind = kind;
  if (kind == BiasKind::none) {
    out.weight.assign(counts.size(), 1.0);
    return out;
  }
  if (census.total() == 0) {
    throw std::invalid_argument("motif_biased_weights: graph has no 3-node motifs, beta is undefined");
  }
  const double dominant = std::max(census.conc_v(), census.conc_t());
  out.beta = kind == BiasKind::toward_v ? dominant : 1.0 - dominant;
  out.weight.resize(counts.size());
  for (std::size_t id = 0; id < counts.size(); ++id) {
    const auto nv = static_cast<double>(counts.n_v[id]);
    const auto nt = static_cast<double>(counts.n_t[id]);
    out.weight[id] = nv + nt > 0.0 ? (out.beta * nv + (1.0 - out.beta) * nt) / (nv + nt) : kMotifFreeWeight;
  }
  return out;
}

BiasedWeights unit_weights(const Graph& g) {
  BiasedWeights out;
  out.weight.assign(g.edge_count(), 1.0);
  return out;
}

void WalkConfig::validate() const {
  if (!(p > 0.0)) throw InputError("walk parameter p must be positive");
  if (!(q > 0.0)) throw InputError("walk parameter q must be positive");
  if (walk_length < 2) throw InputError("walk length must be at least 2");
}

// ---------------------------------------------------------------------------

WalkSet::WalkSet(std::size_t walk_length, std::vector<NodeId> flat) : length_(walk_length), nodes_(std::move(flat)) {
  if (length_ == 0 || nodes_.size() % length_ != 0) throw std::invalid_argument("WalkSet: ragged walk storage");
}

void WalkSet::append(std::span<const NodeId> walk) {
  if (walk.size() != length_) throw std::invalid_argument("WalkSet: walk length mismatch");
  nodes_.insert(nodes_.end(), walk.begin(), walk.end());
}

void WalkSet::append(const WalkSet& other) {
  if (other.empty()) return;
  if (other.length_ != length_) throw std::invalid_argument("WalkSet: walk length mismatch");
  nodes_.insert(nodes_.end(), other.nodes_.begin(), other.nodes_.end());
}

// ---------------------------------------------------------------------------

namespace {

void unnormalized_transition(const Graph& g, const BiasedWeights& weights, std::optional<NodeId> prev, NodeId cur,
                             const WalkConfig& cfg, std::vector<double>& out) {
  const auto nb = g.neighbors(cur);
  const auto inc = g.incident_edges(cur);
  if (nb.empty()) throw std::invalid_argument("walk reached a node without neighbors");
  out.resize(nb.size());
  if (!prev) {
    for (std::size_t k = 0; k < nb.size(); ++k) out[k] = weights[inc[k]];
    return;
  }
  const NodeId t = *prev;
  const double back = 1.0 / cfg.p;
  const double outward = 1.0 / cfg.q;
  // Both rows are sorted: merge to find which candidates neighbor t.
  const auto nt = g.neighbors(t);
  std::size_t j = 0;
  for (std::size_t k = 0; k < nb.size(); ++k) {
    const NodeId x = nb[k];
    double alpha;
    if (x == t) {
      alpha = back;
    } else {
      while (j < nt.size() && nt[j] < x) ++j;
      alpha = (j < nt.size() && nt[j] == x) ? 1.0 : outward;
    }
    out[k] = alpha * weights[inc[k]];
  }
}

std::size_t draw_index(std::span<const double> mass, Rng& rng) {
  double total = 0.0;
  for (const double w : mass) total += w;
  const double target = uniform01(rng) * total;
  double acc = 0.0;
  for (std::size_t k = 0; k < mass.size(); ++k) {
    acc += mass[k];
    if (target < acc) return k;
  }
  // Rounding can leave target == total; return the last positive entry.
  for (std::size_t k = mass.size(); k-- > 0;) {
    if (mass[k] > 0.0) return k;
  }
  return mass.size() - 1;
}

}  // namespace

std::vector<double> transition_distribution(const Graph& g, const BiasedWeights& weights,
                                            std::optional<NodeId> prev, NodeId cur, const WalkConfig& cfg) {
  if (prev && !g.has_edge(*prev, cur)) throw std::invalid_argument("transition_distribution: (prev, cur) is not an edge");
  std::vector<double> dist;
  unnormalized_transition(g, weights, prev, cur, cfg, dist);
  double total = 0.0;
  for (const double w : dist) total += w;
  for (double& w : dist) w /= total;
  return dist;
}

NodeId sample_next(const Graph& g, const BiasedWeights& weights, std::optional<NodeId> prev, NodeId cur,
                   const WalkConfig& cfg, Rng& rng, std::vector<double>& scratch) {
  unnormalized_transition(g, weights, prev, cur, cfg, scratch);
  return g.neighbors(cur)[draw_index(scratch, rng)];
}

namespace {

void walk_from(const Graph& g, const BiasedWeights& weights, const WalkConfig& cfg, std::uint64_t seed,
               std::size_t index, std::span<NodeId> out, std::vector<double>& scratch) {
  auto rng = make_rng(seed, Stream::walk_sample, index);
  out[0] = static_cast<NodeId>(uniform_index(rng, g.node_count()));
  std::optional<NodeId> prev;
  for (std::size_t s = 1; s < out.size(); ++s) {
    out[s] = sample_next(g, weights, prev, out[s - 1], cfg, rng, scratch);
    prev = out[s - 1];
  }
}

void check_walk_inputs(const Graph& g, const BiasedWeights& weights, const WalkConfig& cfg) {
  cfg.validate();
  if (g.node_count() == 0) throw std::invalid_argument("sample_walks: empty graph");
  if (weights.weight.size() != g.edge_count()) throw std::invalid_argument("sample_walks: weights do not match graph");
}

}  // namespace

WalkSet sample_walks(const Graph& g, const BiasedWeights& weights, const WalkConfig& cfg, std::size_t count,
                     std::uint64_t seed) {
  check_walk_inputs(g, weights, cfg);
  std::vector<NodeId> flat(count * cfg.walk_length);
  const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel
  {
    std::vector<double> scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      walk_from(g, weights, cfg, seed, idx, std::span<NodeId>(flat.data() + idx * cfg.walk_length, cfg.walk_length),
                scratch);
    }
  }
  return WalkSet(cfg.walk_length, std::move(flat));
}

namespace serial {

WalkSet sample_walks(const Graph& g, const BiasedWeights& weights, const WalkConfig& cfg, std::size_t count,
                     std::uint64_t seed) {
  check_walk_inputs(g, weights, cfg);
  WalkSet walks(cfg.walk_length);
  std::vector<NodeId> walk(cfg.walk_length);
  std::vector<double> scratch;
  for (std::size_t i = 0; i < count; ++i) {
    walk_from(g, weights, cfg, seed, i, walk, scratch);
    walks.append(walk);
  }
  return walks;
}

}  // namespace serial

// ---------------------------------------------------------------------------

void write_walks(std::ostream& out, const WalkSet& walks, const NodeIdMap& ids) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto walk = walks[i];
    for (std::size_t k = 0; k < walk.size(); ++k) {
      if (k) out << ' ';
      out << ids.external(walk[k]);
    }
    out << '\n';
  }
}

WalkSet read_walks(std::istream& in, const NodeIdMap& ids) {
  std::vector<NodeId> flat;
  std::vector<NodeId> walk;
  std::size_t length = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    walk.clear();
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      std::int64_t value = 0;
      const auto* end = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(token.data(), end, value);
      if (ec != std::errc{} || ptr != end) throw ParseError(line_no, "malformed node id '" + token + "'");
      const auto internal = ids.internal(value);
      if (!internal) throw ParseError(line_no, "unknown node id " + token);
      walk.push_back(*internal);
    }
    if (walk.empty()) continue;
    if (walk.size() < 2) throw ParseError(line_no, "walk shorter than 2 nodes");
    if (length == 0) length = walk.size();
    if (walk.size() != length) throw ParseError(line_no, "walk length differs from earlier walks");
    flat.insert(flat.end(), walk.begin(), walk.end());
  }
  if (length == 0) return WalkSet{};
  return WalkSet(length, std::move(flat));
}

}  // namespace motifgen
