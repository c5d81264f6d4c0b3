#include "motifgen/combiner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "motifgen/rng.hpp"

namespace motifgen {

void CombineConfig::validate() const {
  for (const double p : {p1, p2, p3, ps}) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("combine probabilities must lie in [0, 1]");
  }
  if (std::abs(p1 + p2 + p3 - 1.0) > 1e-9) throw InputError("view probabilities p1 + p2 + p3 must sum to 1");
  if (target_edges == 0) throw InputError("target edge count must be at least 1");
}

void ViewSet::validate() const {
  if (s2.n() != s1.n() || s3.n() != s1.n()) throw std::invalid_argument("views have different node counts");
}

ScoreMatrix average_scores(const ViewSet& views) {
  views.validate();
  std::vector<ScoreEntry> all;
  all.reserve(views.s1.nnz() + views.s2.nnz() + views.s3.nnz());
  for (const auto* s : {&views.s1, &views.s2, &views.s3}) all.insert(all.end(), s->entries().begin(), s->entries().end());
  // Sum first, then divide, so equal views average back to themselves exactly.
  auto summed = ScoreMatrix::from_entries(views.n(), std::move(all));
  std::vector<ScoreEntry> mean(summed.entries().begin(), summed.entries().end());
  for (auto& e : mean) e.score /= 3.0;
  return ScoreMatrix::from_entries(views.n(), std::move(mean));
}

std::vector<double> edge_draw_probabilities(const ScoreMatrix& s) {
  std::vector<double> row_sum(s.n(), 0.0);
  for (const auto& e : s.entries()) {
    row_sum[e.u] += e.score;
    row_sum[e.v] += e.score;
  }
  const auto live = std::count_if(row_sum.begin(), row_sum.end(), [](double r) { return r > 0.0; });
  std::vector<double> prob(s.nnz(), 0.0);
  if (live == 0) return prob;
  for (std::size_t k = 0; k < s.nnz(); ++k) {
    const auto& e = s.entry(k);
    prob[k] = (e.score / row_sum[e.u] + e.score / row_sum[e.v]) / static_cast<double>(live);
  }
  return prob;
}

Graph sample_edges_by_score(const ScoreMatrix& s, std::size_t m, std::uint64_t seed) {
  if (s.nnz() < m) {
    throw std::invalid_argument("sample_edges_by_score: " + std::to_string(s.nnz()) +
                                " positive entries cannot supply " + std::to_string(m) + " edges");
  }
  // Redrawing until a new edge appears is successive sampling without
  // replacement with weights equal to the one-draw probabilities. Exponential
  // keys (Efraimidis-Spirakis) produce the same distribution over edge sets
  // without the coupon-collector tail.
  const auto prob = edge_draw_probabilities(s);
  auto rng = make_rng(seed, Stream::edge_assembly);
  std::vector<std::pair<double, std::uint32_t>> keys(s.nnz());
  for (std::uint32_t k = 0; k < s.nnz(); ++k) {
    const double u = 1.0 - uniform01(rng);  // (0, 1]
    keys[k] = {std::log(u) / prob[k], k};
  }
  const auto by_key = [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; };
  std::nth_element(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(m), keys.end(), by_key);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = s.entry(keys[k].second);
    edges.push_back({e.u, e.v});
  }
  return Graph::from_edges(s.n(), std::move(edges));
}

// ---------------------------------------------------------------------------

namespace {

/// Mutable copy of one view: scores can only be zeroed.
class WorkingView {
 public:
  explicit WorkingView(const ScoreMatrix& s) : s_(s), score_(s.nnz()), row_live_(s.n(), 0), live_pos_(s.n(), kAbsent) {
    for (std::size_t k = 0; k < s.nnz(); ++k) {
      score_[k] = s.entry(k).score;
      ++row_live_[s.entry(k).u];
      ++row_live_[s.entry(k).v];
    }
    for (NodeId v = 0; v < s.n(); ++v) {
      if (row_live_[v] > 0) {
        live_pos_[v] = live_.size();
        live_.push_back(v);
      }
    }
    order_.resize(s.nnz());
    std::iota(order_.begin(), order_.end(), 0U);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return score_[a] > score_[b]; });
    positive_ = s.nnz();
  }

  bool exhausted() const noexcept { return positive_ == 0; }
  const ScoreMatrix& matrix() const noexcept { return s_; }

  double score(NodeId a, NodeId b) const noexcept {
    const auto idx = s_.find(a, b);
    return idx ? score_[*idx] : 0.0;
  }
  double score(std::size_t idx) const noexcept { return score_[idx]; }

  /// Highest remaining entry; ties resolve to the smaller (u, v).
  std::size_t top() {
    while (score_[order_[cursor_]] == 0.0) ++cursor_;
    return order_[cursor_];
  }

  void zero(NodeId a, NodeId b) {
    const auto idx = s_.find(a, b);
    if (!idx || score_[*idx] == 0.0) return;
    score_[*idx] = 0.0;
    --positive_;
    for (const NodeId v : {a, b}) {
      if (--row_live_[v] == 0) drop_live(v);
    }
  }

  NodeId random_live_node(Rng& rng) const { return live_[uniform_index(rng, live_.size())]; }

  /// Neighbor of u drawn from its row-normalized remaining scores, skipping
  /// `exclude`. Returns nullopt if nothing is left to draw.
  std::optional<NodeId> draw_neighbor(NodeId u, std::optional<NodeId> exclude, Rng& rng) const {
    double total = 0.0;
    for (const auto idx : s_.row(u)) {
      if (exclude && s_.other(idx, u) == *exclude) continue;
      total += score_[idx];
    }
    if (!(total > 0.0)) return std::nullopt;
    const double target = uniform01(rng) * total;
    double acc = 0.0;
    std::optional<NodeId> last;
    for (const auto idx : s_.row(u)) {
      const NodeId w = s_.other(idx, u);
      if ((exclude && w == *exclude) || score_[idx] == 0.0) continue;
      acc += score_[idx];
      last = w;
      if (target < acc) return w;
    }
    return last;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  void drop_live(NodeId v) {
    const auto pos = live_pos_[v];
    const NodeId moved = live_.back();
    live_[pos] = moved;
    live_pos_[moved] = pos;
    live_.pop_back();
    live_pos_[v] = kAbsent;
  }

  const ScoreMatrix& s_;
  std::vector<double> score_;
  std::vector<std::uint32_t> order_;
  std::size_t cursor_ = 0;
  std::size_t positive_ = 0;
  std::vector<std::size_t> row_live_;
  std::vector<NodeId> live_;
  std::vector<std::size_t> live_pos_;
};

struct ScoredEdge {
  Edge edge;
  double score;
};

struct Motif {
  std::vector<ScoredEdge> edges;
  double mean = 0.0;
};

Motif single_edge(const WorkingView& w, NodeId u, NodeId v) {
  const double s = w.score(u, v);
  return {{{make_edge(u, v), s}}, s};
}

/// Best V motif containing {u, v}: a third node k joined to u or to v.
std::optional<Motif> best_wedge(const WorkingView& w, NodeId u, NodeId v) {
  const double base = w.score(u, v);
  std::optional<Motif> best;
  for (const NodeId center : {u, v}) {
    const NodeId leaf = center == u ? v : u;
    for (const auto idx : w.matrix().row(center)) {
      const NodeId k = w.matrix().other(idx, center);
      const double s = w.score(idx);
      if (k == leaf || s <= 0.0) continue;
      const double mean = (base + s) / 2.0;
      if (!best || mean > best->mean) best = Motif{{{make_edge(u, v), base}, {make_edge(center, k), s}}, mean};
    }
  }
  return best;
}

/// Best triangle containing {u, v}.
std::optional<Motif> best_triangle(const WorkingView& w, NodeId u, NodeId v) {
  const double base = w.score(u, v);
  std::optional<Motif> best;
  for (const auto idx : w.matrix().row(u)) {
    const NodeId k = w.matrix().other(idx, u);
    const double su = w.score(idx);
    if (k == v || su <= 0.0) continue;
    const double sv = w.score(v, k);
    if (sv <= 0.0) continue;
    const double mean = (base + su + sv) / 3.0;
    if (!best || mean > best->mean) {
      best = Motif{{{make_edge(u, v), base}, {make_edge(u, k), su}, {make_edge(v, k), sv}}, mean};
    }
  }
  return best;
}

}  // namespace

Graph mmgan_assemble(const ViewSet& views, const CombineConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  views.validate();
  const std::size_t m = cfg.target_edges;

  std::vector<WorkingView> work;
  work.reserve(3);
  work.emplace_back(views.s1);
  work.emplace_back(views.s2);
  work.emplace_back(views.s3);

  auto rng = make_rng(seed, Stream::mmgan);
  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * m);
  std::vector<Edge> out;
  out.reserve(m);

  std::size_t stalled = 0;
  while (out.size() < m) {
    if (stalled > 10 * m) {
      throw std::runtime_error("mmgan_assemble: views cannot supply " + std::to_string(m) + " edges (reached " +
                               std::to_string(out.size()) + ")");
    }
    const double pick = uniform01(rng);
    const int view = pick < cfg.p1 ? 0 : (pick < cfg.p1 + cfg.p2 ? 1 : 2);
    const bool max_score = bernoulli(rng, cfg.ps);
    auto& w = work[static_cast<std::size_t>(view)];
    if (w.exhausted()) {
      ++stalled;
      continue;
    }

    Motif motif;
    if (max_score) {
      const auto& top = w.matrix().entry(w.top());
      motif = single_edge(w, top.u, top.v);
      if (view == 1) {
        if (auto v = best_wedge(w, top.u, top.v)) motif = std::move(*v);
      } else if (view == 2) {
        if (auto t = best_triangle(w, top.u, top.v)) {
          motif = std::move(*t);
        } else if (auto v = best_wedge(w, top.u, top.v)) {
          motif = std::move(*v);
        }
      }
      for (const auto& se : motif.edges) w.zero(se.edge.u, se.edge.v);
    } else {
      const NodeId n1 = w.random_live_node(rng);
      const NodeId n2 = *w.draw_neighbor(n1, std::nullopt, rng);
      motif = single_edge(w, n1, n2);
      if (view > 0) {
        if (const auto n3 = w.draw_neighbor(n1, n2, rng)) {
          motif.edges.push_back({make_edge(n1, *n3), w.score(n1, *n3)});
          // The closing pair joins only if some view supports it.
          if (view == 2 && views.s1.at(n2, *n3) + views.s2.at(n2, *n3) + views.s3.at(n2, *n3) > 0.0) {
            motif.edges.push_back({make_edge(n2, *n3), w.score(n2, *n3)});
          }
        }
      }
    }

    std::stable_sort(motif.edges.begin(), motif.edges.end(), [](const ScoredEdge& a, const ScoredEdge& b) {
      return a.score != b.score ? a.score > b.score : a.edge < b.edge;
    });
    bool progressed = false;
    for (const auto& se : motif.edges) {
      if (out.size() == m) break;
      if (present.insert(edge_key(se.edge.u, se.edge.v)).second) {
        out.push_back(se.edge);
        progressed = true;
      }
    }
    stalled = progressed ? 0 : stalled + 1;
  }
  return Graph::from_edges(views.n(), std::move(out));
}

}  // namespace motifgen
