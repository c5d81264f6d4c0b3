#include "motifgen/score_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace motifgen {

ScoreMatrix::ScoreMatrix(std::size_t n) : n_(n), row_offsets_(n + 1, 0) {}

ScoreMatrix ScoreMatrix::from_entries(std::size_t n, std::vector<ScoreEntry> entries) {
  for (auto& e : entries) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("score entry out of range");
    if (e.u == e.v) throw std::invalid_argument("score matrix has no diagonal");
    if (!(e.score >= 0.0)) throw std::invalid_argument("score entries must be nonnegative");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(entries.begin(), entries.end(),
            [](const ScoreEntry& a, const ScoreEntry& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  std::vector<ScoreEntry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().score += e.score;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const ScoreEntry& e) { return e.score == 0.0; });

  ScoreMatrix s(n);
  s.entries_ = std::move(merged);
  s.build_rows();
  return s;
}

void ScoreMatrix::build_rows() {
  row_offsets_.assign(n_ + 1, 0);
  for (const auto& e : entries_) {
    ++row_offsets_[e.u + 1];
    ++row_offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) row_offsets_[i + 1] += row_offsets_[i];
  row_entries_.resize(2 * entries_.size());
  std::vector<std::size_t> cursor(row_offsets_.begin(), row_offsets_.end() - 1);
  // Same two-pass fill as Graph: rows come out sorted by neighbor.
  for (std::uint32_t idx = 0; idx < entries_.size(); ++idx) row_entries_[cursor[entries_[idx].v]++] = idx;
  for (std::uint32_t idx = 0; idx < entries_.size(); ++idx) row_entries_[cursor[entries_[idx].u]++] = idx;
}

std::optional<std::size_t> ScoreMatrix::find(NodeId a, NodeId b) const noexcept {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  const auto r = row(a);
  const auto it = std::lower_bound(r.begin(), r.end(), b,
                                   [&](std::uint32_t idx, NodeId key) { return other(idx, a) < key; });
  if (it == r.end() || other(*it, a) != b) return std::nullopt;
  return *it;
}

double ScoreMatrix::at(NodeId a, NodeId b) const noexcept {
  const auto idx = find(a, b);
  return idx ? entries_[*idx].score : 0.0;
}

double ScoreMatrix::row_sum(NodeId u) const noexcept {
  double sum = 0.0;
  for (const auto idx : row(u)) sum += entries_[idx].score;
  return sum;
}

double ScoreMatrix::total() const noexcept {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.score;
  return sum;
}

ScoreMatrix ScoreMatrix::scaled(double factor) const {
  if (!(factor >= 0.0)) throw std::invalid_argument("scale factor must be nonnegative");
  auto entries = entries_;
  for (auto& e : entries) e.score *= factor;
  return from_entries(n_, std::move(entries));
}

// ---------------------------------------------------------------------------

void write_scores(std::ostream& out, const ScoreMatrix& s, const NodeIdMap& ids) {
  if (ids.size() != s.n()) throw std::invalid_argument("id map does not match score matrix");
  struct Line {
    std::int64_t a, b;
    double score;
  };
  std::vector<Line> lines;
  lines.reserve(s.nnz());
  for (const auto& e : s.entries()) {
    const auto a = ids.external(e.u);
    const auto b = ids.external(e.v);
    lines.push_back({std::min(a, b), std::max(a, b), e.score});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
  char buf[64];
  for (const auto& l : lines) {
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, l.score);
    out << l.a << ' ' << l.b << ' ' << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
  }
}

ScoreMatrix read_scores(std::istream& in, const NodeIdMap& ids) {
  std::vector<ScoreEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string ta, tb, ts;
    if (!(tokens >> ta)) continue;
    if (ta.front() == '#') continue;
    if (!(tokens >> tb >> ts)) throw ParseError(line_no, "expected 'i j score'");
    std::int64_t a = 0, b = 0;
    double score = 0.0;
    const auto ok = [](const std::string& t, auto& value) {
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      return ec == std::errc{} && ptr == t.data() + t.size();
    };
    if (!ok(ta, a) || !ok(tb, b) || !ok(ts, score)) throw ParseError(line_no, "malformed score line");
    const auto ia = ids.internal(a);
    const auto ib = ids.internal(b);
    if (!ia || !ib) throw ParseError(line_no, "unknown node id");
    if (*ia == *ib || score < 0.0) throw ParseError(line_no, "invalid score entry");
    entries.push_back({*ia, *ib, score});
  }
  return ScoreMatrix::from_entries(ids.size(), std::move(entries));
}

std::uint64_t content_hash(const ScoreMatrix& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  const std::uint64_t n = s.n();
  mix(&n, sizeof n);
  for (const auto& e : s.entries()) {
    mix(&e.u, sizeof e.u);
    mix(&e.v, sizeof e.v);
    mix(&e.score, sizeof e.score);
  }
  return h;
}

}  // namespace motifgen
