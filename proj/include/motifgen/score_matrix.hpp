#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "motifgen/common.hpp"
#include "motifgen/graph.hpp"

namespace motifgen {

struct ScoreEntry {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  double score = 0.0;

  friend bool operator==(const ScoreEntry&, const ScoreEntry&) = default;
};

/// Symmetric sparse matrix of nonnegative edge scores with an empty diagonal.
/// Each unordered pair is stored once; entries are sorted by (u, v) and only
/// positive scores are kept. Rows give the entry indices touching a node,
/// sorted by neighbor.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  explicit ScoreMatrix(std::size_t n);

  /// Canonicalizes (u, v) order, sums repeated pairs, drops zero scores.
  /// Throws std::invalid_argument on diagonal, negative or out-of-range entries.
  static ScoreMatrix from_entries(std::size_t n, std::vector<ScoreEntry> entries);

  std::size_t n() const noexcept { return n_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const ScoreEntry> entries() const noexcept { return entries_; }
  const ScoreEntry& entry(std::size_t idx) const { return entries_[idx]; }

  /// Indices into entries() for all pairs touching u.
  std::span<const std::uint32_t> row(NodeId u) const noexcept {
    return {row_entries_.data() + row_offsets_[u], row_entries_.data() + row_offsets_[u + 1]};
  }
  NodeId other(std::size_t idx, NodeId u) const noexcept {
    const auto& e = entries_[idx];
    return e.u == u ? e.v : e.u;
  }

  std::optional<std::size_t> find(NodeId a, NodeId b) const noexcept;
  double at(NodeId a, NodeId b) const noexcept;
  double row_sum(NodeId u) const noexcept;
  double total() const noexcept;

  ScoreMatrix scaled(double factor) const;

  friend bool operator==(const ScoreMatrix& a, const ScoreMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  void build_rows();

  std::size_t n_ = 0;
  std::vector<ScoreEntry> entries_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::uint32_t> row_entries_;
};

/// "i j score" lines with external ids, i < j, sorted; scores printed in
/// shortest round-trip form.
void write_scores(std::ostream& out, const ScoreMatrix& s, const NodeIdMap& ids);
ScoreMatrix read_scores(std::istream& in, const NodeIdMap& ids);

/// FNV-1a over the canonical entry list; used in run manifests.
std::uint64_t content_hash(const ScoreMatrix& s);

}  // namespace motifgen
