#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "motifgen/common.hpp"

namespace motifgen {

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::uint64_t edge_key(NodeId a, NodeId b) noexcept {
  const Edge e = make_edge(a, b);
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

/// Undirected simple graph in CSR form.
///
/// Edges are kept sorted; an EdgeId is the position of an edge in edges().
/// Every adjacency slot also records the id of the edge it belongs to, so
/// per-edge data (motif counts, walk weights) is reachable in O(1) from a
/// neighbor scan.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on nodes 0..node_count-1. Self-loops and duplicate
  /// edges are dropped; the number dropped of each kind is written to the
  /// optional out-parameters.
  static Graph from_edges(std::size_t node_count, std::vector<Edge> edges,
                          std::size_t* self_loops = nullptr,
                          std::size_t* duplicates = nullptr);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(NodeId v) const noexcept {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Position of v in the CSR array of u (an "arc" id in [0, 2m)), if {u,v} is an edge.
  std::optional<std::size_t> arc(NodeId u, NodeId v) const noexcept;
  std::size_t arc_begin(NodeId u) const noexcept { return offsets_[u]; }
  std::size_t arc_count() const noexcept { return adj_.size(); }

  bool has_edge(NodeId u, NodeId v) const noexcept { return arc(u, v).has_value(); }
  std::optional<EdgeId> edge_id(NodeId u, NodeId v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<EdgeId> adj_edge_;
};

/// Bijection between the integer ids found in an input file and dense
/// internal indices.
class NodeIdMap {
 public:
  NodeIdMap() = default;
  /// Internal index i maps to external_ids[i]; ids must be distinct.
  explicit NodeIdMap(std::vector<std::int64_t> external_ids);

  /// Identity map on 0..n-1.
  static NodeIdMap identity(std::size_t n);

  std::size_t size() const noexcept { return to_external_.size(); }
  std::int64_t external(NodeId internal) const { return to_external_.at(internal); }
  std::optional<NodeId> internal(std::int64_t external) const;
  std::span<const std::int64_t> externals() const noexcept { return to_external_; }

  /// Map for a subgraph whose node i was parent_ids[i] in this map's graph.
  NodeIdMap restrict_to(std::span<const NodeId> parent_ids) const;

 private:
  std::vector<std::int64_t> to_external_;
  std::unordered_map<std::int64_t, NodeId> to_internal_;
};

struct ParsedGraph {
  Graph graph;
  NodeIdMap ids;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;

  std::size_t dropped() const noexcept { return dropped_self_loops + dropped_duplicates; }
};

/// Reads "u v" lines; '#' starts a comment line; blank lines are skipped.
/// Internal ids are assigned in ascending order of external id. Directed
/// input is symmetrized (u v and v u collapse to one edge).
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph read_edge_list_file(const std::string& path);

/// One "u v" line per edge, u < v in external ids, sorted.
void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap& ids);
void write_edge_list_file(const std::string& path, const Graph& g, const NodeIdMap& ids);

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> parent_ids;  // node i of graph was parent_ids[i]
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Connected component labels (0-based, in order of smallest member id).
std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* component_count = nullptr);
bool is_connected(const Graph& g);

/// Largest component; ties go to the component containing the smallest id.
/// Throws std::invalid_argument on an empty graph.
InducedSubgraph largest_connected_component(const Graph& g);

/// |E(a) ∩ E(b)| / |E(b)|; b is the reference graph.
double edge_overlap(const Graph& a, const Graph& b);

/// Double-edge-swap randomization preserving every node degree.
/// A proposed swap is rejected when it would create a self-loop or a
/// duplicate edge; rejected proposals still count as attempts.
Graph degree_preserving_rewire(const Graph& g, std::size_t swap_attempts, std::uint64_t seed);

std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace motifgen
