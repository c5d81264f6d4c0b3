#include "motifgen/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>

#include "motifgen/rng.hpp"

namespace motifgen {

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges, std::size_t* self_loops,
                        std::size_t* duplicates) {
  std::size_t loops = 0;
  for (auto& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    e = make_edge(e.u, e.v);
  }
  const auto loop_end = std::remove_if(edges.begin(), edges.end(), [](const Edge& e) { return e.u == e.v; });
  loops = static_cast<std::size_t>(edges.end() - loop_end);
  edges.erase(loop_end, edges.end());
  std::sort(edges.begin(), edges.end());
  const auto unique_end = std::unique(edges.begin(), edges.end());
  const auto dups = static_cast<std::size_t>(edges.end() - unique_end);
  edges.erase(unique_end, edges.end());
  if (self_loops) *self_loops = loops;
  if (duplicates) *duplicates = dups;

  Graph g;
  g.edges_ = std::move(edges);
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(2 * g.edges_.size());
  g.adj_edge_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every row sorted:
  // row w first receives its smaller neighbors (as v) in increasing u, then its
  // larger neighbors (as u) in increasing v.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adj_[cursor[e.v]] = e.u;
    g.adj_edge_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adj_[cursor[e.u]] = e.v;
    g.adj_edge_[cursor[e.u]++] = id;
  }
  return g;
}

std::optional<std::size_t> Graph::arc(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - row.begin());
}

std::optional<EdgeId> Graph::edge_id(NodeId u, NodeId v) const noexcept {
  const auto a = arc(u, v);
  if (!a) return std::nullopt;
  return adj_edge_[*a];
}

// ---------------------------------------------------------------------------

NodeIdMap::NodeIdMap(std::vector<std::int64_t> external_ids) : to_external_(std::move(external_ids)) {
  to_internal_.reserve(to_external_.size());
  for (NodeId i = 0; i < to_external_.size(); ++i) {
    if (!to_internal_.emplace(to_external_[i], i).second) {
      throw std::invalid_argument("duplicate external node id " + std::to_string(to_external_[i]));
    }
  }
}

NodeIdMap NodeIdMap::identity(std::size_t n) {
  std::vector<std::int64_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::int64_t>(i);
  return NodeIdMap(std::move(ids));
}

std::optional<NodeId> NodeIdMap::internal(std::int64_t external) const {
  const auto it = to_internal_.find(external);
  if (it == to_internal_.end()) return std::nullopt;
  return it->second;
}

NodeIdMap NodeIdMap::restrict_to(std::span<const NodeId> parent_ids) const {
  std::vector<std::int64_t> ids;
  ids.reserve(parent_ids.size());
  for (const NodeId p : parent_ids) ids.push_back(external(p));
  return NodeIdMap(std::move(ids));
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_id(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "malformed node id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    const auto line = trim(buffer);
    if (line.empty() || line.front() == '#') continue;
    std::string_view tokens[3];
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < line.size() && count < 3) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto stop = line.find_first_of(" \t", start);
      if (stop == std::string_view::npos) stop = line.size();
      tokens[count++] = line.substr(start, stop - start);
      pos = stop;
    }
    if (count != 2) {
      throw ParseError(line_no, "expected two node ids, found " + std::string(count < 2 ? "fewer" : "more"));
    }
    raw.emplace_back(parse_id(tokens[0], line_no), parse_id(tokens[1], line_no));
  }

  std::vector<std::int64_t> ids;
  ids.reserve(2 * raw.size());
  for (const auto& [a, b] : raw) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  ParsedGraph parsed;
  parsed.ids = NodeIdMap(ids);
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    edges.push_back({*parsed.ids.internal(a), *parsed.ids.internal(b)});
  }
  parsed.graph = Graph::from_edges(ids.size(), std::move(edges), &parsed.dropped_self_loops,
                                   &parsed.dropped_duplicates);
  return parsed;
}

ParsedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap& ids) {
  if (ids.size() != g.node_count()) throw std::invalid_argument("id map does not match graph");
  std::vector<std::pair<std::int64_t, std::int64_t>> lines;
  lines.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const auto a = ids.external(e.u);
    const auto b = ids.external(e.v);
    lines.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g, const NodeIdMap& ids) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_edge_list(out, g, ids);
}

// ---------------------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  InducedSubgraph sub;
  sub.parent_ids.assign(nodes.begin(), nodes.end());
  std::sort(sub.parent_ids.begin(), sub.parent_ids.end());
  sub.parent_ids.erase(std::unique(sub.parent_ids.begin(), sub.parent_ids.end()), sub.parent_ids.end());

  constexpr auto absent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.node_count(), absent);
  for (NodeId i = 0; i < sub.parent_ids.size(); ++i) remap[sub.parent_ids[i]] = i;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] != absent && remap[e.v] != absent) edges.push_back({remap[e.u], remap[e.v]});
  }
  sub.graph = Graph::from_edges(sub.parent_ids.size(), std::move(edges));
  return sub;
}

std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* component_count) {
  constexpr auto unvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.node_count(), unvisited);
  std::uint32_t next = 0;
  std::queue<NodeId> frontier;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (label[s] != unvisited) continue;
    label[s] = next;
    frontier.push(s);
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      for (const NodeId w : g.neighbors(v)) {
        if (label[w] == unvisited) {
          label[w] = next;
          frontier.push(w);
        }
      }
    }
    ++next;
  }
  if (component_count) *component_count = next;
  return label;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

InducedSubgraph largest_connected_component(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("largest_connected_component: empty graph");
  std::size_t count = 0;
  const auto label = connected_components(g, &count);
  std::vector<std::size_t> size(count, 0);
  for (const auto l : label) ++size[l];
  // Labels are assigned in increasing order of each component's smallest id,
  // so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<NodeId> nodes;
  nodes.reserve(size[best]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label[v] == best) nodes.push_back(v);
  }
  return induced_subgraph(g, nodes);
}

double edge_overlap(const Graph& a, const Graph& b) {
  if (b.edge_count() == 0) throw std::invalid_argument("edge_overlap: reference graph has no edges");
  std::size_t shared = 0;
  for (const auto& e : b.edges()) {
    if (a.has_edge(e.u, e.v)) ++shared;
  }
  return static_cast<double>(shared) / static_cast<double>(b.edge_count());
}

Graph degree_preserving_rewire(const Graph& g, std::size_t swap_attempts, std::uint64_t seed) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (edges.size() < 2 || swap_attempts == 0) return g;

  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * edges.size());
  for (const auto& e : edges) present.insert(edge_key(e.u, e.v));

  auto rng = make_rng(seed, Stream::rewire);
  for (std::size_t attempt = 0; attempt < swap_attempts; ++attempt) {
    const auto i = uniform_index(rng, edges.size());
    const auto j = uniform_index(rng, edges.size());
    if (i == j) continue;
    const auto [a, b] = edges[i];
    const auto [c, d] = edges[j];
    // a-b, c-d  ->  a-d, c-b   or   a-c, b-d
    const bool cross = bernoulli(rng, 0.5);
    const NodeId x1 = a, y1 = cross ? d : c;
    const NodeId x2 = cross ? c : b, y2 = cross ? b : d;
    if (x1 == y1 || x2 == y2) continue;
    const auto k1 = edge_key(x1, y1);
    const auto k2 = edge_key(x2, y2);
    if (k1 == k2 || present.contains(k1) || present.contains(k2)) continue;
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(k1);
    present.insert(k2);
    edges[i] = make_edge(x1, y1);
    edges[j] = make_edge(x2, y2);
  }
  return Graph::from_edges(g.node_count(), std::move(edges));
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> deg(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) deg[v] = g.degree(v);
  return deg;
}

}  // namespace motifgen
