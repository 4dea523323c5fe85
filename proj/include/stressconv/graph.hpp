#pragma once

#include <stressconv/error.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stressconv {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/**
 * @brief Canonical set of vertex ids: strictly ascending, duplicate free.
 *
 * Every set-valued result in the library (intervals, closures, hulls,
 * witnesses) is a VertexSet, so equality is plain member-wise comparison.
 */
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : members_(ids) { canonicalize(); }
  explicit VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) { canonicalize(); }

  /// Every vertex of a graph of order @p n.
  static VertexSet all(std::size_t n) {
    VertexSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<VertexId>(i);
    return s;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }
  const std::vector<VertexId>& members() const noexcept { return members_; }

  bool contains(VertexId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  VertexSet united(const VertexSet& other) const {
    VertexSet out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out.members_));
    return out;
  }

  VertexSet without(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
    return out;
  }

  /// Throws OutOfRange unless every member is a valid id for order @p n.
  void check_bounds(std::size_t n) const {
    if (!members_.empty() && members_.back() >= n) {
      throw Error(ErrorKind::OutOfRange,
                  "vertex id " + std::to_string(members_.back()) + " out of range for order " + std::to_string(n));
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  void canonicalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<VertexId> members_;
};

/**
 * @brief Immutable undirected simple graph with stable string labels.
 *
 * Internal ids are dense (0..n-1) and index every matrix in the library;
 * labels exist for I/O only. Adjacency lists are sorted and duplicate free.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds from internal-id edges. Labels default to the decimal id.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {}) {
    Graph g;
    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) {
      throw Error(ErrorKind::Validation, "label count does not match vertex count");
    }
    g.labels_ = std::move(labels);
    g.adjacency_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      if (!g.index_.emplace(g.labels_[i], static_cast<VertexId>(i)).second) {
        throw Error(ErrorKind::Validation, "duplicate vertex label '" + g.labels_[i] + "'");
      }
    }
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw Error(ErrorKind::OutOfRange, "edge endpoint out of range");
      if (u == v) throw Error(ErrorKind::Validation, "self-loop at vertex '" + g.labels_[u] + "'");
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    for (auto& list : g.adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      g.edge_count_ += list.size();
    }
    g.edge_count_ /= 2;
    return g;
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id_of(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw Error(ErrorKind::OutOfRange, "unknown vertex label '" + std::string(label) + "'");
  }

  /// Edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u) {
      for (VertexId v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void check_vertex(VertexId v) const {
    if (v >= order()) {
      throw Error(ErrorKind::OutOfRange,
                  "vertex id " + std::to_string(v) + " out of range for order " + std::to_string(order()));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::size_t edge_count_ = 0;
};

/// Accumulates labeled vertices and edges; ids follow first appearance.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string_view label) {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    auto id = static_cast<VertexId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(std::string(label), id);
    return id;
  }

  void add_edge(std::string_view a, std::string_view b) {
    VertexId u = add_vertex(a);
    VertexId v = add_vertex(b);
    edges_.emplace_back(u, v);
  }

  void add_edge(VertexId u, VertexId v) { edges_.emplace_back(u, v); }

  std::size_t order() const noexcept { return labels_.size(); }

  Graph build() const { return Graph::from_edges(labels_.size(), edges_, labels_); }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::vector<Edge> edges_;
};

/**
 * Reads the edge-list text format: one "a b" edge or one "a" isolated vertex
 * per line, '#' starts a comment line, blank lines are ignored. Ids are
 * assigned in order of first appearance; repeated edges collapse.
 */
inline Graph parse_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::string second;
    if (!(fields >> second)) {
      builder.add_vertex(first);
      continue;
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "expected 'label' or 'label label', found extra field '" + extra + "'");
    if (first == second) throw Error(ErrorKind::Validation, "line " + std::to_string(line_no) + ": self-loop at '" + first + "'");
    builder.add_edge(first, second);
  }
  if (in.bad()) throw Error(ErrorKind::Io, "read failure");
  return builder.build();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Canonical edge-list text: every vertex declared in id order, then sorted edges.
inline std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& label : g.labels()) {
    out += label;
    out += '\n';
  }
  for (auto [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

/// A derived graph together with the original id of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> original_ids;
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  keep.check_bounds(g.order());
  std::vector<VertexId> local(g.order(), static_cast<VertexId>(-1));
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<VertexId>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (VertexId u : keep) {
    for (VertexId w : g.neighbors(u)) {
      if (u < w && local[w] != static_cast<VertexId>(-1)) edges.emplace_back(local[u], local[w]);
    }
  }
  return {Graph::from_edges(keep.size(), edges, std::move(labels)), keep.members()};
}

inline Subgraph remove_vertex(const Graph& g, VertexId v) {
  g.check_vertex(v);
  std::vector<VertexId> rest;
  rest.reserve(g.order() - 1);
  for (VertexId u = 0; u < g.order(); ++u) {
    if (u != v) rest.push_back(u);
  }
  return induced_subgraph(g, VertexSet(std::move(rest)));
}

/// Components ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    queue.assign(1, root);
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    out.emplace_back(queue);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace detail {

/// Iterative lowpoint DFS shared by articulation points and block extraction.
template <typename OnBlock>
void lowpoint_dfs(const Graph& g, std::vector<bool>& is_cut, OnBlock&& on_block) {
  const std::size_t n = g.order();
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<VertexId> parent(n, kNone);
  std::vector<std::size_t> next(n, 0);
  std::vector<VertexId> stack;
  std::vector<Edge> edge_stack;
  std::uint32_t clock = 0;
  is_cut.assign(n, false);

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++clock;
    if (g.degree(root) == 0) {
      on_block(std::vector<VertexId>{root});
      continue;
    }
    std::size_t root_children = 0;
    stack.assign(1, root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      auto adj = g.neighbors(v);
      if (next[v] < adj.size()) {
        VertexId w = adj[next[v]++];
        if (disc[w] == 0) {
          parent[w] = v;
          disc[w] = low[w] = ++clock;
          edge_stack.emplace_back(v, w);
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          edge_stack.emplace_back(v, w);
        }
        continue;
      }
      stack.pop_back();
      VertexId p = parent[v];
      if (p == kNone) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_cut[p] = true;
        std::vector<VertexId> block;
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{p, v}) break;
        }
        on_block(std::move(block));
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }
}

}  // namespace detail

/// Cut vertices, by a single O(n+m) lowpoint depth-first search.
inline VertexSet articulation_points(const Graph& g) {
  std::vector<bool> is_cut;
  detail::lowpoint_dfs(g, is_cut, [](std::vector<VertexId>&&) {});
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

/// Maximal 2-connected pieces (bridges and isolated vertices included), sorted.
inline std::vector<VertexSet> biconnected_components(const Graph& g) {
  std::vector<bool> is_cut;
  std::vector<VertexSet> blocks;
  detail::lowpoint_dfs(g, is_cut, [&](std::vector<VertexId>&& members) { blocks.emplace_back(std::move(members)); });
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

/**
 * Breadth-first 2-colouring. In each component the smallest id gets colour 0.
 * Returns nullopt when the graph has an odd cycle.
 */
inline std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kUncolored = 2;
  std::vector<std::uint8_t> color(g.order(), kUncolored);
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < g.order(); ++root) {
    if (color[root] != kUncolored) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (VertexId w : g.neighbors(v)) {
        if (color[w] == kUncolored) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_clique(const Graph& g, const VertexSet& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

}  // namespace stressconv
