#pragma once

#include <stressconv/apsp.hpp>
#include <stressconv/stress.hpp>

#include <set>
#include <vector>

namespace stressconv {

/// Every pair at distance 2 has at least two shortest paths; componentwise.
inline bool is_s_trivial(const ApspTables& t) {
  for (VertexId u = 0; u < t.order(); ++u) {
    for (VertexId v = u + 1; v < t.order(); ++v) {
      if (t.distance(u, v) == 2 && t.path_count(u, v) < 2) return false;
    }
  }
  return true;
}

inline bool is_s_trivial(const Graph& g) { return is_s_trivial(compute_apsp(g)); }

/// At most one shortest path between any two vertices.
inline bool is_geodetic(const ApspTables& t) {
  for (VertexId u = 0; u < t.order(); ++u) {
    for (VertexId v = u + 1; v < t.order(); ++v) {
      if (t.path_count(u, v) > 1) return false;
    }
  }
  return true;
}

inline bool is_geodetic(const Graph& g) { return is_geodetic(compute_apsp(g)); }

/// S(u,v) = I(u,v) for every pair. Connected graphs only.
inline bool stress_equals_interval(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "stress/interval comparison needs a connected graph");
  const ApspTables t = compute_apsp(g);
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (stress_interval(t, u, v) != geodesic_interval(t, u, v)) return false;
    }
  }
  return true;
}

/// G_S: same labelled vertices, uv an edge iff |S(u,v)| = 2.
inline Graph underlying_graph(const Graph& g) {
  const ApspTables t = compute_apsp(g);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (!t.connected(u, v)) continue;
      std::size_t size = 0;
      for (VertexId x = 0; x < g.order() && size <= 2; ++x) {
        if (t.on_geodesic(u, x, v) && t.counts_split_at(u, x, v)) ++size;
      }
      if (size == 2) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges, g.labels());
}

struct ConvergenceTrace {
  std::vector<Graph> graphs;
  bool terminated = false;      ///< last graph is geodetic
  bool cycle_detected = false;  ///< an edge set recurred before reaching a geodetic graph

  std::size_t steps() const noexcept { return graphs.empty() ? 0 : graphs.size() - 1; }
};

/**
 * G, G_S, (G_S)_S, ... until a geodetic graph is reached, an edge set
 * recurs, or @p max_steps underlying-graph steps have been taken.
 * max_steps = 0 selects the default n^2.
 */
inline ConvergenceTrace convergence_sequence(const Graph& g, std::size_t max_steps = 0) {
  if (max_steps == 0) max_steps = std::max<std::size_t>(1, g.order() * g.order());
  ConvergenceTrace trace;
  std::set<std::vector<Edge>> seen;
  trace.graphs.push_back(g);
  seen.insert(g.edges());
  for (;;) {
    const Graph& current = trace.graphs.back();
    if (is_geodetic(current)) {
      trace.terminated = true;
      break;
    }
    if (trace.steps() >= max_steps) break;
    Graph next = underlying_graph(current);
    if (!seen.insert(next.edges()).second) {
      trace.cycle_detected = true;
      break;
    }
    trace.graphs.push_back(std::move(next));
  }
  return trace;
}

}  // namespace stressconv
