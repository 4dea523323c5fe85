#pragma once

// Brute-force reference implementations. They share only the Graph type with
// the library: distances, paths and cut vertices are recomputed from scratch.

#include <stressconv/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using stressconv::Graph;
using stressconv::VertexId;
using stressconv::VertexSet;

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (VertexId j : g.neighbors(i)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Every shortest u,v-path, listed explicitly.
inline std::vector<std::vector<VertexId>> shortest_paths(const Graph& g, const std::vector<std::vector<int>>& d, VertexId u,
                                                         VertexId v) {
  std::vector<std::vector<VertexId>> out;
  if (d[u][v] >= kInf) return out;
  std::vector<VertexId> path{u};
  std::function<void(VertexId)> walk = [&](VertexId x) {
    if (x == v) {
      out.push_back(path);
      return;
    }
    for (VertexId y : g.neighbors(x)) {
      if (d[u][y] == d[u][x] + 1 && d[y][v] == d[x][v] - 1) {
        path.push_back(y);
        walk(y);
        path.pop_back();
      }
    }
  };
  walk(u);
  return out;
}

struct Intervals {
  std::vector<std::vector<VertexSet>> stress;
  std::vector<std::vector<VertexSet>> geodesic;
  std::vector<std::vector<std::size_t>> count;
};

// S as the intersection and I as the union of all shortest paths.
inline Intervals intervals(const Graph& g) {
  const std::size_t n = g.order();
  const auto d = distances(g);
  Intervals out{std::vector<std::vector<VertexSet>>(n, std::vector<VertexSet>(n)),
                std::vector<std::vector<VertexSet>>(n, std::vector<VertexSet>(n)),
                std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0))};
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      const auto paths = shortest_paths(g, d, u, v);
      out.count[u][v] = paths.size();
      if (paths.empty()) continue;
      std::set<VertexId> common(paths[0].begin(), paths[0].end()), any;
      for (const auto& p : paths) {
        std::set<VertexId> here(p.begin(), p.end()), keep;
        std::set_intersection(common.begin(), common.end(), here.begin(), here.end(), std::inserter(keep, keep.end()));
        common = std::move(keep);
        any.insert(p.begin(), p.end());
      }
      out.stress[u][v] = VertexSet(std::vector<VertexId>(common.begin(), common.end()));
      out.geodesic[u][v] = VertexSet(std::vector<VertexId>(any.begin(), any.end()));
    }
  }
  return out;
}

inline VertexSet closure(const Intervals& iv, const VertexSet& u) {
  std::set<VertexId> out(u.begin(), u.end());
  for (VertexId a : u) {
    for (VertexId b : u) out.insert(iv.stress[a][b].begin(), iv.stress[a][b].end());
  }
  return VertexSet(std::vector<VertexId>(out.begin(), out.end()));
}

inline VertexSet hull(const Intervals& iv, VertexSet u) {
  for (;;) {
    VertexSet next = closure(iv, u);
    if (next == u) return u;
    u = std::move(next);
  }
}

inline bool convex(const Intervals& iv, const VertexSet& u) { return closure(iv, u) == u; }

// v is extreme iff V - {v} is closed.
inline VertexSet extreme(const Graph& g, const Intervals& iv) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (convex(iv, VertexSet::all(g.order()).without(VertexSet(std::vector<VertexId>{v})))) out.push_back(v);
  }
  return VertexSet(out);
}

template <typename Accept>
std::size_t min_subset(std::size_t n, Accept accept) {
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<VertexId> pick;
      for (VertexId v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) pick.push_back(v);
      }
      if (accept(VertexSet(pick))) return k;
    }
  }
  return n;
}

inline std::size_t sn(const Graph& g, const Intervals& iv) {
  return min_subset(g.order(), [&](const VertexSet& s) { return closure(iv, s).size() == g.order(); });
}

inline std::size_t sh(const Graph& g, const Intervals& iv) {
  return min_subset(g.order(), [&](const VertexSet& s) { return hull(iv, s).size() == g.order(); });
}

inline std::size_t component_count(const Graph& g, std::uint32_t removed_mask) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s] || ((removed_mask >> s) & 1u)) continue;
    ++count;
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y] && !((removed_mask >> y) & 1u)) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// Cut vertices by deletion.
inline VertexSet cut_vertices(const Graph& g) {
  const std::size_t base = component_count(g, 0);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (component_count(g, 1u << v) > base) out.push_back(v);
  }
  return VertexSet(out);
}

// Split iff some bipartition is (clique, independent set).
inline bool is_split(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (VertexId a = 0; a < n && ok; ++a) {
      for (VertexId b = a + 1; b < n && ok; ++b) {
        const bool in_a = (mask >> a) & 1u, in_b = (mask >> b) & 1u;
        if (in_a && in_b && !g.adjacent(a, b)) ok = false;
        if (!in_a && !in_b && g.adjacent(a, b)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Block graph iff chordal and diamond-free.
inline bool is_block(const Graph& g) {
  const std::size_t n = g.order();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) {
        for (VertexId d = c + 1; d < n; ++d) {
          const VertexId q[4] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) edges += g.adjacent(q[i], q[j]) ? 1 : 0;
          }
          if (edges == 5) return false;
        }
      }
    }
  }
  std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1;
  while (alive) {
    bool removed = false;
    for (VertexId v = 0; v < n && !removed; ++v) {
      if (!((alive >> v) & 1u)) continue;
      std::vector<VertexId> nbrs;
      for (VertexId w : g.neighbors(v)) {
        if ((alive >> w) & 1u) nbrs.push_back(w);
      }
      bool simplicial = true;
      for (std::size_t i = 0; i < nbrs.size() && simplicial; ++i) {
        for (std::size_t j = i + 1; j < nbrs.size() && simplicial; ++j) simplicial = g.adjacent(nbrs[i], nbrs[j]);
      }
      if (simplicial) {
        alive &= ~(1u << v);
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

inline bool is_path(const Graph& g) {
  if (g.order() == 1) return true;
  if (g.edge_count() != g.order() - 1 || component_count(g, 0) != 1) return false;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

inline bool s_trivial(const Intervals& iv) {
  for (std::size_t u = 0; u < iv.stress.size(); ++u) {
    for (std::size_t v = 0; v < iv.stress.size(); ++v) {
      if (iv.stress[u][v].size() > 2) return false;
    }
  }
  return true;
}

inline std::size_t domination_number(const Graph& g) {
  return min_subset(g.order(), [&](const VertexSet& s) {
    for (VertexId v = 0; v < g.order(); ++v) {
      if (s.contains(v)) continue;
      bool hit = false;
      for (VertexId w : g.neighbors(v)) hit = hit || s.contains(w);
      if (!hit) return false;
    }
    return true;
  });
}

}  // namespace oracle
