#pragma once

#include <stressconv/graph.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stressconv {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Hypercube, Star, GapConstruction };

struct FamilySpec {
  Family family = Family::Path;
  /// n; or m,n (complete bipartite); or n,k (gap construction).
  std::vector<std::size_t> params;
};

namespace detail {

inline std::vector<std::string> numbered(std::string_view prefix, std::size_t count, std::size_t first = 1) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace detail

/// P_n on v1..vn.
inline Graph path_graph(std::size_t n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges, detail::numbered("v", n));
}

/// C_n on v1..vn.
inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::from_edges(n, edges, detail::numbered("v", n));
}

inline Graph complete_graph(std::size_t n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges, detail::numbered("v", n));
}

/// N_n: n vertices, no edges.
inline Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}, detail::numbered("v", n)); }

/// K_{m,n} with sides a1..am and b1..bn.
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  detail::require(m >= 1 && n >= 1, "complete bipartite needs m,n >= 1");
  auto labels = detail::numbered("a", m);
  auto right = detail::numbered("b", n);
  labels.insert(labels.end(), right.begin(), right.end());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = 0; j < n; ++j) edges.emplace_back(i, static_cast<VertexId>(m + j));
  }
  return Graph::from_edges(m + n, edges, std::move(labels));
}

/// Q_d; vertices labelled by their d-bit binary strings.
inline Graph hypercube(std::size_t d) {
  detail::require(d >= 1 && d <= 20, "hypercube dimension must be in 1..20");
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    std::string bits(d, '0');
    for (std::size_t b = 0; b < d; ++b) {
      if (v >> (d - 1 - b) & 1U) bits[b] = '1';
    }
    labels.push_back(std::move(bits));
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

/// K_{1,n}: centre c, leaves l1..ln.
inline Graph star_graph(std::size_t n) {
  detail::require(n >= 1, "star needs n >= 1");
  std::vector<std::string> labels{"c"};
  auto leaves = detail::numbered("l", n);
  labels.insert(labels.end(), leaves.begin(), leaves.end());
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n + 1, edges, std::move(labels));
}

/**
 * G_{n,k}: centre v, subdivided star v - m_i - l_i (i = 1..n), and for every
 * i, k internally disjoint v,l_i-paths v - p{i}_{j} - q{i}_{j} - l_i.
 * Order 1 + 2n + 2kn.
 */
inline Graph gap_construction(std::size_t n, std::size_t k) {
  detail::require(n >= 2 && k >= 3, "gap construction needs n >= 2 and k >= 3");
  GraphBuilder b;
  b.add_vertex("v");
  for (std::size_t i = 1; i <= n; ++i) {
    const auto is = std::to_string(i);
    b.add_edge("v", "m" + is);
    b.add_edge("m" + is, "l" + is);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto is = std::to_string(i);
    for (std::size_t j = 1; j <= k; ++j) {
      const auto p = "p" + is + "_" + std::to_string(j);
      const auto q = "q" + is + "_" + std::to_string(j);
      b.add_edge("v", p);
      b.add_edge(p, q);
      b.add_edge(q, "l" + is);
    }
  }
  return b.build();
}

/// Hull set of G_{n,k} of size kn: per leaf, two paths contribute their l-side vertex, the rest their v-side vertex.
inline VertexSet gap_construction_hull_witness(const Graph& g, std::size_t n, std::size_t k) {
  std::vector<VertexId> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      out.push_back(g.id_of((j <= 2 ? "q" : "p") + std::to_string(i) + "_" + std::to_string(j)));
    }
  }
  return VertexSet(std::move(out));
}

/// Stress set of G_{n,k} of size kn + n: the hull witness plus every l_i.
inline VertexSet gap_construction_stress_witness(const Graph& g, std::size_t n, std::size_t k) {
  std::vector<VertexId> out = gap_construction_hull_witness(g, n, k).members();
  for (std::size_t i = 1; i <= n; ++i) out.push_back(g.id_of("l" + std::to_string(i)));
  return VertexSet(std::move(out));
}

inline Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t count) {
    detail::require(p.size() == count, "family expects " + std::to_string(count) + " parameter(s)");
  };
  switch (spec.family) {
    case Family::Path: arity(1); return path_graph(p[0]);
    case Family::Cycle: arity(1); return cycle_graph(p[0]);
    case Family::Complete: arity(1); return complete_graph(p[0]);
    case Family::CompleteBipartite: arity(2); return complete_bipartite(p[0], p[1]);
    case Family::Hypercube: arity(1); return hypercube(p[0]);
    case Family::Star: arity(1); return star_graph(p[0]);
    case Family::GapConstruction: arity(2); return gap_construction(p[0], p[1]);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

namespace detail {

inline std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

inline std::vector<std::string> product_labels(const Graph& g, const Graph& h) {
  std::vector<std::string> labels;
  labels.reserve(g.order() * h.order());
  for (VertexId i = 0; i < g.order(); ++i) {
    for (VertexId j = 0; j < h.order(); ++j) labels.push_back(pair_label(g.label(i), h.label(j)));
  }
  return labels;
}

}  // namespace detail

/// G □ H, vertex (i,j) at id i*|H| + j, labelled "(g,h)".
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto nh = static_cast<VertexId>(h.order());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < g.order(); ++i) {
    for (VertexId j = 0; j < nh; ++j) {
      const VertexId self = i * nh + j;
      for (VertexId i2 : g.neighbors(i)) {
        if (i < i2) edges.emplace_back(self, i2 * nh + j);
      }
      for (VertexId j2 : h.neighbors(j)) {
        if (j < j2) edges.emplace_back(self, i * nh + j2);
      }
    }
  }
  return Graph::from_edges(g.order() * h.order(), edges, detail::product_labels(g, h));
}

/// G ∘ H: (g,h)(g',h') adjacent iff gg' ∈ E(G), or g = g' and hh' ∈ E(H).
inline Graph lexicographic_product(const Graph& g, const Graph& h) {
  const auto nh = static_cast<VertexId>(h.order());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < g.order(); ++i) {
    for (VertexId j = 0; j < nh; ++j) {
      for (VertexId j2 : h.neighbors(j)) {
        if (j < j2) edges.emplace_back(i * nh + j, i * nh + j2);
      }
      for (VertexId i2 : g.neighbors(i)) {
        if (i >= i2) continue;
        for (VertexId j2 = 0; j2 < nh; ++j2) edges.emplace_back(i * nh + j, i2 * nh + j2);
      }
    }
  }
  return Graph::from_edges(g.order() * h.order(), edges, detail::product_labels(g, h));
}

/// G ∨ H. Labels are kept when disjoint, otherwise prefixed "1:" and "2:".
inline Graph join_graphs(const Graph& g, const Graph& h) {
  const auto ng = static_cast<VertexId>(g.order());
  bool clash = false;
  for (const auto& label : h.labels()) clash = clash || g.find(label).has_value();
  std::vector<std::string> labels;
  for (const auto& label : g.labels()) labels.push_back(clash ? "1:" + label : label);
  for (const auto& label : h.labels()) labels.push_back(clash ? "2:" + label : label);
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
  for (VertexId i = 0; i < ng; ++i) {
    for (VertexId j = 0; j < h.order(); ++j) edges.emplace_back(i, ng + j);
  }
  return Graph::from_edges(g.order() + h.order(), edges, std::move(labels));
}

enum class RandomKind { Connected, Bipartite, Split, Block };

/// Identifier of the random stream recorded in generator output.
inline constexpr std::string_view kRandomAlgorithm = "mt19937_64/mod-v1";

struct RandomGraphOptions {
  /// Edge probability for Connected/Bipartite and clique attachment for Split.
  /// Unset: drawn from [0.15, 0.75) per graph.
  std::optional<double> edge_probability;
};

namespace detail {

/// Bounded draws by modulo of raw mt19937_64 output, which is fully specified
/// by the standard (std distributions are not).
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

inline Graph relabel_randomly(std::size_t n, const std::vector<Edge>& edges, SeededStream& rng) {
  std::vector<VertexId> perm(n);
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(n, mapped, numbered("v", n));
}

/// Chains components with single edges; a single edge between two components
/// keeps bipartite and block graphs in their class.
inline void connect_components(std::size_t n, std::vector<Edge>& edges, SeededStream& rng) {
  const Graph g = Graph::from_edges(n, edges);
  const auto comps = connected_components(g);
  for (std::size_t c = 0; c + 1 < comps.size(); ++c) {
    const auto& a = comps[c];
    const auto& b = comps[c + 1];
    edges.emplace_back(a[rng.below(a.size())], b[rng.below(b.size())]);
  }
}

}  // namespace detail

/**
 * Seeded random connected graph of the requested class; identical
 * (kind, n, seed, options) give identical graphs.
 */
inline Graph random_graph(RandomKind kind, std::size_t n, std::uint64_t seed, const RandomGraphOptions& options = {}) {
  detail::require(n >= 1, "random graph needs n >= 1");
  detail::SeededStream rng(seed);
  const double p = options.edge_probability ? *options.edge_probability : 0.15 + 0.6 * rng.unit();
  std::vector<Edge> edges;

  switch (kind) {
    case RandomKind::Connected:
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
          if (rng.chance(p)) edges.emplace_back(i, j);
        }
      }
      detail::connect_components(n, edges, rng);
      break;
    case RandomKind::Bipartite: {
      std::vector<bool> side(n);
      for (std::size_t i = 0; i < n; ++i) side[i] = rng.chance(0.5);
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
          if (side[i] != side[j] && rng.chance(p)) edges.emplace_back(i, j);
        }
      }
      detail::connect_components(n, edges, rng);
      break;
    }
    case RandomKind::Split: {
      const auto clique = static_cast<VertexId>(1 + rng.below(n));
      for (VertexId i = 0; i < clique; ++i) {
        for (VertexId j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
      }
      for (VertexId a = clique; a < n; ++a) {
        bool attached = false;
        for (VertexId c = 0; c < clique; ++c) {
          if (rng.chance(p)) {
            edges.emplace_back(a, c);
            attached = true;
          }
        }
        if (!attached) edges.emplace_back(a, static_cast<VertexId>(rng.below(clique)));
      }
      break;
    }
    case RandomKind::Block: {
      // Tree of cliques: each new block shares one existing vertex.
      VertexId next = 1;
      while (next < n) {
        const auto anchor = static_cast<VertexId>(rng.below(next));
        const std::size_t room = n - next;
        const std::size_t fresh = 1 + rng.below(std::min<std::size_t>(room, 4));
        std::vector<VertexId> block{anchor};
        for (std::size_t i = 0; i < fresh; ++i) block.push_back(next++);
        for (std::size_t i = 0; i < block.size(); ++i) {
          for (std::size_t j = i + 1; j < block.size(); ++j) edges.emplace_back(block[i], block[j]);
        }
      }
      break;
    }
  }
  return detail::relabel_randomly(n, edges, rng);
}

}  // namespace stressconv
