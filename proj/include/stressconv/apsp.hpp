#pragma once

#include <stressconv/graph.hpp>
#include <stressconv/graph_json.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <vector>

namespace stressconv {

/// Exact shortest-path count. Counts grow factorially on hypercube-like graphs.
using PathCount = boost::multiprecision::cpp_int;

/// Hop distance between vertices in different components.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/**
 * @brief All-pairs hop distances and exact shortest-path counts.
 *
 * Counts live in a 64-bit table while every count fits; if any BFS row
 * overflows, the whole table is rebuilt in arbitrary precision. Either way
 * the values are exact.
 */
class ApspTables {
 public:
  std::size_t order() const noexcept { return n_; }

  std::uint32_t distance(VertexId u, VertexId v) const { return dist_[index(u, v)]; }

  bool connected(VertexId u, VertexId v) const { return distance(u, v) != kUnreachable; }

  /// sigma(u,v): number of distinct shortest u,v-paths (0 when disconnected).
  PathCount path_count(VertexId u, VertexId v) const {
    return wide_.empty() ? PathCount(narrow_[index(u, v)]) : wide_[index(u, v)];
  }

  bool uses_wide_counts() const noexcept { return !wide_.empty(); }

  /// True iff x lies on some shortest u,v-path.
  bool on_geodesic(VertexId u, VertexId x, VertexId v) const {
    const auto duv = distance(u, v);
    const auto dux = distance(u, x);
    const auto dxv = distance(x, v);
    if (duv == kUnreachable || dux == kUnreachable || dxv == kUnreachable) return false;
    return static_cast<std::uint64_t>(dux) + dxv == duv;
  }

  /// sigma(u,v) == sigma(u,x) * sigma(x,v), compared exactly.
  bool counts_split_at(VertexId u, VertexId x, VertexId v) const {
    if (wide_.empty()) {
      std::uint64_t product = 0;
      if (__builtin_mul_overflow(narrow_[index(u, x)], narrow_[index(x, v)], &product)) return false;
      return product == narrow_[index(u, v)];
    }
    return wide_[index(u, x)] * wide_[index(x, v)] == wide_[index(u, v)];
  }

  void check_vertex(VertexId v) const {
    if (v >= n_) {
      throw Error(ErrorKind::OutOfRange,
                  "vertex id " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
  }

 private:
  friend ApspTables compute_apsp(const Graph& g);

  std::size_t index(VertexId u, VertexId v) const noexcept { return static_cast<std::size_t>(u) * n_ + v; }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint64_t> narrow_;
  std::vector<PathCount> wide_;
};

namespace detail {

inline bool add_count(std::uint64_t& into, std::uint64_t value) {
  if (into > std::numeric_limits<std::uint64_t>::max() - value) return false;
  into += value;
  return true;
}

inline bool add_count(PathCount& into, const PathCount& value) {
  into += value;
  return true;
}

/// One counting BFS from @p source. Returns false on 64-bit overflow.
template <typename Count>
bool counting_bfs(const Graph& g, VertexId source, std::uint32_t* dist, Count* sigma, std::vector<VertexId>& queue) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = kUnreachable;
    sigma[i] = 0;
  }
  dist[source] = 0;
  sigma[source] = 1;
  queue.assign(1, source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const std::uint32_t next = dist[v] + 1;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue.push_back(w);
      }
      if (dist[w] == next && !add_count(sigma[w], sigma[v])) return false;
    }
  }
  return true;
}

}  // namespace detail

/// One counting BFS per source, ascending source id; O(n(n+m)).
inline ApspTables compute_apsp(const Graph& g) {
  ApspTables t;
  const std::size_t n = g.order();
  t.n_ = n;
  t.dist_.assign(n * n, kUnreachable);
  t.narrow_.assign(n * n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  bool overflow = false;
  for (VertexId s = 0; s < n && !overflow; ++s) {
    overflow = !detail::counting_bfs(g, s, t.dist_.data() + s * n, t.narrow_.data() + s * n, queue);
  }
  if (overflow) {
    t.narrow_.clear();
    t.narrow_.shrink_to_fit();
    t.wide_.assign(n * n, PathCount(0));
    for (VertexId s = 0; s < n; ++s) {
      detail::counting_bfs(g, s, t.dist_.data() + s * n, t.wide_.data() + s * n, queue);
    }
  }
  return t;
}

/// s_uv(x): shortest u,v-paths through x; 0 when x is not on a u,v-geodesic.
inline PathCount vertex_stress(const ApspTables& t, VertexId u, VertexId v, VertexId x) {
  t.check_vertex(u);
  t.check_vertex(v);
  t.check_vertex(x);
  if (!t.on_geodesic(u, x, v)) return 0;
  return t.path_count(u, x) * t.path_count(x, v);
}

/// Debug dump. Unreachable distances are null; counts are decimal strings.
inline Json apsp_to_json(const ApspTables& t) {
  Json dist = Json::array();
  Json sigma = Json::array();
  for (VertexId u = 0; u < t.order(); ++u) {
    Json drow = Json::array();
    Json srow = Json::array();
    for (VertexId v = 0; v < t.order(); ++v) {
      if (t.connected(u, v)) {
        drow.push_back(t.distance(u, v));
      } else {
        drow.push_back(nullptr);
      }
      srow.push_back(t.path_count(u, v).str());
    }
    dist.push_back(std::move(drow));
    sigma.push_back(std::move(srow));
  }
  return Json{{"dist", std::move(dist)}, {"sigma", std::move(sigma)}};
}

}  // namespace stressconv
