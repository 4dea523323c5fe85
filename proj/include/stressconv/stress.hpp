#pragma once

#include <stressconv/apsp.hpp>
#include <stressconv/graph.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace stressconv {

using VertexBits = boost::dynamic_bitset<std::uint64_t>;

inline VertexBits to_bits(const VertexSet& set, std::size_t n) {
  set.check_bounds(n);
  VertexBits bits(n);
  for (VertexId v : set) bits.set(v);
  return bits;
}

inline VertexSet to_vertex_set(const VertexBits& bits) {
  std::vector<VertexId> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != VertexBits::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<VertexId>(i));
  }
  return VertexSet(std::move(out));
}

/// I(u,v): vertices on at least one shortest u,v-path; empty when disconnected.
inline VertexSet geodesic_interval(const ApspTables& t, VertexId u, VertexId v) {
  t.check_vertex(u);
  t.check_vertex(v);
  std::vector<VertexId> out;
  for (VertexId x = 0; x < t.order(); ++x) {
    if (t.on_geodesic(u, x, v)) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

/**
 * S(u,v): vertices on every shortest u,v-path, via the counting test
 * d(u,x)+d(x,v) = d(u,v) and sigma(u,v) = sigma(u,x)*sigma(x,v).
 * Empty for a disconnected pair.
 */
inline VertexSet stress_interval(const ApspTables& t, VertexId u, VertexId v) {
  t.check_vertex(u);
  t.check_vertex(v);
  std::vector<VertexId> out;
  for (VertexId x = 0; x < t.order(); ++x) {
    if (t.on_geodesic(u, x, v) && t.counts_split_at(u, x, v)) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

/// A stress interval together with the order in which every geodesic visits it.
struct IntervalQuery {
  VertexId u = 0;
  VertexId v = 0;
  VertexSet result;
  /// Present iff u,v are connected; starts at u, ends at v.
  std::optional<std::vector<VertexId>> ordering;
};

inline IntervalQuery stress_interval_query(const ApspTables& t, VertexId u, VertexId v) {
  IntervalQuery q{u, v, stress_interval(t, u, v), std::nullopt};
  if (t.connected(u, v)) {
    std::vector<VertexId> order(q.result.begin(), q.result.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return t.distance(u, a) < t.distance(u, b); });
    q.ordering = std::move(order);
  }
  return q;
}

/**
 * Independent characterization of S(u,v): the endpoints together with the
 * cut vertices of the subgraph induced by I(u,v). Defined for connected
 * pairs only.
 */
inline VertexSet stress_interval_via_cut_vertices(const Graph& g, const ApspTables& t, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!t.connected(u, v)) {
    throw Error(ErrorKind::Disconnected, "cut-vertex characterization needs a connected pair");
  }
  const VertexSet interval = geodesic_interval(t, u, v);
  const Subgraph h = induced_subgraph(g, interval);
  std::vector<VertexId> out{u, v};
  for (VertexId local : articulation_points(h.graph)) out.push_back(h.original_ids[local]);
  return VertexSet(std::move(out));
}

/**
 * @brief Every stress interval of a graph, precomputed as bitsets.
 *
 * Built from ApspTables in O(n^3). Closures, hulls and the exact solvers
 * reduce to bitset unions over this table.
 */
class StressTable {
 public:
  StressTable() = default;

  explicit StressTable(const ApspTables& t) : n_(t.order()) {
    intervals_.reserve(n_ * (n_ + 1) / 2);
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u; v < n_; ++v) {
        VertexBits bits(n_);
        if (t.connected(u, v)) {
          for (VertexId x = 0; x < n_; ++x) {
            if (t.on_geodesic(u, x, v) && t.counts_split_at(u, x, v)) bits.set(x);
          }
        }
        intervals_.push_back(std::move(bits));
      }
    }
  }

  std::size_t order() const noexcept { return n_; }

  const VertexBits& interval(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    // Row u of the upper triangle starts after u rows of decreasing length.
    const std::size_t row = static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u - 1) / 2;
    return intervals_[row + (v - u)];
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexBits> intervals_;
};

namespace detail {

inline void or_interval(const StressTable& table, VertexId u, VertexId v, VertexBits& into) {
  into |= table.interval(u, v);
}

inline void or_interval(const ApspTables& t, VertexId u, VertexId v, VertexBits& into) {
  if (!t.connected(u, v)) return;
  for (VertexId x = 0; x < t.order(); ++x) {
    if (t.on_geodesic(u, x, v) && t.counts_split_at(u, x, v)) into.set(x);
  }
}

template <typename Intervals>
VertexBits closure_bits(const Intervals& source, const VertexBits& members) {
  VertexBits out(members.size());
  std::vector<VertexId> list;
  for (auto i = members.find_first(); i != VertexBits::npos; i = members.find_next(i)) {
    list.push_back(static_cast<VertexId>(i));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.set(list[i]);
    for (std::size_t j = i + 1; j < list.size(); ++j) or_interval(source, list[i], list[j], out);
  }
  return out;
}

template <typename Intervals>
VertexBits hull_bits(const Intervals& source, VertexBits current, std::size_t* rounds = nullptr) {
  std::size_t steps = 0;
  for (;;) {
    VertexBits next = closure_bits(source, current);
    if (next == current) break;
    current = std::move(next);
    ++steps;
  }
  if (rounds) *rounds = steps;
  return current;
}

}  // namespace detail

/// S[U]: union of S(u,v) over all pairs of U (including u = v).
template <typename Intervals>
VertexSet stress_closure(const Intervals& source, const VertexSet& members) {
  return to_vertex_set(detail::closure_bits(source, to_bits(members, source.order())));
}

template <typename Intervals>
bool is_stress_convex(const Intervals& source, const VertexSet& members) {
  return detail::closure_bits(source, to_bits(members, source.order())).count() == members.size();
}

/// [U]: least s-convex superset, by iterating the closure to its fixpoint.
template <typename Intervals>
VertexSet stress_hull(const Intervals& source, const VertexSet& members) {
  return to_vertex_set(detail::hull_bits(source, to_bits(members, source.order())));
}

template <typename Intervals>
bool is_stress_set(const Intervals& source, const VertexSet& members) {
  return detail::closure_bits(source, to_bits(members, source.order())).all();
}

template <typename Intervals>
bool is_stress_hull_set(const Intervals& source, const VertexSet& members) {
  return detail::hull_bits(source, to_bits(members, source.order())).all();
}

namespace detail {

/// d_{G-v}(x,y) <= 2 for distinct x,y: adjacent, or a common neighbour other than v.
inline bool close_without(const Graph& g, VertexId v, VertexId x, VertexId y) {
  if (g.adjacent(x, y)) return true;
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (*i != v) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

}  // namespace detail

/// Extreme vertices of @p convex_set without verifying that the set is s-convex.
inline VertexSet extreme_vertices_unchecked(const Graph& g, const VertexSet& convex_set) {
  convex_set.check_bounds(g.order());
  std::vector<VertexId> out;
  std::vector<VertexId> inside;
  for (VertexId v : convex_set) {
    inside.clear();
    for (VertexId w : g.neighbors(v)) {
      if (convex_set.contains(w)) inside.push_back(w);
    }
    bool extreme = true;
    for (std::size_t i = 0; i < inside.size() && extreme; ++i) {
      for (std::size_t j = i + 1; j < inside.size() && extreme; ++j) {
        extreme = detail::close_without(g, v, inside[i], inside[j]);
      }
    }
    if (extreme) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

/**
 * Vertices v of the s-convex set K for which K - {v} stays s-convex: every
 * two neighbours of v inside K are within distance 2 once v is deleted.
 * Throws NotConvex when K is not s-convex.
 */
inline VertexSet extreme_vertices(const Graph& g, const ApspTables& t, const VertexSet& convex_set) {
  if (!is_stress_convex(t, convex_set)) throw Error(ErrorKind::NotConvex, "extreme vertices need an s-convex set");
  return extreme_vertices_unchecked(g, convex_set);
}

inline VertexSet extreme_vertices(const Graph& g, const VertexSet& convex_set) {
  return extreme_vertices(g, compute_apsp(g), convex_set);
}

/// Ext_s(G).
inline VertexSet extreme_vertices(const Graph& g) { return extreme_vertices_unchecked(g, VertexSet::all(g.order())); }

}  // namespace stressconv
