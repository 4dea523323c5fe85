#pragma once

#include <stressconv/graph.hpp>
#include <stressconv/graph_json.hpp>
#include <stressconv/solve.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace stressconv {

enum class RoleKind { Original, APendant, BPendant, ApexC, ApexD };

/// Role of a gadget vertex. `index` is the 1-based i of v_i / a_i / b_i.
struct Role {
  RoleKind kind = RoleKind::Original;
  std::size_t index = 0;

  std::string str() const {
    switch (kind) {
      case RoleKind::Original: return "ORIGINAL(" + std::to_string(index) + ")";
      case RoleKind::APendant: return "A_PENDANT(" + std::to_string(index) + ")";
      case RoleKind::BPendant: return "B_PENDANT(" + std::to_string(index) + ")";
      case RoleKind::ApexC: return "APEX_C";
      case RoleKind::ApexD: return "APEX_D";
    }
    return "?";
  }

  friend bool operator==(const Role&, const Role&) = default;
};

/**
 * @brief Dominating-set to stress-set gadget.
 *
 * Gadget ids: 0..n-1 are the source vertices (same ids as in `source`),
 * then a_i at n + (i-1), b_i at 2n + (i-1), c at 3n, d at 3n+1. Indices i
 * number side A first, then side B, each ascending by source id.
 */
struct ReductionInstance {
  Graph source;
  VertexSet side_a;
  VertexSet side_b;
  /// order[i-1] is the source id of v_i.
  std::vector<VertexId> order;
  Graph gadget;
  std::vector<Role> roles;
  std::size_t k_shift = 0;

  VertexId a_vertex(std::size_t i) const { return static_cast<VertexId>(source.order() + i - 1); }
  VertexId b_vertex(std::size_t i) const { return static_cast<VertexId>(2 * source.order() + i - 1); }
  VertexId c_vertex() const { return static_cast<VertexId>(3 * source.order()); }
  VertexId d_vertex() const { return static_cast<VertexId>(3 * source.order() + 1); }
};

namespace detail {

inline std::string unique_label(std::string candidate, const std::set<std::string, std::less<>>& taken) {
  while (taken.count(candidate)) candidate += '\'';
  return candidate;
}

}  // namespace detail

inline ReductionInstance build_reduction(const Graph& g) {
  const auto coloring = two_coloring(g);
  if (!coloring) throw Error(ErrorKind::NotBipartite, "reduction source must be bipartite");
  const std::size_t n = g.order();

  ReductionInstance inst;
  inst.source = g;
  std::vector<VertexId> a_side, b_side;
  for (VertexId v = 0; v < n; ++v) ((*coloring)[v] == 0 ? a_side : b_side).push_back(v);
  inst.side_a = VertexSet(a_side);
  inst.side_b = VertexSet(b_side);
  inst.order = a_side;
  inst.order.insert(inst.order.end(), b_side.begin(), b_side.end());
  inst.k_shift = n;

  std::set<std::string, std::less<>> taken(g.labels().begin(), g.labels().end());
  std::vector<std::string> labels = g.labels();
  labels.resize(3 * n + 2);
  inst.roles.resize(3 * n + 2);
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 1; i <= n; ++i) {
    const VertexId v = inst.order[i - 1];
    inst.roles[v] = {RoleKind::Original, i};
    inst.roles[inst.a_vertex(i)] = {RoleKind::APendant, i};
    inst.roles[inst.b_vertex(i)] = {RoleKind::BPendant, i};
    labels[inst.a_vertex(i)] = detail::unique_label("a_" + std::to_string(i), taken);
    taken.insert(labels[inst.a_vertex(i)]);
    labels[inst.b_vertex(i)] = detail::unique_label("b_" + std::to_string(i), taken);
    taken.insert(labels[inst.b_vertex(i)]);
    edges.emplace_back(v, inst.a_vertex(i));
    edges.emplace_back(inst.a_vertex(i), inst.b_vertex(i));
    edges.emplace_back(inst.a_vertex(i), i <= a_side.size() ? inst.c_vertex() : inst.d_vertex());
  }
  inst.roles[inst.c_vertex()] = {RoleKind::ApexC, 0};
  inst.roles[inst.d_vertex()] = {RoleKind::ApexD, 0};
  labels[inst.c_vertex()] = detail::unique_label("c", taken);
  taken.insert(labels[inst.c_vertex()]);
  labels[inst.d_vertex()] = detail::unique_label("d", taken);
  edges.emplace_back(inst.c_vertex(), inst.d_vertex());
  inst.gadget = Graph::from_edges(3 * n + 2, edges, std::move(labels));
  return inst;
}

/// {"roles":{"label":"A_PENDANT(3)",...},"k_shift":n}
inline Json roles_to_json(const ReductionInstance& inst) {
  Json roles = Json::object();
  for (VertexId v = 0; v < inst.gadget.order(); ++v) roles[inst.gadget.label(v)] = inst.roles[v].str();
  return Json{{"roles", std::move(roles)}, {"k_shift", inst.k_shift}};
}

inline bool is_dominating_set(const Graph& g, const VertexSet& set) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (set.contains(v)) continue;
    bool dominated = false;
    for (VertexId w : g.neighbors(v)) dominated = dominated || set.contains(w);
    if (!dominated) return false;
  }
  return true;
}

/// γ(G) by subset enumeration in size order over closed-neighbourhood masks.
inline std::size_t dominating_number_exact(const Graph& g, std::size_t cap = 16) {
  const std::size_t n = g.order();
  if (n > cap || n > 30) {
    throw Error(ErrorKind::CapExceeded, "graph order " + std::to_string(n) + " exceeds domination cap " + std::to_string(cap));
  }
  if (n == 0) return 0;
  std::vector<std::uint32_t> closed(n);
  for (VertexId v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (VertexId w : g.neighbors(v)) closed[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack walks all k-subsets of n bits in increasing order.
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    while (mask <= full) {
      std::uint32_t covered = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) covered |= closed[__builtin_ctz(rest)];
      if (covered == full) return k;
      const std::uint32_t low = mask & -mask;
      const std::uint32_t ripple = mask + low;
      if (ripple == 0) break;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return n;
}

/// D ∪ {b_1..b_n}: the stress set the reduction builds from a dominating set D.
inline VertexSet forward_witness(const ReductionInstance& inst, const VertexSet& dominating) {
  std::vector<VertexId> out(dominating.begin(), dominating.end());
  for (std::size_t i = 1; i <= inst.source.order(); ++i) out.push_back(inst.b_vertex(i));
  return VertexSet(std::move(out));
}

struct ReductionCheck {
  std::size_t gamma = 0;
  std::size_t sn_gadget = 0;
  std::size_t n = 0;
  bool consistent = false;  ///< sn(G') == γ(G) + n
};

inline ReductionCheck verify_reduction(const Graph& g, std::size_t domination_cap = 16) {
  const ReductionInstance inst = build_reduction(g);
  ReductionCheck check;
  check.n = g.order();
  check.gamma = dominating_number_exact(g, domination_cap);
  check.sn_gadget = stress_number_exact(inst.gadget).optimum;
  check.consistent = check.sn_gadget == check.gamma + check.n;
  return check;
}

}  // namespace stressconv
