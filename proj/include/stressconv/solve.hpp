#pragma once

#include <stressconv/apsp.hpp>
#include <stressconv/stress.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stressconv {

enum class Quantity { StressNumber, StressHullNumber };

constexpr std::string_view to_string(Quantity q) noexcept {
  return q == Quantity::StressNumber ? "STRESS_NUMBER" : "STRESS_HULL_NUMBER";
}

/**
 * @brief Result of an sn / sh computation.
 *
 * `forced` holds the s-extreme vertices, which belong to every stress set
 * and every stress hull set; `witness` always contains them.
 */
struct SolveReport {
  Quantity quantity = Quantity::StressNumber;
  std::size_t optimum = 0;
  VertexSet witness;
  VertexSet forced;
  std::uint64_t nodes_explored = 0;  ///< candidate subsets tested
  std::chrono::nanoseconds elapsed{0};
  std::string method;
  std::vector<std::string> warnings;
};

struct SolveOptions {
  /// Refuse graphs with more vertices than this.
  std::optional<std::size_t> cap;
};

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

struct SpecialClasses {
  bool split = false;
  std::optional<SplitPartition> partition;
  bool block = false;
  std::vector<VertexSet> blocks;
};

/**
 * Split recognition by the degree-sequence criterion (the m highest-degree
 * vertices form the clique) and block-graph recognition by checking every
 * biconnected component for completeness.
 */
inline SpecialClasses classify_special(const Graph& g) {
  SpecialClasses out;
  const std::size_t n = g.order();

  std::vector<VertexId> by_degree(n);
  for (VertexId v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(by_degree[i]) + 1 >= i + 1) m = i + 1;
  }
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_degree[i]);
  if (head == m * (m - (m > 0 ? 1 : 0)) + tail) {
    SplitPartition p{VertexSet(std::vector<VertexId>(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(m))),
                     VertexSet(std::vector<VertexId>(by_degree.begin() + static_cast<std::ptrdiff_t>(m), by_degree.end()))};
    bool independent = true;
    for (VertexId a : p.independent) {
      for (VertexId w : g.neighbors(a)) independent = independent && p.clique.contains(w);
    }
    if (!is_clique(g, p.clique) || !independent) {
      throw std::logic_error("degree-sequence split partition failed verification");
    }
    // Prefer the larger independent side: a clique vertex with no independent
    // neighbour can switch sides (at most one can, the clique being complete).
    if (!p.independent.empty()) {
      const auto& members = p.clique.members();
      const auto loose = std::find_if(members.begin(), members.end(), [&](VertexId v) {
        const auto nb = g.neighbors(v);
        return std::none_of(nb.begin(), nb.end(), [&](VertexId w) { return p.independent.contains(w); });
      });
      if (loose != members.end()) {
        const VertexSet moved{*loose};
        p.clique = p.clique.without(moved);
        p.independent = p.independent.united(moved);
      }
    }
    out.split = true;
    out.partition = std::move(p);
  }

  out.blocks = biconnected_components(g);
  out.block = std::all_of(out.blocks.begin(), out.blocks.end(), [&](const VertexSet& b) { return is_clique(g, b); });
  return out;
}

namespace detail {

inline void require_solvable(const Graph& g, const SolveOptions& options) {
  if (g.order() == 0) throw Error(ErrorKind::InvalidArgument, "stress number of the empty graph is undefined");
  if (options.cap && g.order() > *options.cap) {
    throw Error(ErrorKind::CapExceeded,
                "graph order " + std::to_string(g.order()) + " exceeds solver cap " + std::to_string(*options.cap));
  }
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "sn/sh are defined for connected graphs only");
}

/**
 * Size-ascending search over supersets of the forced set. At each size the
 * free vertices are chosen in lexicographic order, so the first accepted
 * candidate is the lexicographically least optimum. The closure of the
 * current prefix is carried down the recursion.
 */
class ForcedSearch {
 public:
  using Accept = std::function<bool(const VertexBits& closure)>;

  ForcedSearch(const StressTable& table, const VertexSet& forced, Accept accept)
      : table_(table), accept_(std::move(accept)) {
    const std::size_t n = table.order();
    for (VertexId v = 0; v < n; ++v) {
      if (!forced.contains(v)) free_.push_back(v);
    }
    chosen_.assign(forced.begin(), forced.end());
    base_ = closure_bits(table, to_bits(forced, n));
  }

  /// Tries every superset with exactly @p extra free vertices.
  bool try_size(std::size_t extra) {
    if (extra > free_.size()) return false;
    levels_.assign(extra + 1, base_);
    return descend(0, extra, 0);
  }

  VertexSet witness() const { return VertexSet(chosen_); }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool descend(std::size_t start, std::size_t remaining, std::size_t depth) {
    if (remaining == 0) {
      ++nodes_;
      return accept_(levels_[depth]);
    }
    for (std::size_t i = start; i + remaining <= free_.size(); ++i) {
      const VertexId x = free_[i];
      VertexBits& next = levels_[depth + 1];
      next = levels_[depth];
      next.set(x);
      for (VertexId y : chosen_) next |= table_.interval(x, y);
      chosen_.push_back(x);
      if (descend(i + 1, remaining - 1, depth + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const StressTable& table_;
  Accept accept_;
  std::vector<VertexId> free_;
  std::vector<VertexId> chosen_;
  VertexBits base_;
  std::vector<VertexBits> levels_;
  std::uint64_t nodes_ = 0;
};

inline SolveReport exact_search(const Graph& g, Quantity quantity, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  require_solvable(g, options);
  const std::size_t n = g.order();
  const StressTable table(compute_apsp(g));

  SolveReport report;
  report.quantity = quantity;
  report.method = "exact";
  report.forced = extreme_vertices(g);

  ForcedSearch::Accept accept;
  if (quantity == Quantity::StressNumber) {
    accept = [](const VertexBits& closure) { return closure.all(); };
  } else {
    accept = [&table](const VertexBits& closure) { return hull_bits(table, closure).all(); };
  }
  ForcedSearch search(table, report.forced, accept);
  const std::size_t first = std::max<std::size_t>(report.forced.size(), n >= 2 ? 2 : 1);
  for (std::size_t k = first; k <= n; ++k) {
    if (search.try_size(k - report.forced.size())) {
      report.optimum = k;
      report.witness = search.witness();
      break;
    }
  }
  report.nodes_explored = search.nodes();
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace detail

/// sn(G) by forced-extreme exhaustive search. Connected graphs only.
inline SolveReport stress_number_exact(const Graph& g, const SolveOptions& options = {}) {
  return detail::exact_search(g, Quantity::StressNumber, options);
}

/// sh(G): same search, accepting a candidate when its hull is V(G).
inline SolveReport stress_hull_number_exact(const Graph& g, const SolveOptions& options = {}) {
  return detail::exact_search(g, Quantity::StressHullNumber, options);
}

/**
 * sn(G) = sh(G) = |Ext_s(G)| for a connected split graph, following the
 * case analysis on the clique size. The witness is validated; on failure
 * the exact solver is used and a warning recorded.
 */
inline SolveReport sn_split_graph(const Graph& g) {
  const auto started = std::chrono::steady_clock::now();
  detail::require_solvable(g, {});
  const SpecialClasses classes = classify_special(g);
  if (!classes.split) throw Error(ErrorKind::NotSplit, "graph is not a split graph");
  const SplitPartition& part = *classes.partition;

  SolveReport report;
  report.method = "split";
  report.forced = extreme_vertices(g);
  const VertexSet all = VertexSet::all(g.order());
  if (part.clique.size() == 1) {
    const VertexId x = part.clique[0];
    std::size_t attached = 0;
    for (VertexId a : part.independent) attached += g.adjacent(x, a) ? 1 : 0;
    report.witness = attached < 2 ? all : all.without(part.clique);
  } else {
    report.witness = report.forced;
  }

  const ApspTables t = compute_apsp(g);
  if (!is_stress_set(t, report.witness) || report.witness != report.forced) {
    SolveReport fallback = stress_number_exact(g);
    fallback.method = "split-fallback-exact";
    fallback.warnings.push_back("split witness failed validation; used exact solver");
    return fallback;
  }
  report.optimum = report.witness.size();
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

/// sn(G) = sh(G) = n - (number of cut vertices) for a connected block graph.
inline SolveReport sn_block_graph(const Graph& g) {
  const auto started = std::chrono::steady_clock::now();
  detail::require_solvable(g, {});
  if (!classify_special(g).block) throw Error(ErrorKind::NotBlock, "graph is not a block graph");
  SolveReport report;
  report.method = "block";
  report.witness = VertexSet::all(g.order()).without(articulation_points(g));
  report.forced = report.witness;
  report.optimum = report.witness.size();
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

/**
 * Reference sn: every subset in size order, closure computed straight from
 * the distance/count tables, no forcing and no pruning. Test use only.
 */
inline std::size_t naive_sn_oracle(const Graph& g, std::size_t cap = 12) {
  detail::require_solvable(g, SolveOptions{cap});
  const ApspTables t = compute_apsp(g);
  const std::size_t n = g.order();
  std::vector<VertexId> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      pick.clear();
      for (VertexId v = 0; v < n; ++v) {
        if (mask[v]) pick.push_back(v);
      }
      if (is_stress_set(t, VertexSet(pick))) return k;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return n;
}

}  // namespace stressconv
