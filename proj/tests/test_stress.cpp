#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <stressconv/stressconv.hpp>

#include <gtest/gtest.h>

using namespace stressconv;

namespace {

VertexSet ids(const Graph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) out.push_back(g.id_of(l));
  return VertexSet(out);
}

}  // namespace

TEST(Intervals, OddCycleGeodesic) {
  const Graph c5 = cycle_graph(5);
  const ApspTables t = compute_apsp(c5);
  EXPECT_EQ(stress_interval(t, 0, 2), ids(c5, {"v1", "v2", "v3"}));
  EXPECT_EQ(geodesic_interval(t, 0, 2), ids(c5, {"v1", "v2", "v3"}));
}

TEST(Intervals, DisconnectedPairIsEmpty) {
  const Graph g = parse_edge_list("a b\nc d");
  const ApspTables t = compute_apsp(g);
  EXPECT_TRUE(stress_interval(t, 0, 2).empty());
  EXPECT_TRUE(geodesic_interval(t, 0, 2).empty());
  const auto q = stress_interval_query(t, 0, 2);
  EXPECT_FALSE(q.ordering.has_value());
  EXPECT_THROW(stress_interval_via_cut_vertices(g, t, 0, 2), Error);
  EXPECT_THROW(stress_interval(t, 0, 9), Error);
}

TEST(Intervals, CutVertexOracleExamples) {
  const Graph c4 = cycle_graph(4);
  const ApspTables t4 = compute_apsp(c4);
  EXPECT_EQ(stress_interval_via_cut_vertices(c4, t4, 0, 2), (VertexSet{0, 2}));
  EXPECT_EQ(stress_interval(t4, 0, 2), (VertexSet{0, 2}));

  const Graph p4 = parse_edge_list("a b\nb c\nc d");
  const ApspTables tp = compute_apsp(p4);
  EXPECT_EQ(stress_interval_via_cut_vertices(p4, tp, 0, 3), (VertexSet{0, 1, 2, 3}));

  const Graph c6 = cycle_graph(6);
  const ApspTables t6 = compute_apsp(c6);
  EXPECT_EQ(stress_interval_via_cut_vertices(c6, t6, 0, 3), ids(c6, {"v1", "v4"}));
  EXPECT_EQ(stress_interval(t6, 0, 3), ids(c6, {"v1", "v4"}));
}

TEST(Intervals, OrderingFollowsDistance) {
  const Graph p4 = parse_edge_list("a b\nb c\nc d");
  const auto q = stress_interval_query(compute_apsp(p4), 3, 0);
  ASSERT_TRUE(q.ordering);
  EXPECT_EQ(*q.ordering, (std::vector<VertexId>{3, 2, 1, 0}));
}

TEST(Closure, Examples) {
  const Graph c5 = cycle_graph(5);
  const ApspTables t5 = compute_apsp(c5);
  EXPECT_EQ(stress_closure(t5, ids(c5, {"v1", "v3", "v5"})), VertexSet::all(5));
  EXPECT_EQ(stress_closure(t5, VertexSet{3}), VertexSet{3});
  const ApspTables t4 = compute_apsp(cycle_graph(4));
  EXPECT_EQ(stress_closure(t4, VertexSet{0, 2}), (VertexSet{0, 2}));
  const StressTable table(t5);
  EXPECT_EQ(stress_closure(table, ids(c5, {"v1", "v3"})), ids(c5, {"v1", "v2", "v3"}));
}

TEST(Convex, Examples) {
  EXPECT_TRUE(is_stress_convex(compute_apsp(cycle_graph(4)), VertexSet{0, 2}));
  EXPECT_FALSE(is_stress_convex(compute_apsp(path_graph(3)), VertexSet{0, 2}));
  const Graph q3 = hypercube(3);
  EXPECT_TRUE(is_stress_convex(compute_apsp(q3), VertexSet::all(8)));
}

TEST(Hull, Examples) {
  const ApspTables p4 = compute_apsp(path_graph(4));
  EXPECT_EQ(stress_hull(p4, VertexSet{0, 3}), VertexSet::all(4));
  const Graph c5 = cycle_graph(5);
  const ApspTables t5 = compute_apsp(c5);
  EXPECT_EQ(stress_hull(t5, ids(c5, {"v1", "v3"})), ids(c5, {"v1", "v2", "v3"}));
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const Graph grid = cartesian_product(path_graph(m), path_graph(n));
      const auto nn = static_cast<VertexId>(n);
      const VertexSet corners{0, nn - 1, static_cast<VertexId>((m - 1) * n), static_cast<VertexId>(m * n - 1)};
      EXPECT_EQ(stress_hull(StressTable(compute_apsp(grid)), corners), VertexSet::all(m * n)) << m << "x" << n;
    }
  }
}

TEST(StressSet, Examples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_stress_set(compute_apsp(c5), ids(c5, {"v1", "v3", "v5"})));
  EXPECT_FALSE(is_stress_set(compute_apsp(path_graph(4)), VertexSet{0, 1}));
}

TEST(StressSet, CheckerboardOnC5xC5) {
  const Graph g = cartesian_product(cycle_graph(5), cycle_graph(5));
  std::vector<VertexId> black;
  for (VertexId r = 0; r < 5; ++r) {
    for (VertexId c = 0; c < 5; ++c) {
      if ((r + c) % 2 == 0) black.push_back(r * 5 + c);
    }
  }
  ASSERT_EQ(black.size(), 13u);
  EXPECT_TRUE(is_stress_set(compute_apsp(g), VertexSet(black)));
}

TEST(Extreme, Examples) {
  const Graph tree = parse_edge_list("r a\nr b\na c\na d\nb e");
  EXPECT_EQ(extreme_vertices(tree), ids(tree, {"c", "d", "e"}));
  EXPECT_EQ(extreme_vertices(cycle_graph(4)), VertexSet::all(4));
  EXPECT_TRUE(extreme_vertices(cycle_graph(5)).empty());
  EXPECT_EQ(extreme_vertices(path_graph(1)), VertexSet{0});
}

TEST(Extreme, SubsetMustBeConvex) {
  const Graph p4 = path_graph(4);
  EXPECT_THROW(extreme_vertices(p4, VertexSet{0, 2}), Error);
  EXPECT_EQ(extreme_vertices(p4, VertexSet{0, 1, 2}), (VertexSet{0, 2}));
}

TEST(Extreme, IsolatedVerticesAreExtreme) {
  const Graph g = parse_edge_list("a b\nb c\nz");
  EXPECT_EQ(extreme_vertices(g), ids(g, {"a", "c", "z"}));
}

TEST(StressProperties, IntervalsMatchPathEnumerationOnAllGraphsUpTo7) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : corpus::all_graphs(n)) {
      const ApspTables t = compute_apsp(g);
      const StressTable table(t);
      const auto iv = oracle::intervals(g);
      for (VertexId u = 0; u < g.order(); ++u) {
        for (VertexId v = 0; v < g.order(); ++v) {
          ASSERT_EQ(stress_interval(t, u, v), iv.stress[u][v]) << to_edge_list(g);
          ASSERT_EQ(geodesic_interval(t, u, v), iv.geodesic[u][v]);
          ASSERT_EQ(to_vertex_set(table.interval(u, v)), iv.stress[u][v]);
        }
      }
    }
  }
}

TEST(StressProperties, IntervalFactsOnConnectedGraphsUpTo8) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      const ApspTables t = compute_apsp(g);
      for (VertexId u = 0; u < g.order(); ++u) {
        for (VertexId v = u; v < g.order(); ++v) {
          const VertexSet s = stress_interval(t, u, v);
          const VertexSet i = geodesic_interval(t, u, v);
          ASSERT_TRUE(s.is_subset_of(i));
          ASSERT_EQ(s, stress_interval_via_cut_vertices(g, t, u, v));
          ASSERT_TRUE(is_stress_convex(t, s));

          const auto q = stress_interval_query(t, u, v);
          ASSERT_TRUE(q.ordering);
          ASSERT_EQ(q.ordering->front(), u);
          ASSERT_EQ(q.ordering->back(), v);
          for (std::size_t k = 1; k < q.ordering->size(); ++k) {
            ASSERT_LT(t.distance(u, (*q.ordering)[k - 1]), t.distance(u, (*q.ordering)[k]));
          }

          // Interior points of S(u,v) are interior to some S(x,y) with x,y neighbours.
          for (VertexId a : s) {
            if (a == u || a == v) continue;
            bool found = false;
            for (VertexId x : g.neighbors(a)) {
              for (VertexId y : g.neighbors(a)) found = found || (x != y && stress_interval(t, x, y).contains(a));
            }
            ASSERT_TRUE(found);
          }
        }
      }
    }
  }
}

TEST(StressProperties, HullAndExtremeMatchOracles) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : corpus::all_graphs(n)) {
      const ApspTables t = compute_apsp(g);
      const StressTable table(t);
      const auto iv = oracle::intervals(g);
      ASSERT_EQ(extreme_vertices(g), oracle::extreme(g, iv)) << to_edge_list(g);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> members;
        for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
          if ((mask >> v) & 1u) members.push_back(v);
        }
        const VertexSet u(members);
        const VertexSet h = stress_hull(table, u);
        ASSERT_EQ(h, oracle::hull(iv, u));
        ASSERT_EQ(stress_closure(t, u), oracle::closure(iv, u));
        ASSERT_EQ(is_stress_convex(t, u), oracle::convex(iv, u));
        ASSERT_TRUE(u.is_subset_of(h));
        ASSERT_EQ(stress_hull(table, h), h);
        if (is_stress_convex(t, u) && !u.empty()) {
          // Neighbour pairs inside K must stay within distance 2 once v is gone.
          std::vector<VertexId> direct;
          for (VertexId v : u) {
            const auto d = oracle::distances(remove_vertex(g, v).graph);
            const auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
            bool ok = true;
            for (VertexId x : g.neighbors(v)) {
              for (VertexId y : g.neighbors(v)) {
                if (x < y && u.contains(x) && u.contains(y) && d[shift(x)][shift(y)] > 2) ok = false;
              }
            }
            if (ok) direct.push_back(v);
          }
          ASSERT_EQ(extreme_vertices(g, t, u), VertexSet(direct)) << to_edge_list(g) << " mask " << mask;
        }
      }
    }
  }
}

TEST(StressProperties, HullIsMonotone) {
  for (const Graph& g : corpus::connected_graphs(6)) {
    const StressTable table(compute_apsp(g));
    for (std::uint32_t a = 0; a < 64; a += 3) {
      for (std::uint32_t b = a; b < 64; b = (b + 1) | a) {
        std::vector<VertexId> x, y;
        for (VertexId v = 0; v < 6; ++v) {
          if ((a >> v) & 1u) x.push_back(v);
          if ((b >> v) & 1u) y.push_back(v);
        }
        ASSERT_TRUE(stress_hull(table, VertexSet(x)).is_subset_of(stress_hull(table, VertexSet(y))));
      }
    }
  }
}

TEST(StressProperties, IsometricSubgraphsAreConvex) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      const ApspTables t = compute_apsp(g);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<VertexId> members;
        for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
          if ((mask >> v) & 1u) members.push_back(v);
        }
        const VertexSet h(members);
        const Subgraph sub = induced_subgraph(g, h);
        const ApspTables ts = compute_apsp(sub.graph);
        bool isometric = true;
        for (VertexId i = 0; i < h.size() && isometric; ++i) {
          for (VertexId j = 0; j < h.size() && isometric; ++j) isometric = ts.distance(i, j) == t.distance(h[i], h[j]);
        }
        if (isometric) {
          ASSERT_TRUE(is_stress_convex(t, h));
        }
      }
    }
  }
}

TEST(StressProperties, CutVertexOracleOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = random_graph(RandomKind::Connected, 9 + seed % 12, seed);
    const ApspTables t = compute_apsp(g);
    for (VertexId u = 0; u < g.order(); ++u) {
      for (VertexId v = u + 1; v < g.order(); ++v) ASSERT_EQ(stress_interval(t, u, v), stress_interval_via_cut_vertices(g, t, u, v));
    }
  }
}
