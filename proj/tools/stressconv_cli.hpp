#pragma once

#include <stressconv/stressconv.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace stressconv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Hex SHA-256 of the canonical JSON form of a graph.
inline std::string graph_digest(const Graph& g) {
  const std::string canonical = graph_to_json(g).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  hex << "sha256:";
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

namespace detail {

inline std::string cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); })) {
    std::string out;
    for (const auto& v : value) {
      if (!out.empty()) out += ", ";
      out += cell(v);
    }
    return out;
  }
  return value.dump();
}

}  // namespace detail

/// Aligned text view of a payload: a "rows" array becomes a table, other keys become "key: value" lines.
inline void render_table(const Json& payload, std::ostream& out) {
  for (const auto& [key, value] : payload.items()) {
    if (key == "rows") continue;
    out << key << ": " << detail::cell(value) << '\n';
  }
  if (!payload.contains("rows") || payload["rows"].empty()) return;
  const Json& rows = payload["rows"];
  std::vector<std::string> columns;
  for (const auto& [key, _] : rows.front().items()) columns.push_back(key);
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      width[i] = std::max(width[i], detail::cell(row.value(columns[i], Json())).size());
    }
  }
  auto line = [&](auto&& text_of) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i])) << text_of(i) << (i + 1 < columns.size() ? "  " : "\n");
    }
  };
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& row : rows) line([&](std::size_t i) { return detail::cell(row.value(columns[i], Json())); });
}

struct Table1Row {
  std::string family;
  std::vector<std::size_t> params;
  Graph graph;
  std::size_t expected_sn;
  std::size_t expected_sh;
};

/// The closed-form families and sizes checked by `table1`.
inline std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (std::size_t n = 2; n <= 8; ++n) rows.push_back({"path", {n}, path_graph(n), 2, 2});
  for (std::size_t n = 4; n <= 9; ++n) {
    const std::size_t v = n == 4 ? 4 : 3;
    rows.push_back({"cycle", {n}, cycle_graph(n), v, v});
  }
  for (std::size_t n = 2; n <= 7; ++n) rows.push_back({"complete", {n}, complete_graph(n), n, n});
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t n = m; n <= 4; ++n) rows.push_back({"complete-bipartite", {m, n}, complete_bipartite(m, n), m + n, m + n});
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t n = m; n <= 4; ++n) {
      rows.push_back({"grid", {m, n}, cartesian_product(path_graph(m), path_graph(n)), 2 * std::min(m, n), 4});
    }
  }
  rows.push_back({"hypercube", {3}, hypercube(3), 8, 8});
  return rows;
}

inline Json run_table1(std::optional<std::size_t> cap) {
  Json rows = Json::array();
  bool all_match = true;
  for (const auto& spec : table1_rows()) {
    Json row{{"family", spec.family},
             {"params", spec.params},
             {"order", spec.graph.order()},
             {"expected_sn", spec.expected_sn},
             {"expected_sh", spec.expected_sh}};
    try {
      const SolveOptions options{cap};
      const auto sn = stress_number_exact(spec.graph, options);
      const auto sh = stress_hull_number_exact(spec.graph, options);
      const bool match = sn.optimum == spec.expected_sn && sh.optimum == spec.expected_sh;
      row["sn"] = sn.optimum;
      row["sh"] = sh.optimum;
      row["match"] = match;
      row["error"] = nullptr;
      all_match = all_match && match;
    } catch (const Error& e) {
      row["sn"] = nullptr;
      row["sh"] = nullptr;
      row["match"] = false;
      row["error"] = std::string(to_string(e.kind()));
      all_match = false;
    }
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}, {"all_match", all_match}};
}

struct BenchPoint {
  std::size_t n = 0;
  std::size_t m = 0;
  double apsp_ms = 0;
  double intervals_ms = 0;
  double total_ms = 0;
};

/// Least-squares slope of log(total time) against log(n).
inline double fitted_exponent(const std::vector<BenchPoint>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(std::max(p.total_ms, 1e-6));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto k = static_cast<double>(points.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

/**
 * Times all-pairs stress intervals (counting BFS from every source, then
 * S(u,v) for every pair) on random connected graphs with about n ln n
 * edges. Each size keeps the fastest of @p repeats runs.
 */
inline std::vector<BenchPoint> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t repeats) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchPoint> points;
  for (std::size_t n : sizes) {
    const double p = std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
    const Graph g = random_graph(RandomKind::Connected, n, seed + n, RandomGraphOptions{p});
    BenchPoint best{n, g.edge_count(), 0, 0, 0};
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
      const auto t0 = Clock::now();
      const ApspTables t = compute_apsp(g);
      const auto t1 = Clock::now();
      const StressTable table(t);
      const auto t2 = Clock::now();
      const double apsp = std::chrono::duration<double, std::milli>(t1 - t0).count();
      const double intervals = std::chrono::duration<double, std::milli>(t2 - t1).count();
      if (r == 0 || apsp + intervals < best.total_ms) best = {n, g.edge_count(), apsp, intervals, apsp + intervals};
      if (table.order() != n) throw std::logic_error("stress table size mismatch");
    }
    points.push_back(best);
  }
  return points;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) {
    if (!current.empty()) out.push_back(current);
  }
  return out;
}

inline VertexSet resolve(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(g.id_of(l));
  return VertexSet(std::move(ids));
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Validation:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidArgument:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

inline Json report_json(const Graph& g, const SolveReport& r) {
  return Json{{"quantity", std::string(to_string(r.quantity))},
              {"optimum", r.optimum},
              {"witness", labels_json(g, r.witness)},
              {"forced", labels_json(g, r.forced)},
              {"nodes_explored", r.nodes_explored},
              {"method", r.method},
              {"warnings", r.warnings}};
}

}  // namespace detail

/**
 * Runs one CLI invocation. @p args excludes the program name.
 * Exit codes: 0 success, 1 domain error, 2 usage or input parse error.
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stress intervals, s-convex hulls, stress numbers and the dominating-set reduction", "stressconv"};
  app.require_subcommand(1);

  std::string graph_file, json_file, set_text, method = "exact", sizes_text = "50,100,200,400";
  std::vector<std::string> pair, gen_args;
  std::uint64_t seed = 1;
  std::size_t max_steps = 0, repeats = 3;
  std::optional<std::size_t> cap;
  bool table = false, timing = false, edges_only = false;

  auto graph_options = [&](CLI::App* sub) {
    auto* g = sub->add_option("--graph", graph_file, "edge-list input file");
    auto* j = sub->add_option("--json", json_file, "graph JSON input file");
    g->excludes(j);
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--table", table, "aligned text instead of JSON");
    sub->add_flag("--timing", timing, "include elapsed_ms in the output");
  };

  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help, bool needs_graph) {
    auto* sub = app.add_subcommand(name, help);
    if (needs_graph) graph_options(sub);
    common(sub);
    subs[name] = sub;
    return sub;
  };

  auto* gen = add("gen", "generate a family or random graph", false);
  gen->add_option("spec", gen_args, "FAMILY PARAMS... (path N, cycle N, complete N, complete-bipartite M N, hypercube D, "
                                    "star N, gap N K, grid M N, random-connected|random-bipartite|random-split|random-block N)")
      ->required();
  gen->add_option("--seed", seed, "seed for random families");
  gen->add_flag("--edges", edges_only, "emit the edge-list text instead of JSON");

  add("interval", "stress and geodesic interval of a pair", true)->add_option("--pair", pair, "L1 L2")->expected(2)->required();
  add("closure", "stress closure S[U]", true)->add_option("--set", set_text, "L1,L2,...")->required();
  add("hull", "s-convex hull [U]", true)->add_option("--set", set_text, "L1,L2,...")->required();
  add("convex", "is U s-convex", true)->add_option("--set", set_text, "L1,L2,...")->required();
  add("extreme", "s-extreme vertices of an s-convex set (default V)", true)->add_option("--set", set_text, "L1,L2,...");
  for (const char* name : {"sn", "sh"}) {
    auto* sub = add(name, std::string(name) == "sn" ? "stress number" : "stress hull number", true);
    sub->add_option("--cap", cap, "refuse graphs with more vertices");
    if (std::string(name) == "sn") sub->add_option("--method", method, "exact|split|block|naive")->check(CLI::IsMember({"exact", "split", "block", "naive"}));
  }
  add("classify", "s-trivial / geodetic / split / block flags", true);
  add("underlying", "underlying graph G_S", true);
  add("converge", "iterate the underlying graph until geodetic", true)->add_option("--max-steps", max_steps, "step limit (default n^2)");
  add("reduce", "dominating-set gadget for a bipartite graph", true);
  add("verify-reduction", "check sn(G') = gamma(G) + n", true)->add_option("--cap", cap, "domination search cap");
  add("table1", "stress numbers of the closed-form families", false)->add_option("--cap", cap, "skip graphs above this order");
  auto* bench = add("bench", "time all-pairs stress intervals and fit the growth exponent", false);
  bench->add_option("--sizes", sizes_text, "comma-separated orders");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--repeats", repeats, "runs per size (fastest kept)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    std::optional<Graph> graph;
    auto load = [&]() -> const Graph& {
      if (graph_file.empty() && json_file.empty()) throw Error(ErrorKind::InvalidArgument, "--graph or --json is required");
      if (!graph_file.empty()) {
        graph = parse_edge_list(detail::read_file(graph_file));
      } else {
        try {
          graph = graph_from_json(Json::parse(detail::read_file(json_file)));
        } catch (const Json::parse_error& e) {
          throw Error(ErrorKind::Parse, e.what());
        }
      }
      return *graph;
    };
    auto set_arg = [&](const Graph& g) { return detail::resolve(g, detail::split_labels(set_text)); };

    Json payload;
    if (command == "gen") {
      const std::string family = gen_args.front();
      std::vector<std::size_t> params;
      for (std::size_t i = 1; i < gen_args.size(); ++i) {
        try {
          params.push_back(std::stoul(gen_args[i]));
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidArgument, "parameter '" + gen_args[i] + "' is not a non-negative integer");
        }
      }
      auto need = [&](std::size_t count) {
        if (params.size() != count) throw Error(ErrorKind::InvalidArgument, family + " expects " + std::to_string(count) + " parameter(s)");
      };
      static const std::map<std::string, Family> families{{"path", Family::Path},
                                                          {"cycle", Family::Cycle},
                                                          {"complete", Family::Complete},
                                                          {"complete-bipartite", Family::CompleteBipartite},
                                                          {"hypercube", Family::Hypercube},
                                                          {"star", Family::Star},
                                                          {"gap", Family::GapConstruction}};
      static const std::map<std::string, RandomKind> random_kinds{{"random-connected", RandomKind::Connected},
                                                                  {"random-bipartite", RandomKind::Bipartite},
                                                                  {"random-split", RandomKind::Split},
                                                                  {"random-block", RandomKind::Block}};
      payload = Json{{"family", family}, {"params", params}};
      if (auto f = families.find(family); f != families.end()) {
        graph = generate(FamilySpec{f->second, params});
      } else if (family == "grid") {
        need(2);
        graph = cartesian_product(path_graph(params[0]), path_graph(params[1]));
      } else if (auto r = random_kinds.find(family); r != random_kinds.end()) {
        need(1);
        graph = random_graph(r->second, params[0], seed);
        payload["generator"] = std::string(kRandomAlgorithm);
        payload["seed"] = seed;
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
      }
      if (edges_only) {
        out << to_edge_list(*graph);
        return kExitOk;
      }
      payload["graph"] = graph_to_json(*graph);
    } else if (command == "table1") {
      payload = run_table1(cap);
    } else if (command == "bench") {
      std::vector<std::size_t> sizes;
      for (const auto& s : detail::split_labels(sizes_text)) {
        try {
          sizes.push_back(std::stoul(s));
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidArgument, "bad size '" + s + "'");
        }
      }
      if (sizes.size() < 2) throw Error(ErrorKind::InvalidArgument, "bench needs at least two sizes");
      const auto points = run_bench(sizes, seed, repeats);
      Json rows = Json::array();
      for (const auto& p : points) {
        rows.push_back(Json{{"n", p.n}, {"m", p.m}, {"apsp_ms", p.apsp_ms}, {"intervals_ms", p.intervals_ms}, {"total_ms", p.total_ms}});
      }
      payload = Json{{"rows", std::move(rows)}, {"exponent", fitted_exponent(points)}, {"seed", seed}};
    } else {
      const Graph& g = load();
      if (command == "interval") {
        const ApspTables t = compute_apsp(g);
        const VertexId u = g.id_of(pair[0]);
        const VertexId v = g.id_of(pair[1]);
        const auto q = stress_interval_query(t, u, v);
        payload = Json{{"stress", labels_json(g, q.result)},
                       {"geodesic", labels_json(g, geodesic_interval(t, u, v))},
                       {"path_count", t.path_count(u, v).str()}};
        if (q.ordering) {
          payload["ordering"] = labels_json(g, VertexSet{}) ;
          for (VertexId x : *q.ordering) payload["ordering"].push_back(g.label(x));
          payload["distance"] = t.distance(u, v);
        } else {
          payload["ordering"] = nullptr;
          payload["distance"] = nullptr;
        }
      } else if (command == "closure") {
        const ApspTables t = compute_apsp(g);
        const VertexSet u = set_arg(g);
        payload = Json{{"set", labels_json(g, u)}, {"closure", labels_json(g, stress_closure(t, u))}, {"is_stress_set", is_stress_set(t, u)}};
      } else if (command == "hull") {
        const StressTable t(compute_apsp(g));
        const VertexSet u = set_arg(g);
        const VertexSet h = stress_hull(t, u);
        payload = Json{{"set", labels_json(g, u)}, {"hull", labels_json(g, h)}, {"is_hull_set", h.size() == g.order()}};
      } else if (command == "convex") {
        const ApspTables t = compute_apsp(g);
        const VertexSet u = set_arg(g);
        payload = Json{{"set", labels_json(g, u)}, {"convex", is_stress_convex(t, u)}, {"closure", labels_json(g, stress_closure(t, u))}};
      } else if (command == "extreme") {
        const VertexSet k = set_text.empty() ? VertexSet::all(g.order()) : set_arg(g);
        payload = Json{{"set", labels_json(g, k)}, {"extreme", labels_json(g, extreme_vertices(g, k))}};
      } else if (command == "sn") {
        if (method == "naive") {
          payload = Json{{"quantity", "STRESS_NUMBER"}, {"optimum", naive_sn_oracle(g, cap.value_or(12))}, {"method", "naive"}};
        } else {
          SolveReport r = method == "split"   ? sn_split_graph(g)
                          : method == "block" ? sn_block_graph(g)
                                              : stress_number_exact(g, SolveOptions{cap});
          r.quantity = Quantity::StressNumber;
          payload = detail::report_json(g, r);
        }
      } else if (command == "sh") {
        payload = detail::report_json(g, stress_hull_number_exact(g, SolveOptions{cap}));
      } else if (command == "classify") {
        const ApspTables t = compute_apsp(g);
        const bool connected = is_connected(g);
        const SpecialClasses special = classify_special(g);
        payload = Json{{"order", g.order()},
                       {"edges", g.edge_count()},
                       {"connected", connected},
                       {"s_trivial", is_s_trivial(t)},
                       {"geodetic", is_geodetic(t)},
                       {"split", special.split},
                       {"block", special.block}};
        payload["stress_equals_interval"] = connected ? Json(stress_equals_interval(g)) : Json(nullptr);
      } else if (command == "underlying") {
        const Graph u = underlying_graph(g);
        payload = Json{{"graph", graph_to_json(u)}, {"same_as_input", u.edges() == g.edges()}};
      } else if (command == "converge") {
        const auto trace = convergence_sequence(g, max_steps);
        Json graphs = Json::array();
        for (const auto& step : trace.graphs) graphs.push_back(graph_to_json(step));
        payload = Json{{"terminated", trace.terminated}, {"cycle_detected", trace.cycle_detected}, {"steps", trace.steps()}, {"graphs", std::move(graphs)}};
      } else if (command == "reduce") {
        const auto inst = build_reduction(g);
        payload = roles_to_json(inst);
        payload["gadget"] = graph_to_json(inst.gadget);
        payload["side_a"] = labels_json(g, inst.side_a);
        payload["side_b"] = labels_json(g, inst.side_b);
      } else if (command == "verify-reduction") {
        const auto check = verify_reduction(g, cap.value_or(16));
        payload = Json{{"gamma", check.gamma}, {"sn_gadget", check.sn_gadget}, {"n", check.n}, {"consistent", check.consistent}};
      }
    }

    Json result{{"command", command}, {"payload", payload}};
    result["input_digest"] = graph ? Json(graph_digest(*graph)) : Json(nullptr);
    if (timing) {
      result["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    if (table) {
      out << "command: " << command << '\n';
      render_table(payload, out);
    } else {
      out << result.dump() << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return detail::exit_code_for(e.kind());
  }
}

}  // namespace stressconv::cli
