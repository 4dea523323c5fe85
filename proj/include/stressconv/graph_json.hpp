#pragma once

#include <stressconv/graph.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace stressconv {

using Json = nlohmann::json;

/// {"labels":[...], "edges":[[i,j],...]} with i<j and edges sorted.
inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"labels", g.labels()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("edges")) {
      throw Error(ErrorKind::Parse, "graph JSON must be an object with 'labels' and 'edges'");
    }
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "each edge must be a pair of vertex ids");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("graph JSON: ") + ex.what());
  }
}

/// Labels of a vertex set, in canonical (id) order.
inline Json labels_json(const Graph& g, const VertexSet& set) {
  Json out = Json::array();
  for (VertexId v : set) out.push_back(g.label(v));
  return out;
}

}  // namespace stressconv
