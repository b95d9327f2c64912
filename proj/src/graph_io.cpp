#include "asmtree/graph_io.hpp"

#include <fstream>
#include <stdexcept>

namespace asmtree {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw std::invalid_argument("graph JSON: missing integer field \"n\"");
  }
  std::vector<Graph::Edge> edges;
  if (j.contains("edges")) {
    const auto& list = j.at("edges");
    if (!list.is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw std::invalid_argument("graph JSON: each edge must be [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Graph(j.at("n").get<int>(), edges);
}

Graph load_graph_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open graph file " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("graph file " + file.string() + ": " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace asmtree
