#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "asmtree/graph.hpp"

namespace asmtree {

// {"n": int, "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph_file(const std::filesystem::path& file);

}  // namespace asmtree
