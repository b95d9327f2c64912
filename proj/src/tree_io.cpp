#include "asmtree/tree_io.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace asmtree {

TreeFormat parse_tree_format(std::string_view name) {
  if (name == "json") return TreeFormat::Json;
  if (name == "dot") return TreeFormat::Dot;
  throw std::invalid_argument("unknown tree format: " + std::string(name));
}

namespace {

nlohmann::ordered_json node_json(const AssemblyTree& t, const std::vector<int>* times, int i) {
  nlohmann::ordered_json j;
  j["label"] = t.node(i).label.members();
  if (times) j["time"] = (*times)[i];
  j["children"] = nlohmann::ordered_json::array();
  for (int c : t.node(i).children) j["children"].push_back(node_json(t, times, c));
  return j;
}

std::string dot(const AssemblyTree& t, const std::vector<int>* times) {
  std::ostringstream os;
  os << "digraph assembly_tree {\n";
  for (int i = 0; i < t.size(); ++i) {
    os << "  n" << i << " [label=\"" << t.node(i).label.str();
    if (times) os << '@' << (*times)[i];
    os << "\"];\n";
  }
  for (int i = 0; i < t.size(); ++i)
    for (int c : t.node(i).children) os << "  n" << i << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

void parse_node(const nlohmann::json& j, bool timed, std::vector<TreeNode>& nodes,
                std::vector<int>& times) {
  if (!j.is_object() || !j.contains("label") || !j["label"].is_array()) {
    throw std::invalid_argument("tree JSON: node needs a \"label\" array");
  }
  std::vector<int> members;
  for (const auto& v : j["label"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("tree JSON: label entries must be integers");
    members.push_back(v.get<int>());
  }
  const int idx = static_cast<int>(nodes.size());
  nodes.push_back(TreeNode{VertexSet::of(members), {}});
  if (timed) {
    if (!j.contains("time") || !j["time"].is_number_integer()) {
      throw std::invalid_argument("tree JSON: timed node needs an integer \"time\"");
    }
    times.push_back(j["time"].get<int>());
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw std::invalid_argument("tree JSON: \"children\" must be an array");
    for (const auto& c : j["children"]) {
      const int child = static_cast<int>(nodes.size());
      nodes[idx].children.push_back(child);
      parse_node(c, timed, nodes, times);
    }
  }
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("tree JSON: ") + e.what());
  }
}

}  // namespace

nlohmann::ordered_json tree_to_json(const AssemblyTree& t) {
  const AssemblyTree c = t.canonical();
  return node_json(c, nullptr, 0);
}

nlohmann::ordered_json tree_to_json(const TimedAssemblyTree& t) {
  const TimedAssemblyTree c = t.canonical();
  return node_json(c.tree, &c.times, 0);
}

std::string serialize_tree(const AssemblyTree& t, TreeFormat format) {
  if (format == TreeFormat::Json) return tree_to_json(t).dump();
  const AssemblyTree c = t.canonical();
  return dot(c, nullptr);
}

std::string serialize_tree(const TimedAssemblyTree& t, TreeFormat format) {
  if (format == TreeFormat::Json) return tree_to_json(t).dump();
  const TimedAssemblyTree c = t.canonical();
  return dot(c.tree, &c.times);
}

AssemblyTree parse_tree(std::string_view json_text) {
  std::vector<TreeNode> nodes;
  std::vector<int> times;
  parse_node(parse_json(json_text), false, nodes, times);
  return AssemblyTree(std::move(nodes)).canonical();
}

TimedAssemblyTree parse_timed_tree(std::string_view json_text) {
  std::vector<TreeNode> nodes;
  std::vector<int> times;
  parse_node(parse_json(json_text), true, nodes, times);
  return TimedAssemblyTree{AssemblyTree(std::move(nodes)), std::move(times)}.canonical();
}

}  // namespace asmtree
