#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "asmtree/assembly_tree.hpp"

namespace asmtree {

enum class TreeFormat { Json, Dot };

TreeFormat parse_tree_format(std::string_view name);

// JSON schema: {"label":[ints], "time": int (timed only), "children":[...]}.
// Output is canonical (sorted siblings) and compact.
nlohmann::ordered_json tree_to_json(const AssemblyTree& t);
nlohmann::ordered_json tree_to_json(const TimedAssemblyTree& t);

std::string serialize_tree(const AssemblyTree& t, TreeFormat format);
std::string serialize_tree(const TimedAssemblyTree& t, TreeFormat format);

/// Throws std::invalid_argument on malformed input. A "time" field, if
/// present, is ignored by parse_tree and required on every node by
/// parse_timed_tree.
AssemblyTree parse_tree(std::string_view json_text);
TimedAssemblyTree parse_timed_tree(std::string_view json_text);

}  // namespace asmtree
