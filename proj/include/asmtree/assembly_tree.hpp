#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmtree/vertex_set.hpp"

namespace asmtree {

enum class GluingRule { None, Connected, Edge };

std::string_view to_string(GluingRule rule);
/// Accepts "none", "connected", "edge". Throws std::invalid_argument otherwise.
GluingRule parse_rule(std::string_view name);

struct TreeNode {
  VertexSet label;
  std::vector<int> children;  // indices into the owning tree's node array

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Rooted tree of vertex-set labels, stored as a flat node array with the
/// root at index 0. Construction does not validate; see validate().
///
/// Canonical form: preorder numbering with siblings sorted by minimum
/// vertex. Enumerators and parse() produce canonical trees; equality
/// compares canonical forms, so sibling order never matters.
class AssemblyTree {
public:
  AssemblyTree() = default;
  explicit AssemblyTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  static AssemblyTree leaf(int v);
  /// Root whose children are the given subtrees; result is canonical.
  static AssemblyTree join(const std::vector<AssemblyTree>& children);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }
  const TreeNode& root() const { return nodes_.front(); }
  bool is_leaf(int i) const { return nodes_[i].children.empty(); }
  int leaf_count() const;
  /// Indices of non-leaf nodes, ascending.
  std::vector<int> internal_nodes() const;
  /// Parent index per node (-1 for the root). Assumes a well-formed tree.
  std::vector<int> parents() const;

  /// Canonical copy. If `old_to_new` is given it receives the index map.
  /// Assumes every node is reachable from the root exactly once.
  AssemblyTree canonical(std::vector<int>* old_to_new = nullptr) const;
  bool is_canonical() const;

  friend bool operator==(const AssemblyTree& a, const AssemblyTree& b);

private:
  std::vector<TreeNode> nodes_;
};

/// Assembly tree with a time per node (indexed like the tree's nodes).
struct TimedAssemblyTree {
  AssemblyTree tree;
  std::vector<int> times;

  int root_time() const { return times.empty() ? 0 : times.front(); }
  TimedAssemblyTree canonical() const;

  friend bool operator==(const TimedAssemblyTree& a, const TimedAssemblyTree& b);
};

/// Set partition of [n] given by blocks sorted by minimum vertex.
struct FrontierPartition {
  std::vector<VertexSet> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  std::string str() const;
  friend bool operator==(const FrontierPartition&, const FrontierPartition&) = default;
};

/// Maximal labels among nodes of time <= j. Throws std::out_of_range unless
/// 0 <= j <= root time.
FrontierPartition frontier_partition(const TimedAssemblyTree& t, int j);

}  // namespace asmtree
