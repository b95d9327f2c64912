#include "asmtree/assembly_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace asmtree {

std::string_view to_string(GluingRule rule) {
  switch (rule) {
    case GluingRule::None: return "none";
    case GluingRule::Connected: return "connected";
    case GluingRule::Edge: return "edge";
  }
  return "?";
}

GluingRule parse_rule(std::string_view name) {
  if (name == "none") return GluingRule::None;
  if (name == "connected") return GluingRule::Connected;
  if (name == "edge") return GluingRule::Edge;
  throw std::invalid_argument("unknown gluing rule: " + std::string(name));
}

AssemblyTree AssemblyTree::leaf(int v) {
  return AssemblyTree({TreeNode{VertexSet::singleton(v), {}}});
}

AssemblyTree AssemblyTree::join(const std::vector<AssemblyTree>& children) {
  std::vector<TreeNode> nodes(1);
  for (const auto& child : children) {
    const int offset = static_cast<int>(nodes.size());
    nodes.front().label |= child.root().label;
    nodes.front().children.push_back(offset);
    for (TreeNode n : child.nodes()) {
      for (int& c : n.children) c += offset;
      nodes.push_back(std::move(n));
    }
  }
  return AssemblyTree(std::move(nodes)).canonical();
}

int AssemblyTree::leaf_count() const {
  return static_cast<int>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.children.empty(); }));
}

std::vector<int> AssemblyTree::internal_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (!is_leaf(i)) out.push_back(i);
  return out;
}

std::vector<int> AssemblyTree::parents() const {
  std::vector<int> parent(nodes_.size(), -1);
  for (int i = 0; i < size(); ++i)
    for (int c : nodes_[i].children) parent[c] = i;
  return parent;
}

AssemblyTree AssemblyTree::canonical(std::vector<int>* old_to_new) const {
  std::vector<TreeNode> out;
  out.reserve(nodes_.size());
  std::vector<int> mapping(nodes_.size(), -1);
  std::function<int(int)> visit = [&](int i) {
    const int idx = static_cast<int>(out.size());
    mapping[i] = idx;
    out.push_back(TreeNode{nodes_[i].label, {}});
    std::vector<int> kids = nodes_[i].children;
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return nodes_[a].label < nodes_[b].label; });
    std::vector<int> new_kids;
    new_kids.reserve(kids.size());
    for (int c : kids) new_kids.push_back(visit(c));
    out[idx].children = std::move(new_kids);
    return idx;
  };
  if (!nodes_.empty()) visit(0);
  if (old_to_new) *old_to_new = std::move(mapping);
  return AssemblyTree(std::move(out));
}

bool AssemblyTree::is_canonical() const { return canonical().nodes_ == nodes_; }

bool operator==(const AssemblyTree& a, const AssemblyTree& b) {
  if (a.size() != b.size()) return false;
  return a.canonical().nodes_ == b.canonical().nodes_;
}

TimedAssemblyTree TimedAssemblyTree::canonical() const {
  std::vector<int> mapping;
  TimedAssemblyTree out{tree.canonical(&mapping), std::vector<int>(times.size(), 0)};
  for (std::size_t i = 0; i < times.size() && i < mapping.size(); ++i) {
    if (mapping[i] >= 0) out.times[mapping[i]] = times[i];
  }
  return out;
}

bool operator==(const TimedAssemblyTree& a, const TimedAssemblyTree& b) {
  if (a.tree.size() != b.tree.size()) return false;
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.tree.nodes() == cb.tree.nodes() && ca.times == cb.times;
}

std::string FrontierPartition::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ',';
    s += blocks[i].str();
  }
  return s + "}";
}

FrontierPartition frontier_partition(const TimedAssemblyTree& t, int j) {
  if (t.tree.empty()) throw std::invalid_argument("frontier_partition: empty tree");
  if (j < 0 || j > t.root_time()) {
    throw std::out_of_range("frontier_partition: j=" + std::to_string(j) + " outside [0, " +
                            std::to_string(t.root_time()) + "]");
  }
  // A node is maximal among {time <= j} iff its own time is <= j and its
  // parent's is not; times strictly increase toward the root.
  const auto parent = t.tree.parents();
  FrontierPartition p;
  for (int i = 0; i < t.tree.size(); ++i) {
    if (t.times[i] <= j && (parent[i] < 0 || t.times[parent[i]] > j)) {
      p.blocks.push_back(t.tree.node(i).label);
    }
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

}  // namespace asmtree
