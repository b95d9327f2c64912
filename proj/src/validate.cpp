#include "asmtree/validate.hpp"

#include <algorithm>
#include <string>

namespace asmtree {

bool Validation::has(const std::string& code) const {
  return std::any_of(reasons.begin(), reasons.end(),
                     [&](const std::string& r) { return r.rfind(code + ":", 0) == 0; });
}

namespace {

void check_shape(const Graph& g, const AssemblyTree& t, Validation& v) {
  const int count = t.size();
  if (count == 0) {
    v.reasons.push_back("not-a-tree: no nodes");
    return;
  }
  // every node reachable from the root exactly once
  std::vector<int> in_degree(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int c : t.node(i).children) {
      if (c < 0 || c >= count) {
        v.reasons.push_back("bad-child-index: node " + std::to_string(i) + " -> " +
                            std::to_string(c));
        return;
      }
      ++in_degree[c];
    }
  }
  if (in_degree[0] != 0) {
    v.reasons.push_back("not-a-tree: root has a parent");
    return;
  }
  std::vector<bool> seen(count, false);
  std::vector<int> stack{0};
  int visited = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (seen[i]) {
      v.reasons.push_back("not-a-tree: node " + std::to_string(i) + " reached twice");
      return;
    }
    seen[i] = true;
    ++visited;
    for (int c : t.node(i).children) stack.push_back(c);
  }
  if (visited != count) {
    v.reasons.push_back("not-a-tree: " + std::to_string(count - visited) + " unreachable nodes");
    return;
  }

  const int n = g.order();
  if (t.root().label != g.vertices()) {
    v.reasons.push_back("root-label: " + t.root().label.str() + " != " + g.vertices().str());
  }
  VertexSet leaves_seen;
  int leaves = 0;
  for (int i = 0; i < count; ++i) {
    const TreeNode& node = t.node(i);
    if (node.children.empty()) {
      ++leaves;
      if (node.label.size() != 1 || !node.label.subset_of(g.vertices())) {
        v.reasons.push_back("leaf-label: node " + std::to_string(i) + " labeled " +
                            node.label.str());
      } else if (!leaves_seen.disjoint(node.label)) {
        v.reasons.push_back("leaf-label: duplicate leaf " + node.label.str());
      }
      leaves_seen |= node.label;
      continue;
    }
    if (node.children.size() < 2) {
      v.reasons.push_back("unary-node: node " + std::to_string(i) + " " + node.label.str());
    }
    VertexSet acc;
    bool overlap = false;
    for (int c : node.children) {
      if (!acc.disjoint(t.node(c).label)) overlap = true;
      acc |= t.node(c).label;
    }
    if (overlap) {
      v.reasons.push_back("overlapping-children: node " + std::to_string(i) + " " +
                          node.label.str());
    }
    if (acc != node.label) {
      v.reasons.push_back("union-mismatch: node " + std::to_string(i) + " " + node.label.str() +
                          " vs children " + acc.str());
    }
  }
  if (leaves != n) {
    v.reasons.push_back("leaf-count: " + std::to_string(leaves) + " leaves for " +
                        std::to_string(n) + " vertices");
  }
}

void check_rule(const Graph& g, const AssemblyTree& t, GluingRule rule, Validation& v) {
  if (rule == GluingRule::None) return;
  for (int i = 0; i < t.size(); ++i) {
    const TreeNode& node = t.node(i);
    if (node.children.empty()) continue;
    if (!node.label.subset_of(g.vertices()) || node.label.empty()) continue;  // reported above
    if (rule == GluingRule::Connected) {
      if (!g.is_connected_induced(node.label)) {
        v.reasons.push_back("disconnected-label: " + node.label.str());
      }
      continue;
    }
    if (node.children.size() != 2) {
      v.reasons.push_back("edge-arity: node " + node.label.str() + " has " +
                          std::to_string(node.children.size()) + " children");
      continue;
    }
    VertexSet a = t.node(node.children[0]).label;
    VertexSet b = t.node(node.children[1]).label;
    if (a.empty() || b.empty() || !a.disjoint(b) || !g.has_crossing_edge(a, b)) {
      v.reasons.push_back("no-gluing-edge: between " + a.str() + " and " + b.str());
    }
  }
}

}  // namespace

Validation validate(const Graph& g, const AssemblyTree& t, GluingRule rule) {
  Validation v;
  check_shape(g, t, v);
  if (v.has("not-a-tree") || v.has("bad-child-index")) return v;
  check_rule(g, t, rule, v);
  return v;
}

Validation validate(const Graph& g, const TimedAssemblyTree& t, GluingRule rule) {
  Validation v = validate(g, t.tree, rule);
  if (v.has("not-a-tree") || v.has("bad-child-index")) return v;
  if (static_cast<int>(t.times.size()) != t.tree.size()) {
    v.reasons.push_back("time-count: " + std::to_string(t.times.size()) + " times for " +
                        std::to_string(t.tree.size()) + " nodes");
    return v;
  }
  const int n = g.order();
  const int m = t.root_time();
  if (n == 1) {
    if (m != 0) v.reasons.push_back("root-time: single vertex must sit at time 0");
    return v;
  }
  if (m < 1 || m > n - 1) {
    v.reasons.push_back("root-time: " + std::to_string(m) + " outside [1, " +
                        std::to_string(n - 1) + "]");
  }
  std::vector<bool> occupied(std::max(m, 0) + 1, false);
  for (int i = 0; i < t.tree.size(); ++i) {
    const int time = t.times[i];
    if (t.tree.is_leaf(i) && time != 0) {
      v.reasons.push_back("leaf-time: leaf " + t.tree.node(i).label.str() + " at time " +
                          std::to_string(time));
    }
    for (int c : t.tree.node(i).children) {
      if (t.times[c] >= time) {
        v.reasons.push_back("time-order: " + t.tree.node(c).label.str() + "@" +
                            std::to_string(t.times[c]) + " under " + t.tree.node(i).label.str() +
                            "@" + std::to_string(time));
      }
    }
    if (time >= 0 && time <= m) occupied[time] = true;
  }
  for (int i = 0; i <= m; ++i) {
    if (!occupied[i]) v.reasons.push_back("time-gap: no node at time " + std::to_string(i));
  }
  return v;
}

}  // namespace asmtree
