#include "asmtree/enumerate.hpp"

#include <string>

namespace asmtree {

void require_countable(const Graph& g, int max_n, const char* what) {
  if (g.order() > max_n) {
    throw LimitExceeded(std::string(what) + ": graph has " + std::to_string(g.order()) +
                        " vertices, limit is " + std::to_string(max_n));
  }
  if (!g.is_connected_induced(g.vertices())) {
    throw std::invalid_argument(std::string(what) + ": graph is not connected");
  }
}

namespace {

// Partitions `rest` into blocks (each containing the smallest remaining
// vertex) accepted by `block_ok`, appending to `blocks`.
void partition_rec(VertexSet rest, std::vector<VertexSet>& blocks,
                   const std::function<bool(VertexSet)>& block_ok,
                   const std::function<void(const std::vector<VertexSet>&)>& visit) {
  if (rest.empty()) {
    visit(blocks);
    return;
  }
  const VertexSet head = VertexSet::singleton(rest.min());
  const std::uint64_t others = (rest - head).bits();
  // submasks of `others` in decreasing order, ending with the empty set
  std::uint64_t sub = others;
  while (true) {
    const VertexSet block = head | VertexSet(sub);
    if (block_ok(block)) {
      blocks.push_back(block);
      partition_rec(rest - block, blocks, block_ok, visit);
      blocks.pop_back();
    }
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
}

}  // namespace

void for_each_split(const Graph& g, VertexSet label, GluingRule rule,
                    const std::function<void(const std::vector<VertexSet>&)>& visit) {
  if (label.size() < 2) return;
  if (rule == GluingRule::Edge) {
    const VertexSet head = VertexSet::singleton(label.min());
    const std::uint64_t others = (label - head).bits();
    std::vector<VertexSet> pair(2);
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
      const VertexSet a = head | VertexSet(sub);
      const VertexSet b = label - a;
      if (!b.empty() && g.is_connected_induced(a) && g.is_connected_induced(b) &&
          g.has_crossing_edge(a, b)) {
        pair[0] = a;
        pair[1] = b;
        visit(pair);
      }
      if (sub == 0) break;
    }
    return;
  }
  std::function<bool(VertexSet)> block_ok;
  if (rule == GluingRule::Connected) {
    block_ok = [&](VertexSet b) { return b != label && g.is_connected_induced(b); };
  } else {
    block_ok = [&](VertexSet b) { return b != label; };
  }
  std::vector<VertexSet> blocks;
  partition_rec(label, blocks, block_ok, visit);
}

namespace {

class TreeBuilder {
public:
  TreeBuilder(const Graph& g, GluingRule rule, const std::function<void(const AssemblyTree&)>& visit)
      : g_(g), rule_(rule), visit_(visit) {}

  void run() {
    nodes_ = {TreeNode{g_.vertices(), {}}};
    pending_.clear();
    if (g_.order() >= 2) pending_.push_back(0);
    expand();
  }

private:
  void expand() {
    if (pending_.empty()) {
      visit_(AssemblyTree(nodes_).canonical());
      return;
    }
    const int idx = pending_.back();
    pending_.pop_back();
    const VertexSet label = nodes_[idx].label;
    for_each_split(g_, label, rule_, [&](const std::vector<VertexSet>& blocks) {
      const std::size_t node_mark = nodes_.size();
      const std::size_t pending_mark = pending_.size();
      for (VertexSet b : blocks) {
        const int child = static_cast<int>(nodes_.size());
        nodes_.push_back(TreeNode{b, {}});
        nodes_[idx].children.push_back(child);
        if (b.size() >= 2) pending_.push_back(child);
      }
      expand();
      nodes_.resize(node_mark);
      nodes_[idx].children.clear();
      pending_.resize(pending_mark);
    });
    pending_.push_back(idx);
  }

  const Graph& g_;
  GluingRule rule_;
  const std::function<void(const AssemblyTree&)>& visit_;
  std::vector<TreeNode> nodes_;
  std::vector<int> pending_;
};

}  // namespace

void for_each_tree(const Graph& g, GluingRule rule,
                   const std::function<void(const AssemblyTree&)>& visit, int max_n) {
  require_countable(g, max_n, "enumerate_trees");
  TreeBuilder(g, rule, visit).run();
}

std::vector<AssemblyTree> enumerate_trees(const Graph& g, GluingRule rule, int max_n) {
  std::vector<AssemblyTree> out;
  for_each_tree(g, rule, [&](const AssemblyTree& t) { out.push_back(t); }, max_n);
  return out;
}

void for_each_level_assignment(const AssemblyTree& t,
                               const std::function<void(const std::vector<int>&)>& visit) {
  const std::vector<int> internal = t.internal_nodes();
  const int k = static_cast<int>(internal.size());
  std::vector<int> times(t.size(), 0);
  if (k == 0) {
    visit(times);
    return;
  }
  // bit i of prereq[i] set = internal children of internal[i]
  std::vector<int> position(t.size(), -1);
  for (int i = 0; i < k; ++i) position[internal[i]] = i;
  std::vector<std::uint64_t> prereq(k, 0);
  for (int i = 0; i < k; ++i)
    for (int c : t.node(internal[i]).children)
      if (position[c] >= 0) prereq[i] |= std::uint64_t{1} << position[c];

  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::function<void(std::uint64_t, int)> layer = [&](std::uint64_t done, int level) {
    if (done == all) {
      visit(times);
      return;
    }
    std::uint64_t ready = 0;
    for (int i = 0; i < k; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(done & bit) && (prereq[i] & ~done) == 0) ready |= bit;
    }
    for (std::uint64_t sub = ready; sub != 0; sub = (sub - 1) & ready) {
      for (std::uint64_t b = sub; b != 0; b &= b - 1) times[internal[std::countr_zero(b)]] = level;
      layer(done | sub, level + 1);
    }
  };
  layer(0, 1);
}

void for_each_timed_tree(const Graph& g, GluingRule rule,
                         const std::function<void(const TimedAssemblyTree&)>& visit, int max_n) {
  for_each_tree(
      g, rule,
      [&](const AssemblyTree& t) {
        for_each_level_assignment(t, [&](const std::vector<int>& times) {
          visit(TimedAssemblyTree{t, times});
        });
      },
      max_n);
}

std::vector<TimedAssemblyTree> enumerate_timed_trees(const Graph& g, GluingRule rule, int max_n) {
  std::vector<TimedAssemblyTree> out;
  for_each_timed_tree(g, rule, [&](const TimedAssemblyTree& t) { out.push_back(t); }, max_n);
  return out;
}

}  // namespace asmtree
