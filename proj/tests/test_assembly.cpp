#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "asmtree/assembly_tree.hpp"
#include "asmtree/combinat.hpp"
#include "asmtree/count.hpp"
#include "asmtree/enumerate.hpp"
#include "asmtree/formulas.hpp"
#include "asmtree/tree_io.hpp"
#include "asmtree/validate.hpp"

using namespace asmtree;

namespace {

AssemblyTree L(int v) { return AssemblyTree::leaf(v); }
AssemblyTree J(std::vector<AssemblyTree> c) { return AssemblyTree::join(c); }

using Family_ = std::vector<std::uint64_t>;  // sorted bitmasks of internal labels

Family_ internal_labels(const AssemblyTree& t) {
  Family_ f;
  for (int i : t.internal_nodes()) f.push_back(t.node(i).label.bits());
  std::sort(f.begin(), f.end());
  return f;
}

bool laminar_with(const Family_& chosen, std::uint64_t s) {
  for (auto c : chosen) {
    const auto common = c & s;
    if (common != 0 && common != c && common != s) return false;
  }
  return true;
}

// Every laminar family of proper subsets (size >= 2) of [n], plus [n] itself
// (for n = 1 the root is the leaf, so the family is empty).
// Each one is the set of internal labels of exactly one rule-None tree.
std::vector<Family_> laminar_families(int n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t s = 1; s < full; ++s)
    if (std::popcount(s) >= 2) candidates.push_back(s);
  std::vector<Family_> out;
  Family_ chosen;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    Family_ f = chosen;
    if (n > 1) f.push_back(full);
    std::sort(f.begin(), f.end());
    out.push_back(f);
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (!laminar_with(chosen, candidates[i])) continue;
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

// Builds the tree whose internal labels are `family`: parent = smallest strict superset.
AssemblyTree tree_from_family(int n, const Family_& family) {
  std::vector<std::uint64_t> sets(family.begin(), family.end());
  for (int v = 0; v < n; ++v) sets.push_back(std::uint64_t{1} << v);
  std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
  });
  std::vector<TreeNode> nodes;
  for (auto s : sets) nodes.push_back(TreeNode{VertexSet(s), {}});
  for (std::size_t i = 1; i < sets.size(); ++i) {
    std::size_t parent = 0;
    for (std::size_t j = 0; j < i; ++j)
      if ((sets[i] & ~sets[j]) == 0 && std::popcount(sets[j]) > std::popcount(sets[i])) parent = j;
    nodes[parent].children.push_back(static_cast<int>(i));
  }
  return AssemblyTree(nodes).canonical();
}

// Rule check written against the laminar family directly.
bool family_obeys(const Graph& g, int n, const Family_& family, GluingRule rule) {
  if (rule == GluingRule::None) return true;
  const AssemblyTree t = tree_from_family(n, family);
  for (int i : t.internal_nodes()) {
    const auto& node = t.node(i);
    if (rule == GluingRule::Connected && !g.is_connected_induced(node.label)) return false;
    if (rule == GluingRule::Edge) {
      if (node.children.size() != 2) return false;
      const VertexSet a = t.node(node.children[0]).label;
      const VertexSet b = t.node(node.children[1]).label;
      bool edge = false;
      for (auto [u, v] : g.edges())
        if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) edge = true;
      if (!edge) return false;
    }
  }
  return true;
}

std::set<Family_> family_set(const std::vector<AssemblyTree>& trees) {
  std::set<Family_> out;
  for (const auto& t : trees) out.insert(internal_labels(t));
  return out;
}

TimedAssemblyTree seven_vertex_timed_tree() {
  const AssemblyTree t =
      J({J({L(1), L(3), L(5), L(7)}), J({L(4), J({L(2), L(6)})})}).canonical();
  const std::map<std::uint64_t, int> time_of{{VertexSet{1, 3, 5, 7}.bits(), 1},
                                             {VertexSet{2, 6}.bits(), 1},
                                             {VertexSet{2, 4, 6}.bits(), 2},
                                             {VertexSet::range(7).bits(), 3}};
  TimedAssemblyTree timed{t, {}};
  for (const auto& node : t.nodes()) {
    auto it = time_of.find(node.label.bits());
    timed.times.push_back(it == time_of.end() ? 0 : it->second);
  }
  return timed;
}

const std::vector<Family> kFamilies{Family::Star, Family::Path, Family::Cycle, Family::Complete};
const std::vector<GluingRule> kRules{GluingRule::None, GluingRule::Connected, GluingRule::Edge};

}  // namespace

TEST_CASE("K3 under the edge rule has the three pairwise trees") {
  const auto trees = enumerate_trees(complete(3), GluingRule::Edge);
  const std::vector<AssemblyTree> expected{J({J({L(1), L(2)}), L(3)}), J({J({L(1), L(3)}), L(2)}),
                                           J({L(1), J({L(2), L(3)})})};
  CHECK(trees.size() == 3);
  for (const auto& e : expected) CHECK(std::count(trees.begin(), trees.end(), e) == 1);
  CHECK(count_trees(complete(3), GluingRule::Edge) == 3);
}

TEST_CASE("K3 under the connected rule adds the flat tree") {
  const auto trees = enumerate_trees(complete(3), GluingRule::Connected);
  CHECK(trees.size() == 4);
  CHECK(std::count(trees.begin(), trees.end(), J({L(3), L(2), L(1)})) == 1);
  CHECK(count_trees(complete(3), GluingRule::Connected) == 4);
}

TEST_CASE("trivial graphs") {
  CHECK(count_trees(path(1), GluingRule::Edge) == 1);
  CHECK(count_trees(path(2), GluingRule::Connected) == 1);
  CHECK(count_trees(path(2), GluingRule::None) == 1);
  CHECK_THROWS_AS(count_trees(Graph(3, {{1, 2}}), GluingRule::Connected), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(path(10), GluingRule::None), LimitExceeded);
  CHECK_THROWS_AS(count_trees(path(17), GluingRule::None), LimitExceeded);
}

TEST_CASE("canonical form ignores child order") {
  const AssemblyTree a = J({J({L(4), L(2)}), L(1), L(3)});
  const AssemblyTree b = J({L(3), L(1), J({L(2), L(4)})});
  CHECK(a == b);
  CHECK(a.canonical().is_canonical());
  CHECK(a.canonical().root().label == VertexSet::range(4));
  CHECK(a.leaf_count() == 4);
  CHECK(a.internal_nodes().size() == 2);
}

TEST_CASE("enumeration matches laminar families for every rule, n <= 6") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n) {
    const auto families = laminar_families(n);
    std::vector<Graph> graphs{path(n), complete(n)};
    if (n >= 2) graphs.push_back(star(n));
    if (n >= 3) graphs.push_back(cycle(n));
    if (n >= 4) graphs.push_back(caterpillar(2, {n - 3, 1}));
    for (const Graph& g : graphs) {
      for (GluingRule rule : kRules) {
        std::set<Family_> expected;
        for (const auto& f : families) {
          const bool ok = family_obeys(g, n, f, rule);
          if (ok) expected.insert(f);
          CHECK(validate(g, tree_from_family(n, f), rule).ok() == ok);
        }
        const auto trees = enumerate_trees(g, rule);
        for (const auto& t : trees) {
          CHECK(validate(g, t, rule).ok());
          CHECK(t.is_canonical());
        }
        CHECK(trees.size() == expected.size());
        CHECK(family_set(trees) == expected);
        CHECK(count_trees(g, rule) == Natural(expected.size()));
        CHECK(count_trees_serial(g, rule) == Natural(expected.size()));
      }
    }
  }
}

TEST_CASE("rule monotonicity: edge within connected within none") {
  for (Family fam : kFamilies) {
    for (int n = fam == Family::Star ? 2 : (fam == Family::Cycle ? 3 : 1); n <= 7; ++n) {
      const Graph g = family_graph(fam, n);
      const auto none = family_set(enumerate_trees(g, GluingRule::None));
      const auto conn = family_set(enumerate_trees(g, GluingRule::Connected));
      const auto edge = family_set(enumerate_trees(g, GluingRule::Edge));
      CHECK(std::includes(none.begin(), none.end(), conn.begin(), conn.end()));
      CHECK(std::includes(conn.begin(), conn.end(), edge.begin(), edge.end()));
    }
  }
}

TEST_CASE("rule none does not depend on the graph") {
  for (int n = 3; n <= 12; ++n) {
    const Natural expected = count_trees(caterpillar(2, {n - 3, 1}), GluingRule::None);
    for (Family fam : kFamilies) CHECK(count_trees(family_graph(fam, n), GluingRule::None) == expected);
  }
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_trees(complete(n), GluingRule::Connected) == count_trees(complete(n), GluingRule::None));
  }
}

TEST_CASE("parallel and serial subset DP agree on random graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 11;
    std::bernoulli_distribution coin(0.3);
    std::vector<Graph::Edge> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng) && std::find(edges.begin(), edges.end(), Graph::Edge{u, v}) == edges.end())
          edges.emplace_back(u, v);
    const Graph g(n, edges);
    for (GluingRule rule : kRules) CHECK(count_trees(g, rule) == count_trees_serial(g, rule));
  }
}

TEST_CASE("two-cherry tree has three level assignments") {
  const AssemblyTree t = J({J({L(1), L(2)}), J({L(3), L(4)})});
  CHECK(count_level_assignments(t) == 3);
  int visits = 0;
  for_each_level_assignment(t, [&](const std::vector<int>&) { ++visits; });
  CHECK(visits == 3);
  CHECK(count_level_assignments(L(1)) == 1);
  CHECK(count_level_assignments(J({J({J({L(1), L(2)}), L(3)}), L(4)})) == 1);
}

TEST_CASE("frontier partitions of the seven-vertex timed tree") {
  const TimedAssemblyTree t = seven_vertex_timed_tree();
  CHECK(validate(Graph(7, {}), t, GluingRule::None).ok());
  const FrontierPartition p2 = frontier_partition(t, 2);
  CHECK(p2.blocks == std::vector<VertexSet>{VertexSet{1, 3, 5, 7}, VertexSet{2, 4, 6}});
  CHECK(p2.str() == "{{1,3,5,7},{2,4,6}}");
  CHECK(frontier_partition(t, 0).size() == 7);
  CHECK(frontier_partition(t, 1).blocks ==
        std::vector<VertexSet>{VertexSet{1, 3, 5, 7}, VertexSet{2, 6}, VertexSet{4}});
  CHECK(frontier_partition(t, 3).blocks == std::vector<VertexSet>{VertexSet::range(7)});
  CHECK_THROWS_AS(frontier_partition(t, 4), std::out_of_range);
}

TEST_CASE("validator reports malformed trees") {
  const Graph k3 = complete(3);
  CHECK(validate(k3, J({L(1), L(2)}), GluingRule::None).has("root-label"));
  CHECK(validate(path(3), J({J({L(1), L(3)}), L(2)}), GluingRule::Connected).has("disconnected-label"));
  CHECK(validate(path(3), J({J({L(1), L(3)}), L(2)}), GluingRule::None).ok());
  CHECK(validate(k3, J({L(1), L(2), L(3)}), GluingRule::Edge).has("edge-arity"));
  CHECK(validate(Graph(4, {{1, 2}, {3, 4}}), J({J({L(1), L(2)}), J({L(3), L(4)})}), GluingRule::Edge)
            .has("no-gluing-edge"));

  std::vector<TreeNode> unary{{VertexSet{1, 2}, {1}}, {VertexSet{1, 2}, {2, 3}}, {VertexSet{1}, {}}, {VertexSet{2}, {}}};
  CHECK(validate(path(2), AssemblyTree(unary), GluingRule::None).has("unary-node"));
  std::vector<TreeNode> mismatch{{VertexSet{1, 2, 3}, {1, 2}}, {VertexSet{1}, {}}, {VertexSet{2}, {}}};
  CHECK(validate(k3, AssemblyTree(mismatch), GluingRule::None).has("union-mismatch"));
  CHECK(validate(k3, AssemblyTree(mismatch), GluingRule::None).has("leaf-count"));
  std::vector<TreeNode> cyclic{{VertexSet{1, 2}, {1, 1}}, {VertexSet{1}, {}}};
  CHECK(validate(path(2), AssemblyTree(cyclic), GluingRule::None).has("not-a-tree"));
  std::vector<TreeNode> bad_index{{VertexSet{1, 2}, {1, 5}}, {VertexSet{1}, {}}};
  CHECK(validate(path(2), AssemblyTree(bad_index), GluingRule::None).has("bad-child-index"));

  TimedAssemblyTree t = seven_vertex_timed_tree();
  TimedAssemblyTree gap = t;
  for (auto& x : gap.times)
    if (x == 3) x = 4;
  CHECK(validate(Graph(7, {}), gap, GluingRule::None).has("time-gap"));
  TimedAssemblyTree order = t;
  for (std::size_t i = 0; i < order.times.size(); ++i)
    if (order.tree.node(static_cast<int>(i)).label == VertexSet{2, 6}) order.times[i] = 2;
  CHECK(validate(Graph(7, {}), order, GluingRule::None).has("time-order"));
  TimedAssemblyTree leaf = t;
  for (std::size_t i = 0; i < leaf.times.size(); ++i)
    if (leaf.tree.is_leaf(static_cast<int>(i))) {
      leaf.times[i] = 1;
      break;
    }
  CHECK(validate(Graph(7, {}), leaf, GluingRule::None).has("leaf-time"));
  TimedAssemblyTree short_times = t;
  short_times.times.pop_back();
  CHECK(validate(Graph(7, {}), short_times, GluingRule::None).has("time-count"));
}

TEST_CASE("every timed tree validates, and timed counts agree across both counters") {
  for (Family fam : kFamilies) {
    for (int n = fam == Family::Star ? 2 : (fam == Family::Cycle ? 3 : 1); n <= 6; ++n) {
      const Graph g = family_graph(fam, n);
      for (GluingRule rule : kRules) {
        const auto timed = enumerate_timed_trees(g, rule);
        std::set<std::pair<Family_, std::vector<int>>> distinct;
        for (const auto& t : timed) {
          CHECK(validate(g, t, rule).ok());
          distinct.emplace(internal_labels(t.tree), t.times);
          if (n >= 2) {
            const int p1 = frontier_partition(t, 1).size();
            CHECK(p1 >= 1);
            CHECK(p1 < n);
          }
        }
        CHECK(distinct.size() == timed.size());
        const Natural by_enum(timed.size());
        CHECK(count_timed_trees(g, rule) == by_enum);
        CHECK(count_timed_trees_by_frontiers(g, rule) == by_enum);
        CHECK(!(by_enum < count_trees(g, rule)));
      }
    }
  }
}

TEST_CASE("grouping timed trees by the first frontier reproduces the recursion terms") {
  using combinat::binomial;
  using combinat::factorial;
  using combinat::stirling2;
  auto group = [](const Graph& g, GluingRule rule) {
    std::map<int, Natural> by_size;
    for_each_timed_tree(g, rule, [&](const TimedAssemblyTree& t) {
      auto& c = by_size[frontier_partition(t, 1).size()];
      c = c + 1;
    });
    return by_size;
  };
  auto at = [](const std::map<int, Natural>& m, int j) {
    auto it = m.find(j);
    return it == m.end() ? Natural(0) : it->second;
  };

  for (int n = 3; n <= 7; ++n) {
    const auto conn = group(cycle(n), GluingRule::Connected);
    CHECK(at(conn, 1) == 1);
    for (int j = 2; j < n; ++j) CHECK(at(conn, j) == binomial(n, j) * formulas::td_connected_cycle(j));
    CHECK(at(conn, n) == 0);

    const auto edge = group(cycle(n), GluingRule::Edge);
    for (int j = 1; 2 * j <= n; ++j) {
      const Natural ways = binomial(n - j, n - 2 * j) + binomial(n - j - 1, n - 2 * j);
      CHECK(at(edge, n - j) == ways * formulas::td_edge_cycle(n - j));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const auto conn = group(complete(n), GluingRule::Connected);
    for (int j = 1; j < n; ++j) CHECK(at(conn, j) == stirling2(n, j) * formulas::td_connected_complete(j));

    const auto edge = group(complete(n), GluingRule::Edge);
    for (int i = 1; 2 * i <= n; ++i) {
      Natural pow2(1);
      for (int k = 0; k < i; ++k) pow2 = pow2 * 2;
      const Natural matchings = factorial(n).divide_exact(pow2 * factorial(i) * factorial(n - 2 * i));
      CHECK(at(edge, n - i) == matchings * formulas::td_edge_complete(n - i));
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const auto edge = group(path(n), GluingRule::Edge);
    for (int j = 1; 2 * j <= n; ++j)
      CHECK(at(edge, n - j) == binomial(n - j, n - 2 * j) * formulas::td_edge_path(n - j));
  }
}

TEST_CASE("serialization round-trips") {
  for (const auto& t : enumerate_trees(path(5), GluingRule::None)) {
    CHECK(parse_tree(serialize_tree(t, TreeFormat::Json)) == t);
  }
  for (const auto& t : enumerate_timed_trees(path(5), GluingRule::Connected)) {
    CHECK(parse_timed_tree(serialize_tree(t, TreeFormat::Json)) == t);
  }
  CHECK(serialize_tree(L(1), TreeFormat::Json) == R"({"label":[1],"children":[]})");
  const std::string dot = serialize_tree(seven_vertex_timed_tree(), TreeFormat::Dot);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("{1,3,5,7}@1") != std::string::npos);
  CHECK_THROWS(parse_tree("{\"label\": [1, 2], \"children\": [{\"label\": [1]}]"));
}
