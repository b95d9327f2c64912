#include "asmtree/count.hpp"

#include <bit>
#include <functional>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace asmtree {

namespace {

// Per-subset flags and neighbor unions, bit v-1 for vertex v.
struct SubsetTables {
  std::vector<std::uint8_t> connected;
  std::vector<std::uint64_t> neighbors;

  explicit SubsetTables(const Graph& g) {
    const int n = g.order();
    const std::size_t total = std::size_t{1} << n;
    connected.assign(total, 0);
    neighbors.assign(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
      const std::uint64_t low = s & (~s + 1);
      neighbors[s] = neighbors[s ^ low] | g.neighbors(std::countr_zero(low) + 1).bits();
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 1; s < static_cast<std::int64_t>(total); ++s) {
      connected[s] = g.is_connected_induced(VertexSet(static_cast<std::uint64_t>(s))) ? 1 : 0;
    }
  }
};

std::vector<std::vector<std::uint64_t>> subsets_by_size(int n) {
  std::vector<std::vector<std::uint64_t>> layers(n + 1);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) layers[std::popcount(s)].push_back(s);
  return layers;
}

}  // namespace

Natural count_trees(const Graph& g, GluingRule rule, int max_n) {
  require_countable(g, max_n, "count_trees");
  const int n = g.order();
  const SubsetTables tables(g);
  const auto layers = subsets_by_size(n);
  const std::size_t total = std::size_t{1} << n;

  std::vector<Natural> trees(total, Natural(0));
  std::vector<Natural> forests(total, Natural(0));
  forests[0] = 1;
  for (std::uint64_t s : layers[1]) {
    trees[s] = 1;
    forests[s] = 1;
  }

  for (int size = 2; size <= n; ++size) {
    const auto& layer = layers[size];
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const std::uint64_t s = layer[i];
      const std::uint64_t head = s & (~s + 1);
      const std::uint64_t others = s ^ head;
      Natural::Backend acc = 0;
      if (rule == GluingRule::Edge) {
        // A ranges over proper subsets containing head; B = S \ A nonempty
        for (std::uint64_t sub = (others - 1) & others;; sub = (sub - 1) & others) {
          const std::uint64_t a = head | sub;
          const std::uint64_t b = s ^ a;
          if (!trees[a].is_zero() && !trees[b].is_zero() && (tables.neighbors[a] & b) != 0) {
            acc += trees[a].backend() * trees[b].backend();
          }
          if (sub == 0) break;
        }
        trees[s] = Natural(acc);
        continue;
      }
      // splits(S): block B containing head, B != S
      for (std::uint64_t sub = (others - 1) & others;; sub = (sub - 1) & others) {
        const std::uint64_t b = head | sub;
        if (!trees[b].is_zero()) acc += trees[b].backend() * forests[s ^ b].backend();
        if (sub == 0) break;
      }
      const bool label_ok = rule == GluingRule::None || tables.connected[s];
      Natural splits(acc);
      trees[s] = label_ok ? splits : Natural(0);
      forests[s] = trees[s] + splits;
    }
  }
  return trees[total - 1];
}

namespace {

class SerialCounter {
public:
  SerialCounter(const Graph& g, GluingRule rule) : g_(g), rule_(rule) {}

  Natural trees(VertexSet s) {
    if (s.size() == 1) return 1;
    if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;
    Natural total = 0;
    const bool label_ok = rule_ == GluingRule::None || g_.is_connected_induced(s);
    if (label_ok) {
      for_each_split(g_, s, rule_, [&](const std::vector<VertexSet>& blocks) {
        Natural product = 1;
        for (VertexSet b : blocks) {
          product *= trees(b);
          if (product.is_zero()) break;
        }
        total += product;
      });
    }
    memo_.emplace(s.bits(), total);
    return total;
  }

private:
  const Graph& g_;
  GluingRule rule_;
  std::unordered_map<std::uint64_t, Natural> memo_;
};

}  // namespace

Natural count_trees_serial(const Graph& g, GluingRule rule, int max_n) {
  require_countable(g, max_n, "count_trees_serial");
  return SerialCounter(g, rule).trees(g.vertices());
}

Natural count_level_assignments(const AssemblyTree& t) {
  const std::vector<int> internal = t.internal_nodes();
  const int k = static_cast<int>(internal.size());
  if (k == 0) return 1;
  std::vector<int> position(t.size(), -1);
  for (int i = 0; i < k; ++i) position[internal[i]] = i;
  std::vector<std::uint64_t> prereq(k, 0);
  for (int i = 0; i < k; ++i)
    for (int c : t.node(internal[i]).children)
      if (position[c] >= 0) prereq[i] |= std::uint64_t{1} << position[c];

  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  // ways[done] = number of ways to place the remaining nodes in new layers
  std::unordered_map<std::uint64_t, Natural> ways;
  std::function<Natural(std::uint64_t)> solve = [&](std::uint64_t done) -> Natural {
    if (done == all) return 1;
    if (auto it = ways.find(done); it != ways.end()) return it->second;
    std::uint64_t ready = 0;
    for (int i = 0; i < k; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(done & bit) && (prereq[i] & ~done) == 0) ready |= bit;
    }
    Natural total = 0;
    for (std::uint64_t sub = ready; sub != 0; sub = (sub - 1) & ready) total += solve(done | sub);
    ways.emplace(done, total);
    return total;
  };
  return solve(0);
}

Natural count_timed_trees(const Graph& g, GluingRule rule, int max_n) {
  Natural total = 0;
  for_each_tree(g, rule, [&](const AssemblyTree& t) { total += count_level_assignments(t); }, max_n);
  return total;
}

}  // namespace asmtree
