#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "asmtree/count.hpp"

namespace asmtree {

namespace {

struct BlocksHash {
  std::size_t operator()(const std::vector<std::uint64_t>& blocks) const {
    std::size_t h = blocks.size();
    for (std::uint64_t b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class FrontierCounter {
public:
  FrontierCounter(const Graph& g, GluingRule rule) : g_(g), rule_(rule) {}

  Natural count(const std::vector<std::uint64_t>& blocks) {
    if (blocks.size() == 1) return 1;
    if (auto it = memo_.find(blocks); it != memo_.end()) return it->second;
    Natural total = 0;
    std::vector<std::uint64_t> next;
    next.reserve(blocks.size());
    const std::uint64_t all =
        blocks.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << blocks.size()) - 1;
    group(blocks, all, false, next, total);
    memo_.emplace(blocks, total);
    return total;
  }

private:
  bool mergeable(const std::vector<std::uint64_t>& blocks, std::uint64_t members) const {
    const int size = std::popcount(members);
    if (rule_ == GluingRule::None) return true;
    VertexSet merged;
    for (std::uint64_t m = members; m != 0; m &= m - 1) merged |= VertexSet(blocks[std::countr_zero(m)]);
    if (rule_ == GluingRule::Connected) return g_.is_connected_induced(merged);
    if (size != 2) return false;
    const int first = std::countr_zero(members);
    const int second = std::countr_zero(members & (members - 1));
    return g_.has_crossing_edge(VertexSet(blocks[first]), VertexSet(blocks[second]));
  }

  // Assigns the blocks in `rest` to groups; each group becomes one block of
  // the next frontier.
  void group(const std::vector<std::uint64_t>& blocks, std::uint64_t rest, bool merged,
             std::vector<std::uint64_t>& next, Natural& total) {
    if (rest == 0) {
      if (!merged) return;
      std::vector<std::uint64_t> sorted = next;
      std::sort(sorted.begin(), sorted.end());
      total += count(sorted);
      return;
    }
    const std::uint64_t head = rest & (~rest + 1);
    const std::uint64_t others = rest ^ head;
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
      const std::uint64_t members = head | sub;
      const bool single = sub == 0;
      if (single || (!(rule_ == GluingRule::Edge && std::popcount(sub) != 1) &&
                     mergeable(blocks, members))) {
        std::uint64_t united = 0;
        for (std::uint64_t m = members; m != 0; m &= m - 1) united |= blocks[std::countr_zero(m)];
        next.push_back(united);
        group(blocks, rest ^ members, merged || !single, next, total);
        next.pop_back();
      }
      if (sub == 0) break;
    }
  }

  const Graph& g_;
  GluingRule rule_;
  std::unordered_map<std::vector<std::uint64_t>, Natural, BlocksHash> memo_;
};

}  // namespace

Natural count_timed_trees_by_frontiers(const Graph& g, GluingRule rule, int max_n) {
  require_countable(g, max_n, "count_timed_trees");
  std::vector<std::uint64_t> singletons;
  for (int v = 1; v <= g.order(); ++v) singletons.push_back(VertexSet::singleton(v).bits());
  return FrontierCounter(g, rule).count(singletons);
}

}  // namespace asmtree
