#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "asmtree/assembly_tree.hpp"
#include "asmtree/graph.hpp"

namespace asmtree {

inline constexpr int kDefaultEnumerationLimit = 9;
inline constexpr int kDefaultCountLimit = 16;
inline constexpr int kDefaultTimedCountLimit = 10;

/// Raised when a graph is larger than the configured size cap of an
/// enumeration or counting routine.
class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument for disconnected graphs and LimitExceeded
/// when g.order() > max_n.
void require_countable(const Graph& g, int max_n, const char* what);

/// Calls `visit(blocks)` for every way to split `label` into at least two
/// blocks that `rule` allows as the children of a node labeled `label`.
/// Blocks arrive sorted by minimum vertex. Under Edge there are exactly two
/// connected blocks joined by an edge; under Connected every block is
/// connected.
void for_each_split(const Graph& g, VertexSet label, GluingRule rule,
                    const std::function<void(const std::vector<VertexSet>&)>& visit);

/// Streams every assembly tree of g satisfying `rule`, each once, canonical.
void for_each_tree(const Graph& g, GluingRule rule,
                   const std::function<void(const AssemblyTree&)>& visit,
                   int max_n = kDefaultEnumerationLimit);
std::vector<AssemblyTree> enumerate_trees(const Graph& g, GluingRule rule,
                                          int max_n = kDefaultEnumerationLimit);

/// Streams every valid time map of `t` (times indexed like t's nodes).
void for_each_level_assignment(const AssemblyTree& t,
                               const std::function<void(const std::vector<int>&)>& visit);

/// Streams every time-dependent assembly tree of g satisfying `rule`.
void for_each_timed_tree(const Graph& g, GluingRule rule,
                         const std::function<void(const TimedAssemblyTree&)>& visit,
                         int max_n = kDefaultEnumerationLimit);
std::vector<TimedAssemblyTree> enumerate_timed_trees(const Graph& g, GluingRule rule,
                                                     int max_n = kDefaultEnumerationLimit);

}  // namespace asmtree
