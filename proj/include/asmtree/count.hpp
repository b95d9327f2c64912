#pragma once

#include "asmtree/assembly_tree.hpp"
#include "asmtree/enumerate.hpp"
#include "asmtree/graph.hpp"
#include "asmtree/natural.hpp"

namespace asmtree {

/// Number of assembly trees of g under `rule`.
///
/// Bottom-up dynamic program over vertex subsets, one popcount layer at a
/// time; subsets within a layer are independent and are filled by an OpenMP
/// parallel loop. For a block S with least vertex s:
///
///   forests(S) = trees(S) + splits(S)
///   splits(S)  = sum over B with s in B, B != S of trees(B) * forests(S \ B)
///
/// and trees(S) = splits(S) for |S| >= 2 (zero when the rule demands a
/// connected label and S is not). Under Edge, trees(S) sums
/// trees(A) * trees(S \ A) over 2-splits with a crossing edge.
Natural count_trees(const Graph& g, GluingRule rule, int max_n = kDefaultCountLimit);

/// Serial reference for count_trees: top-down memoized recursion that
/// enumerates the child partitions of every block explicitly.
Natural count_trees_serial(const Graph& g, GluingRule rule, int max_n = kDefaultCountLimit);

/// Number of time maps that turn `t` into a time-dependent assembly tree.
/// Dynamic program over down-closed sets of internal nodes.
Natural count_level_assignments(const AssemblyTree& t);

/// Number of time-dependent assembly trees: sum of count_level_assignments
/// over enumerate_trees(g, rule).
Natural count_timed_trees(const Graph& g, GluingRule rule, int max_n = kDefaultEnumerationLimit);

/// Same count by dynamic programming over the frontier partitions P_1, P_2,
/// ...: each step merges disjoint groups of current blocks (at least one
/// group), and every merged group must be a legal node for `rule`. Reaches
/// larger graphs than the enumeration-based count.
Natural count_timed_trees_by_frontiers(const Graph& g, GluingRule rule,
                                       int max_n = kDefaultTimedCountLimit);

}  // namespace asmtree
