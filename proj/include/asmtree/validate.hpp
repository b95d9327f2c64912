#pragma once

#include <string>
#include <vector>

#include "asmtree/assembly_tree.hpp"
#include "asmtree/graph.hpp"

namespace asmtree {

/// Outcome of a validity audit. Each reason is "<code>: <detail>", where code
/// is one of: bad-child-index, not-a-tree, root-label, unary-node,
/// overlapping-children, union-mismatch, leaf-label, leaf-count,
/// disconnected-label, edge-arity, no-gluing-edge, time-count, leaf-time,
/// root-time, time-order, time-gap.
struct Validation {
  std::vector<std::string> reasons;

  bool ok() const { return reasons.empty(); }
  explicit operator bool() const { return ok(); }
  bool has(const std::string& code) const;
};

/// Checks the assembly tree axioms plus the gluing rule. Written
/// independently of the enumerators so it can audit their output.
Validation validate(const Graph& g, const AssemblyTree& t, GluingRule rule);

/// validate() plus the timing axioms: leaves at 0, child times strictly below
/// parent times, root time m with 1 <= m <= n-1, every level 0..m occupied.
/// The one-vertex graph admits only the bare leaf at time 0.
Validation validate(const Graph& g, const TimedAssemblyTree& t, GluingRule rule);

}  // namespace asmtree
