#pragma once

#include <optional>
#include <string>

#include "asmtree/assembly_tree.hpp"
#include "asmtree/graph.hpp"
#include "asmtree/natural.hpp"

namespace asmtree::formulas {

// Closed forms and recursions for assembly-tree counts of the four graph
// families. Star functions take the total vertex count. Arguments outside a
// function's domain throw std::invalid_argument.
//
// Recursive sequences memoize across calls behind a mutex; concurrent callers
// see the same values as a cold computation would produce.

/// Ordered set partitions of [n]: sum_k k! S2(n, k); fubini(0) = 1.
Natural fubini(int n);
/// Plane trees with n leaves and no unary nodes (convolution DP).
Natural super_catalan(int n);

// Untimed, connected gluing rule.
Natural connected_star(int total);
Natural connected_path(int n);
/// Sum over compositions (i_1..i_k) of n with k >= 2 of i_1 * prod SC(i_j).
Natural connected_cycle(int n);
enum class CycleClosedForm { A, B };
/// A: sum_i C(n-2,i) C(n+i-1,i).  B: sum_k C(n-2,k) C(n-1,k+1) 2^k.
Natural connected_cycle_closed(int n, CycleClosedForm variant);
Natural connected_complete(int n);

// Time-dependent, connected gluing rule.
Natural td_connected_star(int total);
Natural td_connected_path(int n);
Natural td_connected_cycle(int n);
Natural td_connected_complete(int n);

// Time-dependent, edge gluing rule.
Natural td_edge_star(int total);
Natural td_edge_path(int n);
Natural td_edge_cycle(int n);
Natural td_edge_complete(int n);

struct SequenceSpec {
  Family family;
  GluingRule rule;
  bool timed = false;

  std::string str() const;
};

/// True when a formula exists for `spec` (connected rule: all four
/// families, plain and timed; edge rule: timed only).
bool has_formula(const SequenceSpec& spec);
/// Smallest n accepted by the formula for `spec`.
int min_index(const SequenceSpec& spec);
/// Formula value, or nullopt when no formula exists or n is below
/// min_index(spec).
std::optional<Natural> evaluate(const SequenceSpec& spec, int n);

}  // namespace asmtree::formulas
