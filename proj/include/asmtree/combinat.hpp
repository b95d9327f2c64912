#pragma once

#include <functional>
#include <span>
#include <vector>

#include "asmtree/natural.hpp"

namespace asmtree::combinat {

/// Integer partition: parts weakly decreasing, all positive.
struct Partition {
  std::vector<int> parts;

  int n() const;
  int k() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Ordered list of positive parts.
struct Composition {
  std::vector<int> parts;

  int n() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

Natural factorial(int n);

/// C(n, k); zero outside 0 <= k <= n.
Natural binomial(int n, int k);

/// (sum parts)! / prod parts[i]!
Natural multinomial(std::span<const int> parts);

/// Stirling numbers of the second kind; S2(0,0) = 1, zero outside the triangle.
Natural stirling2(int n, int k);

/// Calls `visit` for every partition of n into exactly k parts, in
/// reverse-lexicographic order. Nothing is visited unless 1 <= k <= n.
void for_each_partition(int n, int k, const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions(int n, int k);

/// Number of parts of `lambda` equal to i.
int multiplicity(const Partition& lambda, int i);

/// Calls `visit` for every composition of n with at least `min_parts` parts,
/// ordered by number of parts, then lexicographically.
void for_each_composition(int n, int min_parts,
                          const std::function<void(const Composition&)>& visit);

/// Number of compositions of n into k parts drawn from {1, 2}.
Natural count_compositions_1_2(int n, int k);

}  // namespace asmtree::combinat
