#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace asmtree {

/// Subset of {1..64}; vertex v occupies bit v-1.
class VertexSet {
public:
  static constexpr int kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  /// {1..n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << (v - 1)); }
  static VertexSet of(const std::vector<int>& vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return 64 - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }

  std::vector<int> members() const;
  /// "{1,3,5}"
  std::string str() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Orders by minimum element first, then by bit pattern; this is the
  /// canonical sibling order used throughout.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    if (a.empty() || b.empty()) return a.bits_ <=> b.bits_;
    if (a.min() != b.min()) return a.min() <=> b.min();
    return a.bits_ <=> b.bits_;
  }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace asmtree
