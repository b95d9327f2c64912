#include "asmtree/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asmtree::combinat {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Natural factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Natural r = 1;
  for (int i = 2; i <= n; ++i) r *= Natural(static_cast<std::uint64_t>(i));
  return r;
}

Natural binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // r = C(n-k+i, i) after step i; each intermediate division is exact
  Natural::Backend r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Natural(r);
}

Natural multinomial(std::span<const int> parts) {
  Natural r = 1;
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

Natural stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;  // k == 0 here
  if (k == 0) return 0;
  // row-by-row triangle: S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<Natural> row(k + 1, Natural(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = Natural(static_cast<std::uint64_t>(j)) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

namespace {

void partitions_rec(int remaining, int slots, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
  if (slots == 0) {
    if (remaining == 0) visit(Partition{prefix});
    return;
  }
  // each remaining slot needs at least 1, and none may exceed max_part
  int hi = std::min(max_part, remaining - (slots - 1));
  for (int p = hi; p >= 1; --p) {
    if (p * slots < remaining) break;
    prefix.push_back(p);
    partitions_rec(remaining - p, slots - 1, p, prefix, visit);
    prefix.pop_back();
  }
}

void compositions_rec(int remaining, int slots, std::vector<int>& prefix,
                      const std::function<void(const Composition&)>& visit) {
  if (slots == 0) {
    if (remaining == 0) visit(Composition{prefix});
    return;
  }
  for (int p = 1; p <= remaining - (slots - 1); ++p) {
    prefix.push_back(p);
    compositions_rec(remaining - p, slots - 1, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, int k, const std::function<void(const Partition&)>& visit) {
  if (k < 1 || k > n) return;
  std::vector<int> prefix;
  prefix.reserve(k);
  partitions_rec(n, k, n, prefix, visit);
}

std::vector<Partition> partitions(int n, int k) {
  std::vector<Partition> out;
  for_each_partition(n, k, [&](const Partition& p) { out.push_back(p); });
  return out;
}

int multiplicity(const Partition& lambda, int i) {
  return static_cast<int>(std::count(lambda.parts.begin(), lambda.parts.end(), i));
}

void for_each_composition(int n, int min_parts,
                          const std::function<void(const Composition&)>& visit) {
  std::vector<int> prefix;
  for (int k = std::max(min_parts, 1); k <= n; ++k) compositions_rec(n, k, prefix, visit);
}

Natural count_compositions_1_2(int n, int k) {
  if (n < 1 || k < 1 || k > n || 2 * k < n) return 0;
  return binomial(k, 2 * k - n);
}

}  // namespace asmtree::combinat
