#include "asmtree/formulas.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmtree/combinat.hpp"

namespace asmtree::formulas {

using combinat::binomial;
using combinat::factorial;
using combinat::stirling2;

namespace {

void require(bool ok, const char* fn, int n, const char* domain) {
  if (!ok) {
    throw std::invalid_argument(std::string(fn) + ": n=" + std::to_string(n) + " outside domain " +
                                domain);
  }
}

/// Values a(first), a(first+1), ... extended on demand. `next(n, values)`
/// computes a(n) from the already-known prefix (values[i] = a(first + i)).
class MemoSequence {
public:
  using Step = std::function<Natural(int, const std::vector<Natural>&)>;

  MemoSequence(int first, Step next) : first_(first), next_(std::move(next)) {}

  Natural at(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= n - first_) {
      values_.push_back(next_(first_ + static_cast<int>(values_.size()), values_));
    }
    return values_[n - first_];
  }

private:
  int first_;
  Step next_;
  std::mutex mutex_;
  std::vector<Natural> values_;
};

// compositions_sc(m) = sum over compositions of m (>= 1 part) of prod SC(part)
MemoSequence& compositions_sc() {
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) {
    Natural total = super_catalan(m);
    for (int first = 1; first < m; ++first) total += super_catalan(first) * prev[m - first - 1];
    return total;
  });
  return seq;
}

}  // namespace

Natural fubini(int n) {
  require(n >= 0, "fubini", n, "n >= 0");
  if (n == 0) return 1;
  Natural total = 0;
  for (int k = 1; k <= n; ++k) total += factorial(k) * stirling2(n, k);
  return total;
}

Natural super_catalan(int n) {
  require(n >= 1, "super_catalan", n, "n >= 1");
  // forests[m] = ordered forests of >= 1 such trees with m leaves in total
  struct State {
    std::mutex mutex;
    std::vector<Natural> trees{0, 1};
    std::vector<Natural> forests{0, 1};
  };
  static State state;
  std::lock_guard lock(state.mutex);
  for (int m = static_cast<int>(state.trees.size()); m <= n; ++m) {
    // root with >= 2 subtrees: first subtree has p leaves, the rest form a forest
    Natural t = 0;
    for (int p = 1; p < m; ++p) t += state.trees[p] * state.forests[m - p];
    Natural f = t;
    for (int p = 1; p < m; ++p) f += state.trees[p] * state.forests[m - p];
    state.trees.push_back(t);
    state.forests.push_back(f);
  }
  return state.trees[n];
}

Natural connected_star(int total) {
  require(total >= 2, "connected_star", total, "total >= 2");
  return fubini(total - 1);
}

Natural connected_path(int n) {
  require(n >= 1, "connected_path", n, "n >= 1");
  return super_catalan(n);
}

Natural connected_cycle(int n) {
  require(n >= 3, "connected_cycle", n, "n >= 3");
  // first part i_1 in [1, n-1], remaining parts form any composition of n - i_1
  Natural total = 0;
  for (int first = 1; first < n; ++first) {
    total += Natural(static_cast<std::uint64_t>(first)) * super_catalan(first) *
             compositions_sc().at(n - first);
  }
  return total;
}

Natural connected_cycle_closed(int n, CycleClosedForm variant) {
  require(n >= 3, "connected_cycle_closed", n, "n >= 3");
  Natural total = 0;
  if (variant == CycleClosedForm::A) {
    for (int i = 0; i <= n - 2; ++i) total += binomial(n - 2, i) * binomial(n + i - 1, i);
  } else {
    Natural power = 1;
    for (int k = 0; k <= n - 2; ++k) {
      total += binomial(n - 2, k) * binomial(n - 1, k + 1) * power;
      power *= 2;
    }
  }
  return total;
}

Natural connected_complete(int n) {
  require(n >= 1, "connected_complete", n, "n >= 1");
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) -> Natural {
    if (m == 1) return 1;
    Natural total = 0;
    for (int k = 2; k <= m; ++k) {
      combinat::for_each_partition(m, k, [&](const combinat::Partition& lambda) {
        Natural symmetry = 1;
        for (int i = 1; i <= m; ++i) symmetry *= factorial(combinat::multiplicity(lambda, i));
        Natural term = combinat::multinomial(lambda.parts).divide_exact(symmetry);
        for (int part : lambda.parts) term *= prev[part - 1];
        total += term;
      });
    }
    return total;
  });
  return seq.at(n);
}

Natural td_connected_star(int total) {
  require(total >= 2, "td_connected_star", total, "total >= 2");
  return fubini(total - 1);
}

Natural td_connected_path(int n) {
  require(n >= 1, "td_connected_path", n, "n >= 1");
  return fubini(n - 1);
}

Natural td_connected_cycle(int n) {
  require(n >= 1, "td_connected_cycle", n, "n >= 1");
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) -> Natural {
    if (m <= 2) return 1;
    Natural total = 1;
    for (int j = 2; j <= m - 1; ++j) total += binomial(m, j) * prev[j - 1];
    return total;
  });
  return seq.at(n);
}

Natural td_connected_complete(int n) {
  require(n >= 1, "td_connected_complete", n, "n >= 1");
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) -> Natural {
    if (m <= 2) return 1;
    Natural total = 0;
    for (int j = 1; j <= m - 1; ++j) total += stirling2(m, j) * prev[j - 1];
    return total;
  });
  return seq.at(n);
}

Natural td_edge_star(int total) {
  require(total >= 2, "td_edge_star", total, "total >= 2");
  return factorial(total - 1);
}

Natural td_edge_path(int n) {
  require(n >= 1, "td_edge_path", n, "n >= 1");
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) -> Natural {
    if (m <= 2) return 1;
    Natural total = 0;
    for (int j = 1; j <= m / 2; ++j) total += binomial(m - j, m - 2 * j) * prev[m - j - 1];
    return total;
  });
  return seq.at(n);
}

Natural td_edge_cycle(int n) {
  require(n >= 1, "td_edge_cycle", n, "n >= 1");
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) -> Natural {
    if (m <= 2) return 1;
    Natural total = 0;
    for (int j = 1; j <= m / 2; ++j) {
      total += (binomial(m - j, m - 2 * j) + binomial(m - j - 1, m - 2 * j)) * prev[m - j - 1];
    }
    return total;
  });
  return seq.at(n);
}

Natural td_edge_complete(int n) {
  require(n >= 1, "td_edge_complete", n, "n >= 1");
  static MemoSequence seq(1, [](int m, const std::vector<Natural>& prev) -> Natural {
    if (m <= 2) return 1;
    Natural total = 0;
    Natural power_of_two = 1;
    for (int i = 1; i <= m / 2; ++i) {
      power_of_two *= 2;
      // matchings with i edges in K_m
      Natural matchings = factorial(m).divide_exact(power_of_two * factorial(i) * factorial(m - 2 * i));
      total += matchings * prev[m - i - 1];
    }
    return total;
  });
  return seq.at(n);
}

std::string SequenceSpec::str() const {
  return std::string(to_string(family)) + "/" + std::string(to_string(rule)) +
         (timed ? "/timed" : "");
}

bool has_formula(const SequenceSpec& spec) {
  if (spec.rule == GluingRule::Connected) return true;
  if (spec.rule == GluingRule::Edge) return spec.timed;
  return false;
}

int min_index(const SequenceSpec& spec) {
  switch (spec.family) {
    case Family::Star: return 2;
    case Family::Cycle: return spec.timed ? 1 : 3;
    case Family::Path:
    case Family::Complete: return 1;
  }
  return 1;
}

std::optional<Natural> evaluate(const SequenceSpec& spec, int n) {
  if (!has_formula(spec) || n < min_index(spec)) return std::nullopt;
  const bool edge = spec.rule == GluingRule::Edge;
  switch (spec.family) {
    case Family::Star:
      return edge ? td_edge_star(n) : spec.timed ? td_connected_star(n) : connected_star(n);
    case Family::Path:
      return edge ? td_edge_path(n) : spec.timed ? td_connected_path(n) : connected_path(n);
    case Family::Cycle:
      return edge ? td_edge_cycle(n) : spec.timed ? td_connected_cycle(n) : connected_cycle(n);
    case Family::Complete:
      return edge ? td_edge_complete(n)
                  : spec.timed ? td_connected_complete(n) : connected_complete(n);
  }
  return std::nullopt;
}

}  // namespace asmtree::formulas
