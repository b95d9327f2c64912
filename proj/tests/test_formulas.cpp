#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

#include "asmtree/combinat.hpp"
#include "asmtree/count.hpp"
#include "asmtree/formulas.hpp"

using namespace asmtree;
using namespace asmtree::formulas;

namespace {

// Ordered set partitions of [n] by brute force over subsets.
Natural ordered_partitions(int n) {
  std::vector<Natural> f(std::size_t{1} << n, Natural(0));
  f[0] = 1;
  for (std::uint64_t s = 1; s < f.size(); ++s)
    for (std::uint64_t b = s; b != 0; b = (b - 1) & s) f[s] = f[s] + f[s ^ b];
  return f.back();
}

// Little Schroeder numbers from their three-term recurrence, shifted so that
// index n counts plane trees with n leaves.
std::vector<Natural> schroeder(int max_n) {
  using B = Natural::Backend;
  std::vector<B> a{1, 1};
  for (int m = 2; m < max_n; ++m) {
    B num = B(3 * (2 * m - 1)) * a[m - 1] - B(m - 2) * a[m - 2];
    a.push_back(num / (m + 1));
  }
  std::vector<Natural> out{Natural(0)};
  for (int n = 1; n <= max_n; ++n) out.push_back(Natural(a[n - 1]));
  return out;
}

Natural oracle(const SequenceSpec& s, int n) {
  const Graph g = family_graph(s.family, n);
  return s.timed ? count_timed_trees_by_frontiers(g, s.rule) : count_trees(g, s.rule);
}

const std::vector<Family> kFamilies{Family::Star, Family::Path, Family::Cycle, Family::Complete};

}  // namespace

// Runs first so the memo tables start cold here.
TEST_CASE("concurrent cold evaluation matches sequential recomputation") {
  std::vector<int> ns;
  for (int n = 1; n <= 40; ++n) ns.push_back(n);
  std::vector<std::vector<std::string>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      std::vector<int> order = ns;
      std::shuffle(order.begin(), order.end(), std::mt19937(t));
      std::vector<std::string> row(41 * 4);
      for (int n : order) {
        row[n * 4 + 0] = super_catalan(n).str();
        row[n * 4 + 1] = td_connected_complete(n).str();
        row[n * 4 + 2] = td_edge_cycle(n).str();
        row[n * 4 + 3] = fubini(n).str();
      }
      seen[t] = row;
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
  const auto sc = schroeder(40);
  for (int n = 1; n <= 40; ++n) {
    CHECK(seen[0][n * 4] == sc[n].str());
    CHECK(seen[0][n * 4 + 1] == td_connected_complete(n).str());
  }
}

TEST_CASE("known values") {
  const std::vector<int> sc{1, 1, 3, 11, 45, 197, 903, 4279};
  for (int n = 1; n <= 8; ++n) CHECK(super_catalan(n) == sc[n - 1]);
  const std::vector<int> fb{1, 1, 3, 13, 75, 541, 4683, 47293};
  for (int n = 0; n <= 7; ++n) CHECK(fubini(n) == fb[n]);
  CHECK(connected_star(3) == 3);
  CHECK(connected_cycle(3) == 4);
  CHECK(connected_cycle(4) == 19);
  CHECK(connected_complete(4) == 26);
  CHECK(td_connected_cycle(3) == 4);
  CHECK(td_connected_complete(3) == 4);
  CHECK(td_edge_path(4) == 7);
  CHECK(td_edge_cycle(3) == 3);
  CHECK(td_edge_complete(3) == 3);
  CHECK(td_edge_complete(4) == 21);
  CHECK(td_edge_star(5) == 24);
}

TEST_CASE("domains") {
  CHECK_THROWS_AS(connected_star(1), std::invalid_argument);
  CHECK_THROWS_AS(td_edge_star(1), std::invalid_argument);
  CHECK_THROWS_AS(connected_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(super_catalan(0), std::invalid_argument);
  CHECK(td_connected_cycle(1) == 1);
  CHECK(td_connected_cycle(2) == 1);
  CHECK_FALSE(has_formula({Family::Path, GluingRule::Edge, false}));
  CHECK_FALSE(has_formula({Family::Path, GluingRule::None, true}));
  CHECK(has_formula({Family::Path, GluingRule::Edge, true}));
  CHECK_FALSE(evaluate({Family::Cycle, GluingRule::Connected, false}, 2).has_value());
  CHECK(evaluate({Family::Cycle, GluingRule::Connected, true}, 2) == Natural(1));
  CHECK_FALSE(evaluate({Family::Star, GluingRule::Edge, false}, 5).has_value());
}

TEST_CASE("star and path counts match independent brute force") {
  for (int total = 2; total <= 8; ++total) CHECK(connected_star(total) == ordered_partitions(total - 1));
  const auto sc = schroeder(25);
  for (int n = 1; n <= 25; ++n) CHECK(connected_path(n) == sc[n]);
}

TEST_CASE("cycle closed forms agree with the composition sum") {
  for (int n = 3; n <= 20; ++n) {
    CHECK(connected_cycle_closed(n, CycleClosedForm::A) == connected_cycle(n));
    CHECK(connected_cycle_closed(n, CycleClosedForm::B) == connected_cycle(n));
  }
}

TEST_CASE("every formula equals the subset-DP oracle") {
  for (Family fam : kFamilies) {
    for (GluingRule rule : {GluingRule::Connected, GluingRule::Edge}) {
      for (bool timed : {false, true}) {
        const SequenceSpec spec{fam, rule, timed};
        if (!has_formula(spec)) continue;
        int max_n = timed ? 8 : 9;
        if (fam == Family::Complete) max_n = 7;
        for (int n = std::max(min_index(spec), fam == Family::Cycle ? 3 : 1); n <= max_n; ++n) {
          CAPTURE(spec.str());
          CAPTURE(n);
          CHECK(evaluate(spec, n) == oracle(spec, n));
        }
      }
    }
  }
}

TEST_CASE("complete graph counts equal the rule-none counts") {
  for (int n = 1; n <= 7; ++n) CHECK(connected_complete(n) == count_trees(complete(n), GluingRule::None));
  for (int n = 1; n <= 6; ++n)
    CHECK(td_connected_complete(n) == count_timed_trees(complete(n), GluingRule::None));
}
