// Serial vs OpenMP subset DP for count_trees.
#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "asmtree/count.hpp"
#include "asmtree/graph.hpp"

using namespace asmtree;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::stoi(argv[1]) : 14;
  std::printf("threads=%d n=%d\n", omp_get_max_threads(), n);
  std::printf("%-10s %-10s %12s %12s %s\n", "family", "rule", "serial_s", "parallel_s", "agree");
  int status = 0;
  for (Family fam : {Family::Star, Family::Path, Family::Cycle, Family::Complete}) {
    const Graph g = family_graph(fam, n);
    for (GluingRule rule : {GluingRule::None, GluingRule::Connected, GluingRule::Edge}) {
      Natural a, b;
      const double ts = seconds([&] { a = count_trees_serial(g, rule, n); });
      const double tp = seconds([&] { b = count_trees(g, rule, n); });
      const bool ok = a == b;
      if (!ok) status = 1;
      std::printf("%-10s %-10s %12.4f %12.4f %s\n", std::string(to_string(fam)).c_str(),
                  std::string(to_string(rule)).c_str(), ts, tp, ok ? "yes" : "NO");
    }
  }
  return status;
}
