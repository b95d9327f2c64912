#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "asmtree/vertex_set.hpp"

namespace asmtree {

/// Simple undirected graph on vertices 1..n, n <= 64. Immutable once built.
class Graph {
public:
  using Edge = std::pair<int, int>;

  /// Throws std::invalid_argument on loops, out-of-range endpoints or n
  /// outside [1, 64]. Duplicate edges collapse.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adjacency_[v - 1]; }
  bool adjacent(int u, int v) const { return adjacency_[u - 1].contains(v); }
  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// True iff `s` induces a connected subgraph. Throws on empty `s`.
  bool is_connected_induced(VertexSet s) const;
  /// True iff some edge joins `a` and `b`. Throws unless both are nonempty
  /// and disjoint.
  bool has_crossing_edge(VertexSet a, VertexSet b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_;
  std::vector<VertexSet> adjacency_;
};

// Graph families. The star center (label 0 in the usual drawing) is vertex 1
// and the leaves are 2..total.
Graph star(int total);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// Spine 1..spine, then legs[i] pendant vertices on spine vertex i+1, in
/// spine order.
Graph caterpillar(int spine, const std::vector<int>& legs);

/// The four families with counting formulas.
enum class Family { Star, Path, Cycle, Complete };

std::string_view to_string(Family f);
/// "star", "path", "cycle", "complete"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);
/// Member of `f` on n vertices (for stars, n is the total vertex count).
Graph family_graph(Family f, int n);

}  // namespace asmtree
