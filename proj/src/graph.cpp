#include "asmtree/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace asmtree {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::of(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string VertexSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 1 || n > VertexSet::kMaxVertices) {
    throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
  }
  adjacency_.assign(n, VertexSet());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adjacency_[u - 1].insert(v);
    adjacency_[v - 1].insert(u);
  }
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v : adjacency_[u - 1].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected_induced(VertexSet s) const {
  if (s.empty()) throw std::invalid_argument("is_connected_induced: empty vertex set");
  VertexSet seen = VertexSet::singleton(s.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.members()) next |= adjacency_[v - 1];
    next = (next & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

bool Graph::has_crossing_edge(VertexSet a, VertexSet b) const {
  if (a.empty() || b.empty()) throw std::invalid_argument("has_crossing_edge: empty side");
  if (!a.disjoint(b)) throw std::invalid_argument("has_crossing_edge: overlapping sides");
  for (int v : a.members()) {
    if (!(adjacency_[v - 1] & b).empty()) return true;
  }
  return false;
}

Graph star(int total) {
  if (total < 2) throw std::invalid_argument("star needs at least 2 vertices");
  std::vector<Graph::Edge> edges;
  for (int leaf = 2; leaf <= total; ++leaf) edges.emplace_back(1, leaf);
  return Graph(total, edges);
}

Graph path(int n) {
  std::vector<Graph::Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Graph::Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph caterpillar(int spine, const std::vector<int>& legs) {
  if (spine < 1) throw std::invalid_argument("caterpillar spine must be positive");
  if (static_cast<int>(legs.size()) != spine) {
    throw std::invalid_argument("caterpillar: expected " + std::to_string(spine) +
                                " leg counts, got " + std::to_string(legs.size()));
  }
  std::vector<Graph::Edge> edges;
  for (int i = 1; i < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine + 1;
  for (int i = 0; i < spine; ++i) {
    if (legs[i] < 0) throw std::invalid_argument("caterpillar: negative leg count");
    for (int j = 0; j < legs[i]; ++j) edges.emplace_back(i + 1, next++);
  }
  return Graph(next - 1, edges);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "star") return Family::Star;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

Graph family_graph(Family f, int n) {
  switch (f) {
    case Family::Star: return star(n);
    case Family::Path: return path(n);
    case Family::Cycle: return cycle(n);
    case Family::Complete: return complete(n);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace asmtree
