#include "reed/graph.hpp"

#include <string>

#include "reed/errors.hpp"

namespace reed {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices)
    throw ContractViolation("vertex count " + std::to_string(n) + " outside 0..64");
}

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n)
    throw ContractViolation("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
}

} // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n))
    throw ContractViolation("row count does not match vertex count");
  const std::uint64_t universe = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = rows[static_cast<std::size_t>(v)];
    if (row & ~universe) throw ContractViolation("adjacency bit above vertex count");
    if ((row >> v) & 1U) throw ContractViolation("loop at vertex " + std::to_string(v));
    for (Vertex w : VertexSet(row))
      if (!((rows[static_cast<std::size_t>(w)] >> v) & 1U))
        throw ContractViolation("asymmetric adjacency between " + std::to_string(v) + " and " +
                                std::to_string(w));
  }
  Graph g;
  g.n_ = n;
  g.rows_.assign(rows.begin(), rows.end());
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [v, w] : edges) {
    check_vertex(n, v);
    check_vertex(n, w);
    if (v == w) throw ContractViolation("loop at vertex " + std::to_string(v));
    g.rows_[static_cast<std::size_t>(v)] |= VertexSet::bit(w);
    g.rows_[static_cast<std::size_t>(w)] |= VertexSet::bit(v);
  }
  return g;
}

Graph Graph::complete(int n) { return complement(Graph(n)); }

Graph Graph::cycle(int n) {
  if (n < 3) throw ContractViolation("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return from_edges(n, edges);
}

Graph Graph::path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return from_edges(n, edges);
}

int Graph::size() const {
  int twice = 0;
  for (auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::is_clique(VertexSet s) const {
  for (Vertex v : s)
    if (!(s.without(v)).subset_of(neighbors(v))) return false;
  return true;
}

Graph Graph::with_edge(Vertex v, Vertex w) const {
  check_vertex(n_, v);
  check_vertex(n_, w);
  if (v == w) throw ContractViolation("loop at vertex " + std::to_string(v));
  Graph g = *this;
  g.rows_[static_cast<std::size_t>(v)] |= VertexSet::bit(w);
  g.rows_[static_cast<std::size_t>(w)] |= VertexSet::bit(v);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t universe = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v)
    rows[static_cast<std::size_t>(v)] = universe & ~g.rows()[static_cast<std::size_t>(v)] & ~VertexSet::bit(v);
  return Graph::from_rows(n, rows);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw ContractViolation("vertex set exceeds host graph");
  return relabel(g, s.to_vector());
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int k = static_cast<int>(perm.size());
  std::vector<std::uint64_t> rows(perm.size(), 0);
  for (int i = 0; i < k; ++i) {
    check_vertex(g.order(), perm[static_cast<std::size_t>(i)]);
    for (int j = 0; j < k; ++j)
      if (i != j && g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
        rows[static_cast<std::size_t>(i)] |= VertexSet::bit(j);
  }
  return Graph::from_rows(k, rows);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  check_order(n);
  std::vector<std::uint64_t> rows(a.rows().begin(), a.rows().end());
  for (auto row : b.rows()) rows.push_back(row << a.order());
  return Graph::from_rows(n, rows);
}

} // namespace reed
