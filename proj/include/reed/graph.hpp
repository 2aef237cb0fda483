#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace reed {

using Vertex = int;

/// A set of vertex indices 0..63 packed into one machine word.
class VertexSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= bit(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  Vertex lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64), stored as bit rows.
class Graph {
public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Validates symmetry, loop-freeness and that no bit at or above n is set.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  /// N(v) together with v itself.
  VertexSet closed_neighbors(Vertex v) const { return neighbors(v).with(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex v, Vertex w) const { return neighbors(v).contains(w); }
  std::span<const std::uint64_t> rows() const { return rows_; }

  /// True iff the vertex set induces a complete graph.
  bool is_clique(VertexSet s) const;

  Graph with_edge(Vertex v, Vertex w) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Edge vw present iff v != w and vw absent in g.
Graph complement(const Graph& g);

/// Vertices of s relabelled 0..|s|-1 in increasing index order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Relabels g so that vertex perm[i] of g becomes vertex i of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union with b's vertices placed after a's.
Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace reed
