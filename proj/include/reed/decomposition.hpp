#pragma once

#include <vector>

#include "reed/coloring.hpp"
#include "reed/graph.hpp"

namespace reed {

/// Neighbours of an apex u whose colour occurs exactly once in N(u), split into those
/// adjacent to every other such neighbour (s) and the rest (t).
struct UniqueColorDecomposition {
  Vertex u = 0;
  VertexSet r;
  VertexSet s;
  VertexSet t;
};

UniqueColorDecomposition unique_color_neighbors(const Graph& g, const Coloring& c, Vertex u);

/// Vertices x' outside N[u] adjacent to some x in t that has a non-neighbour y in t with
/// the colour of x'. Every qualifying vertex is included.
VertexSet derive_t_prime(const Graph& g, const Coloring& c, const UniqueColorDecomposition& d);

struct SequenceLevel {
  VertexSet s;
  VertexSet s_prime;

  friend bool operator==(const SequenceLevel&, const SequenceLevel&) = default;
};

/// levels[0] = (t, t'); level l >= 1 takes the unused vertices of s with a non-neighbour in
/// the previous substitute set, and as substitutes the vertices outside N[u] that share a
/// colour with such a vertex and are adjacent to its non-neighbour. Iteration stops at the
/// first empty level or empty substitute set; w is s minus all recorded levels.
struct SequenceDecomposition {
  UniqueColorDecomposition base;
  std::vector<SequenceLevel> levels;
  VertexSet w;

  /// Index of the last recorded level.
  int k() const { return static_cast<int>(levels.size()) - 1; }
  VertexSet all_substitutes() const;
};

SequenceDecomposition build_sequence(const Graph& g, const Coloring& c, Vertex u);

} // namespace reed
