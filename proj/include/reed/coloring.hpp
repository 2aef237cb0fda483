#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "reed/graph.hpp"

namespace reed {

/// Vertex colouring with a palette of color_count colours 0..color_count-1.
///
/// Every entry lies inside the palette. A Kempe swap can empty a colour class, so the
/// colours actually used are not required to be contiguous.
class Coloring {
public:
  Coloring() = default;
  Coloring(std::vector<int> colors, int color_count);

  /// Palette size taken as max colour + 1.
  static Coloring from_colors(std::vector<int> colors);

  int operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  int color_count() const { return color_count_; }
  std::size_t size() const { return colors_.size(); }
  std::span<const int> colors() const { return colors_; }

  VertexSet color_class(int color) const;

  /// Relabels colour classes in order of their least vertex.
  Coloring canonical() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

private:
  std::vector<int> colors_;
  int color_count_ = 0;
};

/// True iff no edge is monochromatic. The colouring must cover every vertex of g.
bool is_proper(const Graph& g, const Coloring& c);

/// First-fit along order, which must be a permutation of g's vertices.
Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order);

struct ColoringEnumeration {
  std::vector<Coloring> colorings;
  bool truncated = false;
};

/// Every proper colouring with exactly chi(g) colours, one per colour permutation class
/// (classes numbered by least vertex), in lexicographic order of the colour vector.
/// Stops after cap colourings and sets the truncation flag. Requires g.order() <= 10.
ColoringEnumeration enumerate_optimal_colorings(const Graph& g, std::size_t cap);

/// Component of start in the subgraph induced by the colours {c[start], other}.
VertexSet kempe_component(const Graph& g, const Coloring& c, Vertex start, int other);

/// Exchanges the two colours inside component. The component must be closed under
/// adjacency between vertices of the pair and carry only those two colours.
Coloring kempe_swap(const Graph& g, const Coloring& c, VertexSet component, std::pair<int, int> pair);

/// Alternating path t - v - w - t' with v coloured like t' and w coloured like t.
struct BicolorPath {
  std::array<Vertex, 4> vertices{};
  /// (colour of t, colour of t')
  std::pair<int, int> colors{};
};

/// Least (v, w) in lexicographic order. Requires t, t' non-adjacent with distinct colours.
std::optional<BicolorPath> find_bicolor_path4(const Graph& g, const Coloring& c, Vertex t, Vertex t_prime);

} // namespace reed
