#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "reed/graph.hpp"

namespace reed {

/// Total-order key identifying an isomorphism class: the vertex count followed by the
/// column-order upper-triangle adjacency bits of the canonical relabelling, packed
/// most-significant-bit first.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.bytes <=> b.bytes; }
};

/// Code of g under its own labelling (no canonicalisation).
CanonicalCode labelled_code(const Graph& g);

/// Canonical labelling: result[i] is the vertex of g placed at position i.
///
/// Search is individualisation-refinement: colour refinement to an equitable ordered
/// partition, then branching on the first non-singleton cell, keeping the leaf with the
/// smallest labelled code. Twin vertices in a target cell are interchangeable by an
/// automorphism fixing the branch, so only one of them is expanded.
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace reed
