#pragma once

#include <vector>

#include "reed/graph.hpp"

namespace reed {

struct InvariantBundle {
  int n = 0;
  int m = 0;
  int delta = 0;
  int omega = 0;
  int chi = 0;
  int alpha = 0;
  int reed_bound = 0;
  /// reed_bound - chi; negative only for a counterexample to Reed's bound.
  int slack = 0;

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

int max_degree(const Graph& g);

/// A maximum clique, found by branch and bound with greedy-colouring bounds.
VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);

/// Colour vector of a minimum proper colouring (colours 0..chi-1).
std::vector<int> minimum_coloring(const Graph& g);
int chromatic_number(const Graph& g);

/// Decides k-colourability; on success the colouring is written to out.
bool is_k_colorable(const Graph& g, int k, std::vector<int>* out = nullptr);

int independence_number(const Graph& g);

/// ceil((delta + omega + 1) / 2).
constexpr int reed_bound(int delta, int omega) { return (delta + omega + 2) / 2; }

InvariantBundle invariant_bundle(const Graph& g);

} // namespace reed
