#include "reed/decomposition.hpp"

#include "reed/errors.hpp"

namespace reed {

namespace {

void check_instance(const Graph& g, const Coloring& c, Vertex u) {
  if (c.size() != static_cast<std::size_t>(g.order())) throw ContractViolation("colouring size does not match vertex count");
  if (u < 0 || u >= g.order()) throw ContractViolation("apex outside the graph");
}

// Vertices outside N[u] coloured like some x in `from` and adjacent to a non-neighbour of x in `against`.
VertexSet substitutes(const Graph& g, const Coloring& c, Vertex u, VertexSet from, VertexSet against) {
  const VertexSet outside = g.vertices() - g.closed_neighbors(u);
  VertexSet out;
  for (Vertex x : from) {
    const VertexSet same = c.color_class(c[x]) & outside;
    for (Vertex y : against.without(x) - g.neighbors(x)) out |= same & g.neighbors(y);
  }
  return out;
}

} // namespace

UniqueColorDecomposition unique_color_neighbors(const Graph& g, const Coloring& c, Vertex u) {
  check_instance(g, c, u);
  UniqueColorDecomposition d;
  d.u = u;
  const VertexSet nbrs = g.neighbors(u);
  for (Vertex x : nbrs)
    if ((c.color_class(c[x]) & nbrs).size() == 1) d.r = d.r.with(x);
  for (Vertex x : d.r) {
    if (d.r.without(x).subset_of(g.neighbors(x)))
      d.s = d.s.with(x);
    else
      d.t = d.t.with(x);
  }
  return d;
}

VertexSet derive_t_prime(const Graph& g, const Coloring& c, const UniqueColorDecomposition& d) {
  // x' adjacent to x and coloured like y, for non-adjacent x, y in t; equivalently x' is
  // coloured like y and adjacent to a non-neighbour x of y.
  return substitutes(g, c, d.u, d.t, d.t);
}

VertexSet SequenceDecomposition::all_substitutes() const {
  VertexSet out;
  for (const auto& level : levels) out |= level.s_prime;
  return out;
}

SequenceDecomposition build_sequence(const Graph& g, const Coloring& c, Vertex u) {
  check_instance(g, c, u);
  SequenceDecomposition seq;
  seq.base = unique_color_neighbors(g, c, u);
  seq.levels.push_back({seq.base.t, derive_t_prime(g, c, seq.base)});

  VertexSet remaining = seq.base.s;
  while (true) {
    const VertexSet previous = seq.levels.back().s_prime;
    VertexSet level;
    for (Vertex x : remaining)
      if (!(previous - g.neighbors(x)).empty()) level = level.with(x);
    if (level.empty()) break;
    const VertexSet level_prime = substitutes(g, c, u, level, previous);
    if (level_prime.empty()) break;
    seq.levels.push_back({level, level_prime});
    remaining -= level;
  }
  seq.w = remaining;
  return seq;
}

} // namespace reed
