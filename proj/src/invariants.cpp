#include "reed/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "reed/errors.hpp"

namespace reed {

namespace {

// Number of colour classes in a first-fit colouring of cand; an upper bound on the
// clique number of the subgraph induced by cand.
int greedy_class_count(const Graph& g, VertexSet cand) {
  int classes = 0;
  while (!cand.empty()) {
    VertexSet open = cand;
    while (!open.empty()) {
      const Vertex v = open.lowest();
      cand = cand.without(v);
      open = open.without(v) - g.neighbors(v);
    }
    ++classes;
  }
  return classes;
}

class CliqueSearch {
public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

private:
  void expand(VertexSet clique, VertexSet cand) {
    if (cand.empty()) {
      if (clique.size() > best_.size()) best_ = clique;
      return;
    }
    if (clique.size() + greedy_class_count(g_, cand) <= best_.size()) return;
    Vertex pivot = cand.lowest();
    int pivot_degree = -1;
    for (Vertex v : cand) {
      const int d = (g_.neighbors(v) & cand).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    expand(clique.with(pivot), cand & g_.neighbors(pivot));
    expand(clique, cand.without(pivot));
  }

  const Graph& g_;
  VertexSet best_;
};

// Backtracking k-colouring over a fixed vertex order. A vertex may open a new colour
// only if it is the lowest-positioned vertex still uncoloured, i.e. colour classes are
// introduced in order.
class ColoringSearch {
public:
  ColoringSearch(const Graph& g, int k, std::vector<Vertex> order)
      : g_(g), k_(k), order_(std::move(order)), colors_(static_cast<std::size_t>(g.order()), -1) {}

  bool run() { return place(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

private:
  bool place(std::size_t pos, int used) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    std::uint64_t blocked = 0;
    for (Vertex w : g_.neighbors(v))
      if (colors_[static_cast<std::size_t>(w)] >= 0) blocked |= std::uint64_t{1} << colors_[static_cast<std::size_t>(w)];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1U) continue;
      colors_[static_cast<std::size_t>(v)] = c;
      if (place(pos + 1, std::max(used, c + 1))) return true;
    }
    colors_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<int> colors_;
};

// Maximum-clique vertices first, then the rest by decreasing degree.
std::vector<Vertex> coloring_order(const Graph& g) {
  const VertexSet clique = maximum_clique(g);
  std::vector<Vertex> order = clique.to_vector();
  std::vector<Vertex> rest = (g.vertices() - clique).to_vector();
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

} // namespace

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

bool is_k_colorable(const Graph& g, int k, std::vector<int>* out) {
  if (k < 0) throw ContractViolation("negative colour count");
  if (g.order() == 0) {
    if (out) out->clear();
    return true;
  }
  if (k == 0) return false;
  ColoringSearch search(g, k, coloring_order(g));
  if (!search.run()) return false;
  if (out) *out = search.colors();
  return true;
}

std::vector<int> minimum_coloring(const Graph& g) {
  std::vector<int> colors;
  for (int k = clique_number(g);; ++k)
    if (is_k_colorable(g, k, &colors)) return colors;
}

int chromatic_number(const Graph& g) {
  const auto colors = minimum_coloring(g);
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

InvariantBundle invariant_bundle(const Graph& g) {
  InvariantBundle b;
  b.n = g.order();
  b.m = g.size();
  b.delta = max_degree(g);
  b.omega = clique_number(g);
  b.chi = chromatic_number(g);
  b.alpha = independence_number(g);
  b.reed_bound = reed_bound(b.delta, b.omega);
  b.slack = b.reed_bound - b.chi;
  return b;
}

} // namespace reed
