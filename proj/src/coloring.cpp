#include "reed/coloring.hpp"

#include <algorithm>
#include <string>

#include "reed/errors.hpp"
#include "reed/invariants.hpp"

namespace reed {

Coloring::Coloring(std::vector<int> colors, int color_count)
    : colors_(std::move(colors)), color_count_(color_count) {
  if (colors_.size() > static_cast<std::size_t>(Graph::kMaxVertices))
    throw ContractViolation("colouring covers more than 64 vertices");
  for (int c : colors_)
    if (c < 0 || c >= color_count_)
      throw ContractViolation("colour " + std::to_string(c) + " outside palette of " + std::to_string(color_count_));
}

Coloring Coloring::from_colors(std::vector<int> colors) {
  const int count = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  return Coloring(std::move(colors), count);
}

VertexSet Coloring::color_class(int color) const {
  VertexSet s;
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] == color) s = s.with(static_cast<Vertex>(v));
  return s;
}

Coloring Coloring::canonical() const {
  std::vector<int> relabel(static_cast<std::size_t>(color_count_), -1);
  std::vector<int> out(colors_.size());
  int next = 0;
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    int& r = relabel[static_cast<std::size_t>(colors_[v])];
    if (r < 0) r = next++;
    out[v] = r;
  }
  return Coloring(std::move(out), color_count_);
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(g.order()))
    throw ContractViolation("colouring size does not match vertex count");
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v))
      if (w > v && c[v] == c[w]) return false;
  return true;
}

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (order.size() != static_cast<std::size_t>(n)) throw ContractViolation("order is not a permutation");
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  VertexSet seen;
  int used = 0;
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen.contains(v)) throw ContractViolation("order is not a permutation");
    seen = seen.with(v);
    std::uint64_t blocked = 0;
    for (Vertex w : g.neighbors(v))
      if (colors[static_cast<std::size_t>(w)] >= 0) blocked |= std::uint64_t{1} << colors[static_cast<std::size_t>(w)];
    const int c = std::countr_one(blocked);
    colors[static_cast<std::size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return Coloring(std::move(colors), used);
}

namespace {

class OptimalEnumerator {
public:
  OptimalEnumerator(const Graph& g, int k, std::size_t cap)
      : g_(g), k_(k), cap_(cap), colors_(static_cast<std::size_t>(g.order()), -1) {}

  ColoringEnumeration run() {
    place(0, 0);
    return std::move(out_);
  }

private:
  // Returns false once the cap is hit.
  bool place(Vertex v, int used) {
    if (v == g_.order()) {
      if (out_.colorings.size() == cap_) {
        out_.truncated = true;
        return false;
      }
      out_.colorings.emplace_back(colors_, k_);
      return true;
    }
    // Too few vertices left to open the remaining colours.
    if (k_ - used > g_.order() - v) return true;
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (Vertex w : g_.neighbors(v))
        if (w < v && colors_[static_cast<std::size_t>(w)] == c) clash = true;
      if (clash) continue;
      colors_[static_cast<std::size_t>(v)] = c;
      if (!place(v + 1, std::max(used, c + 1))) return false;
    }
    colors_[static_cast<std::size_t>(v)] = -1;
    return true;
  }

  const Graph& g_;
  int k_;
  std::size_t cap_;
  std::vector<int> colors_;
  ColoringEnumeration out_;
};

} // namespace

ColoringEnumeration enumerate_optimal_colorings(const Graph& g, std::size_t cap) {
  if (g.order() > 10) throw ContractViolation("optimal colouring enumeration supports at most 10 vertices");
  return OptimalEnumerator(g, chromatic_number(g), cap).run();
}

VertexSet kempe_component(const Graph& g, const Coloring& c, Vertex start, int other) {
  if (c.size() != static_cast<std::size_t>(g.order())) throw ContractViolation("colouring size does not match vertex count");
  if (other == c[start]) throw ContractViolation("Kempe pair needs two distinct colours");
  const VertexSet allowed = c.color_class(c[start]) | c.color_class(other);
  VertexSet seen{start};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v) & allowed;
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

Coloring kempe_swap(const Graph& g, const Coloring& c, VertexSet component, std::pair<int, int> pair) {
  if (c.size() != static_cast<std::size_t>(g.order())) throw ContractViolation("colouring size does not match vertex count");
  const auto [a, b] = pair;
  if (a == b) throw ContractViolation("Kempe pair needs two distinct colours");
  const VertexSet allowed = c.color_class(a) | c.color_class(b);
  if (!component.subset_of(allowed)) throw ContractViolation("component holds a colour outside the pair");
  for (Vertex v : component)
    if (!(g.neighbors(v) & allowed).subset_of(component))
      throw ContractViolation("component is not closed under bi-coloured adjacency");
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  for (Vertex v : component) colors[static_cast<std::size_t>(v)] = colors[static_cast<std::size_t>(v)] == a ? b : a;
  return Coloring(std::move(colors), c.color_count());
}

std::optional<BicolorPath> find_bicolor_path4(const Graph& g, const Coloring& c, Vertex t, Vertex t_prime) {
  if (g.adjacent(t, t_prime) || t == t_prime) throw ContractViolation("path endpoints must be distinct and non-adjacent");
  const int ct = c[t];
  const int ctp = c[t_prime];
  if (ct == ctp) throw ContractViolation("path endpoints must have distinct colours");
  for (Vertex v : g.neighbors(t)) {
    if (c[v] != ctp) continue;
    for (Vertex w : g.neighbors(v) & g.neighbors(t_prime)) {
      if (c[w] != ct) continue;
      return BicolorPath{{t, v, w, t_prime}, {ct, ctp}};
    }
  }
  return std::nullopt;
}

} // namespace reed
