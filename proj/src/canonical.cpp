#include "reed/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace reed {

namespace {

// cell[v] is the index of v's cell in an ordered partition; cells are numbered 0..k-1.
struct Partition {
  std::vector<int> cell;
  int cells = 0;
};

// Colour refinement. New cells are ordered by (old cell, neighbour counts per old cell),
// which depends only on the partition's structure, never on vertex labels.
void refine(const Graph& g, Partition& p) {
  const int n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.assign(static_cast<std::size_t>(p.cells) + 1, 0);
      s[0] = p.cell[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbors(v)) ++s[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(w)]) + 1];
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    int next = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++next;
      p.cell[static_cast<std::size_t>(order[i])] = next;
    }
    const int cells = next + 1;
    if (cells == p.cells) return;
    p.cells = cells;
  }
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  return g.neighbors(a).without(b) == g.neighbors(b).without(a);
}

class Search {
public:
  explicit Search(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    Partition root;
    root.cell.assign(static_cast<std::size_t>(g_.order()), 0);
    root.cells = g_.order() > 0 ? 1 : 0;
    refine(g_, root);
    explore(root);
    return best_perm_;
  }

private:
  void explore(const Partition& p) {
    const int n = g_.order();
    if (p.cells == n) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])] = v;
      CanonicalCode code = labelled_code(relabel(g_, perm));
      if (!best_code_ || code < *best_code_) {
        best_code_ = std::move(code);
        best_perm_ = std::move(perm);
      }
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(p.cells), 0);
    for (int c : p.cell) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (p.cell[static_cast<std::size_t>(v)] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(g_, v, w); })) continue;
      tried.push_back(v);
      Partition child = p;
      for (Vertex w = 0; w < n; ++w) {
        int& c = child.cell[static_cast<std::size_t>(w)];
        if (c > target || (c == target && w != v)) ++c;
      }
      child.cells = p.cells + 1;
      refine(g_, child);
      explore(child);
    }
  }

  const Graph& g_;
  std::optional<CanonicalCode> best_code_;
  std::vector<Vertex> best_perm_;
};

} // namespace

CanonicalCode labelled_code(const Graph& g) {
  const int n = g.order();
  CanonicalCode code;
  code.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 8) {
        code.bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) code.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return code;
}

std::vector<Vertex> canonical_labeling(const Graph& g) { return Search(g).run(); }

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalCode canonical_code(const Graph& g) { return labelled_code(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

} // namespace reed
