#pragma once

// Independent brute-force references used only by tests. Nothing here calls into the
// search routines it is compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "reed/graph.hpp"

namespace oracle {

using reed::Graph;
using reed::Vertex;

inline Graph from_bits(int n, std::uint64_t bits) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((bits >> k) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Every labelled graph on n vertices.
inline std::vector<Graph> all_labelled(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) out.push_back(from_bits(n, bits));
  return out;
}

/// Upper-triangle bits of g under perm, column order, as a string of '0'/'1'.
inline std::string permuted_bits(const Graph& g, const std::vector<Vertex>& perm) {
  std::string s;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
  return s;
}

/// Minimum over all n! relabellings.
inline std::string min_code(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    auto s = permuted_bits(g, perm);
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(g.order()) + ":" + best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.order() && ok; ++i)
      for (int j = i + 1; j < a.order() && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Isomorphism classes via orbit counting: (1/n!) sum over permutations of 2^(cycles on pairs).
inline std::uint64_t burnside_count(int n) {
  if (n <= 1) return 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const int pairs = n * (n - 1) / 2;
  std::vector<int> pair_index(static_cast<std::size_t>(n * n), -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_index[i * n + j] = pair_index[j * n + i] = k++;
  // Sum of 2^(cycles) can overflow 64 bits only far beyond n = 9.
  unsigned __int128 total = 0;
  std::uint64_t perms = 0;
  std::vector<char> seen(static_cast<std::size_t>(pairs));
  do {
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int p = pair_index[i * n + j];
        if (seen[p]) continue;
        ++cycles;
        int a = i, b = j;
        while (!seen[pair_index[a * n + b]]) {
          seen[pair_index[a * n + b]] = 1;
          a = perm[a];
          b = perm[b];
        }
      }
    total += static_cast<unsigned __int128>(1) << cycles;
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint64_t>(total / perms);
}

inline bool proper(const Graph& g, const std::vector<int>& colors) {
  for (int v = 0; v < g.order(); ++v)
    for (int w = v + 1; w < g.order(); ++w)
      if (g.adjacent(v, w) && colors[v] == colors[w]) return false;
  return true;
}

/// Calls f on every assignment of colours 0..k-1 to the vertices.
template <typename F>
void for_each_assignment(int n, int k, F&& f) {
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    f(colors);
    return;
  }
  if (k == 0) return;
  while (true) {
    f(colors);
    int i = 0;
    while (i < n && ++colors[i] == k) colors[i++] = 0;
    if (i == n) return;
  }
}

inline int chromatic_number(const Graph& g) {
  for (int k = 0;; ++k) {
    bool found = false;
    for_each_assignment(g.order(), k, [&](const std::vector<int>& c) {
      if (!found && proper(g, c)) found = true;
    });
    if (found) return k;
  }
}

inline int clique_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
    std::vector<int> s;
    for (int v = 0; v < g.order(); ++v)
      if ((bits >> v) & 1U) s.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.adjacent(s[i], s[j]);
    if (clique) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = 0;
    for (int w = 0; w < g.order(); ++w) d += g.adjacent(v, w) ? 1 : 0;
    best = std::max(best, d);
  }
  return best;
}

/// Proper k-colourings modulo colour permutation, each relabelled by first occurrence.
inline std::set<std::vector<int>> canonical_colorings(const Graph& g, int k) {
  std::set<std::vector<int>> out;
  for_each_assignment(g.order(), k, [&](const std::vector<int>& c) {
    if (!proper(g, c)) return;
    std::vector<int> map(static_cast<std::size_t>(k), -1);
    std::vector<int> canon(c.size());
    int next = 0;
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (map[c[v]] < 0) map[c[v]] = next++;
      canon[v] = map[c[v]];
    }
    out.insert(canon);
  });
  return out;
}

/// Whether some vertex subset of host induces a copy of pattern, by trying every
/// ordered selection of pattern.order() host vertices.
inline bool contains_induced(const Graph& host, const Graph& pattern) {
  const int k = pattern.order();
  if (k > host.order()) return false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << host.order()); ++bits) {
    std::vector<int> s;
    for (int v = 0; v < host.order(); ++v)
      if ((bits >> v) & 1U) s.push_back(v);
    if (static_cast<int>(s.size()) != k) continue;
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j) ok = host.adjacent(s[i], s[j]) == pattern.adjacent(i, j);
      if (ok) return true;
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return false;
}

} // namespace oracle
