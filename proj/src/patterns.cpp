#include "reed/patterns.hpp"

#include <algorithm>

#include "reed/errors.hpp"

namespace reed {

namespace {

std::string joined(const std::vector<std::string>& keys) {
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return out;
}

// 4-cycle 0-1-2-3 with pendant 4 attached at 0 (the banner).
Graph flag_complement() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }

class InducedSearch {
public:
  InducedSearch(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), map_(static_cast<std::size_t>(pattern.order()), -1) {}

  std::optional<InducedWitness> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (extend(0, VertexSet{})) return InducedWitness{map_};
    return std::nullopt;
  }

private:
  bool extend(int i, VertexSet used) {
    if (i == pattern_.order()) return true;
    const int need = pattern_.degree(i);
    for (Vertex h : host_.vertices() - used) {
      if (host_.degree(h) < need) continue;
      bool fits = true;
      for (int j = 0; j < i && fits; ++j)
        fits = host_.adjacent(h, map_[static_cast<std::size_t>(j)]) == pattern_.adjacent(i, j);
      if (!fits) continue;
      map_[static_cast<std::size_t>(i)] = h;
      if (extend(i + 1, used.with(h))) return true;
    }
    map_[static_cast<std::size_t>(i)] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> map_;
};

bool induces_cycle(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((g.neighbors(v) & s).size() != 2) return false;
  // 2-regular: a single cycle iff connected
  VertexSet seen{s.lowest()};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v) & s;
    frontier = next - seen;
    seen |= next;
  }
  return seen == s;
}

} // namespace

FamilySpec::FamilySpec(std::string name, std::vector<Pattern> forbidden)
    : name_(std::move(name)), forbidden_(std::move(forbidden)) {
  for (const auto& p : forbidden_)
    if (p.graph.order() < 1 || p.graph.order() > 10)
      throw ContractViolation("forbidden pattern " + p.name + " must have 1..10 vertices");
}

const std::vector<std::string>& pattern_names() {
  static const std::vector<std::string> names{"P5", "Flag", "FlagC", "C4", "C5", "TwoK2", "ThreeK1", "P3uK1"};
  return names;
}

Graph builtin_pattern(std::string_view name) {
  if (name == "P5") return Graph::path(5);
  if (name == "FlagC") return flag_complement();
  if (name == "Flag") return complement(flag_complement());
  if (name == "C4") return Graph::cycle(4);
  if (name == "C5") return Graph::cycle(5);
  if (name == "TwoK2") return Graph::from_edges(4, {{0, 1}, {2, 3}});
  if (name == "ThreeK1") return Graph(3);
  if (name == "P3uK1") return Graph::from_edges(4, {{0, 1}, {1, 2}});
  throw CatalogError("unknown pattern '" + std::string(name) + "'; valid keys: " + joined(pattern_names()));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"p5-flagc", "p5-c4", "3k1", "p3k1", "2k2-c4"};
  return names;
}

FamilySpec named_family(std::string_view name) {
  auto make = [&](std::initializer_list<const char*> keys) {
    std::vector<Pattern> forbidden;
    for (const char* k : keys) forbidden.push_back({k, builtin_pattern(k)});
    return FamilySpec(std::string(name), std::move(forbidden));
  };
  if (name == "p5-flagc") return make({"P5", "FlagC"});
  if (name == "p5-c4") return make({"P5", "C4"});
  if (name == "3k1") return make({"ThreeK1"});
  if (name == "p3k1") return make({"P3uK1"});
  if (name == "2k2-c4") return make({"TwoK2", "C4"});
  throw CatalogError("unknown family '" + std::string(name) + "'; valid families: " + joined(family_names()));
}

std::optional<InducedWitness> has_induced(const Graph& host, const Graph& pattern) {
  return InducedSearch(host, pattern).run();
}

Membership in_family(const Graph& g, const FamilySpec& family) {
  for (const auto& p : family.forbidden()) {
    if (auto w = has_induced(g, p.graph)) return {false, p.name, std::move(w)};
  }
  return {};
}

std::vector<int> odd_hole_lengths(const Graph& g) {
  if (g.order() > 12) throw ContractViolation("odd_hole_lengths supports at most 12 vertices");
  std::vector<int> lengths;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet s(bits);
    const int k = s.size();
    if (k < 5 || k % 2 == 0) continue;
    if (induces_cycle(g, s)) lengths.push_back(k);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

} // namespace reed
