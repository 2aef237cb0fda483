#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reed/graph.hpp"

namespace reed {

struct Pattern {
  std::string name;
  Graph graph;
};

/// A hereditary family: graphs with no induced copy of any forbidden pattern.
class FamilySpec {
public:
  /// Throws ContractViolation unless every pattern has 1..10 vertices.
  FamilySpec(std::string name, std::vector<Pattern> forbidden);

  const std::string& name() const { return name_; }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }

private:
  std::string name_;
  std::vector<Pattern> forbidden_;
};

/// Host vertices mapped to pattern vertices 0..k-1, in pattern order.
struct InducedWitness {
  std::vector<Vertex> vertices;

  friend bool operator==(const InducedWitness&, const InducedWitness&) = default;
};

struct Membership {
  bool member = true;
  std::optional<std::string> pattern;
  std::optional<InducedWitness> witness;
};

/// Catalog keys: P5, Flag, FlagC, C4, C5, TwoK2, ThreeK1, P3uK1.
const std::vector<std::string>& pattern_names();

/// Throws CatalogError listing the valid keys for an unknown name.
Graph builtin_pattern(std::string_view name);

/// Family aliases: p5-flagc, p5-c4, 3k1, p3k1, 2k2-c4.
const std::vector<std::string>& family_names();
FamilySpec named_family(std::string_view name);

/// Lexicographically least injective map (pattern vertex order, host vertices ascending)
/// under which edges and non-edges both match.
std::optional<InducedWitness> has_induced(const Graph& host, const Graph& pattern);

Membership in_family(const Graph& g, const FamilySpec& family);

/// Lengths of all induced cycles of odd length >= 5, sorted ascending, one entry per cycle.
/// Requires g.order() <= 12.
std::vector<int> odd_hole_lengths(const Graph& g);

} // namespace reed
