#include <doctest.h>

#include "oracles.hpp"
#include "reed/canonical.hpp"
#include "reed/corpus.hpp"
#include "reed/errors.hpp"
#include "reed/patterns.hpp"

using namespace reed;

namespace {

bool edges_exactly(const Graph& g, std::initializer_list<std::pair<int, int>> edges) {
  if (g.size() != static_cast<int>(edges.size())) return false;
  for (auto [a, b] : edges)
    if (!g.adjacent(a, b)) return false;
  return true;
}

bool member(const Graph& g, std::string_view family) { return in_family(g, named_family(family)).member; }

} // namespace

TEST_CASE("pattern catalog shapes") {
  CHECK(edges_exactly(builtin_pattern("P5"), {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK(edges_exactly(builtin_pattern("FlagC"), {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}));
  CHECK(builtin_pattern("Flag") == complement(builtin_pattern("FlagC")));
  CHECK(builtin_pattern("FlagC") == complement(builtin_pattern("Flag")));
  CHECK(builtin_pattern("C4") == Graph::cycle(4));
  CHECK(edges_exactly(builtin_pattern("TwoK2"), {{0, 1}, {2, 3}}));
  CHECK(builtin_pattern("ThreeK1") == Graph(3));
  CHECK(edges_exactly(builtin_pattern("P3uK1"), {{0, 1}, {1, 2}}));
  CHECK(builtin_pattern("P3uK1").order() == 4);

  try {
    builtin_pattern("Bull");
    FAIL("expected catalog error");
  } catch (const CatalogError& e) {
    CHECK(std::string(e.what()).find("FlagC") != std::string::npos);
  }
  CHECK_THROWS_AS(named_family("p5"), CatalogError);
}

// The five-vertex subgraphs the proof of statements 2 and 3 call Flag^C. Vertex order
// follows the proof's listing; each must be isomorphic to the catalog entry.
TEST_CASE("FlagC adjacency matches the proof's contradiction subgraphs") {
  // <V, W, V', t, u>: edges VW, WV', V't, tV, tu.
  const Graph statement2 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
  // <t', t'', B, W, t>: t't'' and the i-k path t-W-B-t'' plus t'W.
  const Graph statement3 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 3}});
  // Triangle with a pendant path: same edge count, different graph.
  const Graph decoy = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const Graph flag_c = builtin_pattern("FlagC");
  CHECK(oracle::isomorphic(statement2, flag_c));
  CHECK(oracle::isomorphic(statement3, flag_c));
  CHECK(oracle::isomorphic(complement(flag_c), builtin_pattern("Flag")));
  CHECK_FALSE(oracle::isomorphic(decoy, flag_c));
  CHECK(has_induced(flag_c, Graph::cycle(4)).has_value());
  CHECK(has_induced(flag_c, Graph(3)).has_value());
}

TEST_CASE("has_induced witnesses") {
  const auto w = has_induced(Graph::cycle(6), builtin_pattern("P5"));
  REQUIRE(w.has_value());
  CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_FALSE(has_induced(Graph::cycle(5), builtin_pattern("P5")).has_value());
  const auto c4 = has_induced(builtin_pattern("FlagC"), builtin_pattern("C4"));
  REQUIRE(c4.has_value());
  CHECK(c4->vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(has_induced(Graph(2), Graph(3)).has_value());
  for (const auto& name : pattern_names()) {
    const Graph p = builtin_pattern(name);
    CHECK(has_induced(p, p).has_value());
  }
}

TEST_CASE("has_induced agrees with exhaustive selection and witnesses replay") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n))
      for (const auto& name : {"P5", "FlagC", "C4", "TwoK2", "ThreeK1", "P3uK1"}) {
        const Graph p = builtin_pattern(name);
        const auto w = has_induced(g, p);
        REQUIRE(w.has_value() == oracle::contains_induced(g, p));
        if (!w) continue;
        for (int i = 0; i < p.order(); ++i)
          for (int j = 0; j < p.order(); ++j)
            if (i != j) REQUIRE(g.adjacent(w->vertices[i], w->vertices[j]) == p.adjacent(i, j));
      }
}

TEST_CASE("family membership") {
  CHECK(member(Graph::cycle(5), "p5-flagc"));
  for (int n = 0; n <= 12; ++n) CHECK(member(Graph::complete(n), "p5-flagc"));
  const auto c6 = in_family(Graph::cycle(6), named_family("p5-flagc"));
  CHECK_FALSE(c6.member);
  CHECK(c6.pattern == "P5");
  CHECK(member(Graph::complete(4), "3k1"));
  CHECK_THROWS_AS(FamilySpec("bad", {{"big", Graph(11)}}), ContractViolation);
  CHECK_THROWS_AS(FamilySpec("bad", {{"empty", Graph(0)}}), ContractViolation);
}

TEST_CASE("the smaller families are contained in the {P5, FlagC}-free family up to 7 vertices") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      const bool base = member(g, "p5-flagc");
      for (const auto* fam : {"p5-c4", "3k1", "p3k1", "2k2-c4"})
        if (member(g, fam)) REQUIRE(base);
    }
}

TEST_CASE("families are hereditary") {
  std::vector<FamilySpec> families;
  for (const auto& name : family_names()) families.push_back(named_family(name));
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n))
      for (const auto& f : families) {
        if (!in_family(g, f).member) continue;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
          REQUIRE(in_family(induced_subgraph(g, VertexSet(bits)), f).member);
      }
}

TEST_CASE("odd hole lengths") {
  CHECK(odd_hole_lengths(Graph::cycle(5)) == std::vector<int>{5});
  CHECK(odd_hole_lengths(Graph::cycle(7)) == std::vector<int>{7});
  CHECK(odd_hole_lengths(Graph::cycle(6)).empty());
  CHECK(odd_hole_lengths(Graph::complete(6)).empty());
  // one entry per hole
  CHECK(odd_hole_lengths(disjoint_union(Graph::cycle(5), Graph::cycle(5))) == std::vector<int>{5, 5});
  CHECK_THROWS_AS(odd_hole_lengths(Graph(13)), ContractViolation);

  const Graph p5 = builtin_pattern("P5");
  for (int n = 0; n <= 8; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      if (has_induced(g, p5)) continue;
      for (int len : odd_hole_lengths(g)) REQUIRE(len == 5);
    }
}
