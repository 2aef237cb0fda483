#include <doctest.h>

#include "reed/auditor.hpp"
#include "reed/corpus.hpp"
#include "reed/errors.hpp"
#include "reed/graph6.hpp"
#include "reed/invariants.hpp"
#include "reed/patterns.hpp"
#include "reed/report_json.hpp"

using namespace reed;

namespace {

const Graph kC5 = Graph::cycle(5);
// u=0, t=1, x=2, y=3, t'=4
const Coloring kApex({0, 1, 2, 1, 2}, 3);

} // namespace

TEST_CASE("gate I") {
  const auto f = check_gate_I(kC5, kApex, 0);
  CHECK(f.status == Status::gate_failed);
  CHECK(unique_color_neighbors(kC5, kApex, 0).r.size() == 2);

  const Graph k5 = Graph::complete(5);
  const Coloring k5c({0, 1, 2, 3, 4}, 5);
  for (Vertex u = 0; u < 5; ++u) CHECK(check_gate_I(k5, k5c, u).status == Status::gate_failed);

  CHECK_THROWS_AS(check_gate_I(kC5, Coloring({0, 1, 2, 3, 2}, 4), 0), ContractViolation);
  CHECK_THROWS_AS(check_gate_I(kC5, Coloring({0, 0, 1, 0, 1}, 2), 0), ContractViolation);
}

TEST_CASE("gate I on a graph with chi = omega + 2") {
  // Groetzsch graph: omega 2, chi 4, delta 5, bound 4. The gate needs |R| >= 3 and
  // deg u >= 8 - |R|, so only the degree-5 hub could pass, but five neighbours on three
  // colours cannot have three unique colours.
  const Graph groetzsch = Graph::from_edges(
      11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}, {6, 0}, {6, 2}, {7, 1}, {7, 3}, {8, 2}, {8, 4},
           {9, 3}, {9, 0}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}});
  const Auditor auditor(groetzsch);
  CHECK(auditor.chi() == 4);
  CHECK(auditor.bound() == 4);
  bool passed_somewhere = false;
  std::vector<Vertex> order(11);
  for (int shift = 0; shift < 11; ++shift) {
    for (int i = 0; i < 11; ++i) order[static_cast<std::size_t>(i)] = (i + shift) % 11;
    const Coloring c = greedy_coloring(groetzsch, order);
    if (c.color_count() != 4) continue;
    for (Vertex u = 0; u < 11; ++u) passed_somewhere = passed_somewhere || auditor.gate_passes(c, u);
  }
  CHECK_FALSE(passed_somewhere);
}

TEST_CASE("statement 1") {
  const auto f = check_statement_1(kC5, kApex, 0);
  CHECK(f.status == Status::hypotheses_unmet);
  CHECK(f.unmet_hypothesis == "gate-I");
  const Graph k3 = Graph::complete(3);
  CHECK(check_statement_1(k3, Coloring({0, 1, 2}, 3), 1).status == Status::hypotheses_unmet);
}

TEST_CASE("statement 2 on the C5 apex instance") {
  const auto findings = check_statement_2(kC5, kApex, 0);
  REQUIRE(findings.size() == 2);
  for (const auto& f : findings) CHECK(f.status == Status::holds);
  // t=1 has colour-2 neighbours {x=2}; t'=4 has colour-1 neighbours {y=3}
  CHECK((Graph::cycle(5).neighbors(1) & kApex.color_class(2)) == VertexSet{2});
  CHECK(findings[0].certificate.tuple == std::vector<Vertex>{1, 4, 2, 3});
  CHECK(check_statement_2(Graph::complete(3), Coloring({0, 1, 2}, 3), 0).empty());
}

TEST_CASE("statement 2 and 3 can fail outside the family") {
  // Search the non-members on up to 7 vertices for violated statement 2 and a statement 3
  // instance whose hypotheses are met; both exist because P5 or FlagC is present.
  const FamilySpec family = named_family("p5-flagc");
  bool s2_violated = false;
  bool s3_met = false;
  for (int n = 0; n <= 7 && !(s2_violated && s3_met); ++n)
    for (const auto& g : enumerate_graphs(n)) {
      if (in_family(g, family).member) continue;
      const auto report = audit_graph(g, 200);
      s2_violated = s2_violated || report[Statement::s2].violated > 0;
      s3_met = s3_met || report[Statement::s3].holds + report[Statement::s3].violated > 0;
      if (s2_violated && s3_met) break;
    }
  CHECK(s2_violated);
  CHECK(s3_met);
}

TEST_CASE("statement 3 regression fixture") {
  // The only graph on up to 7 vertices outside the family where statement 3 reaches its
  // conclusion at all; every instance holds.
  const Graph g = graph_from_graph6("FFYmW");
  CHECK_FALSE(in_family(g, named_family("p5-flagc")).member);
  const auto report = audit_graph(g);
  CHECK(report[Statement::s3].holds == 6);
  CHECK(report[Statement::s3].violated == 0);
}

TEST_CASE("statement 4 and the claim") {
  const auto s4 = check_statement_4(kC5, kApex, 0);
  CHECK(s4.status == Status::hypotheses_unmet);
  CHECK(s4.unmet_hypothesis == "gate-I");
  REQUIRE(s4.informational.has_value());
  CHECK(*s4.informational);
  CHECK(s4.certificate.tuple == std::vector<Vertex>{2, 3});

  const Graph k4 = Graph::complete(4);
  CHECK(check_statement_4(k4, Coloring({0, 1, 2, 3}, 4), 0).status == Status::hypotheses_unmet);

  const auto claim = check_claim(kC5, kApex, 0);
  CHECK(claim.status == Status::hypotheses_unmet);
  CHECK(claim.informational == true);
  CHECK(claim.certificate.tuple == std::vector<Vertex>{2, 3});

  const auto empty = check_claim(Graph(3), Coloring({0, 0, 0}, 1), 1);
  CHECK(empty.status == Status::hypotheses_unmet);
}

TEST_CASE("audit reports") {
  const auto c5 = audit_graph(kC5);
  CHECK(c5.colorings == 5);
  CHECK(c5.instances == 25);
  CHECK(c5[Statement::s2].holds >= 1);
  CHECK(c5.violated_total() == 0);
  CHECK(c5[Statement::gate_I].total() == c5.instances);
  CHECK(c5[Statement::gate_I].gate_failed == c5.instances);
  CHECK(c5[Statement::final_bound].hypotheses_unmet == c5.colorings);

  const auto k4 = audit_graph(Graph::complete(4));
  CHECK(k4.violated_total() == 0);
  CHECK(k4[Statement::s2].total() == 0);
  CHECK(k4[Statement::s3].total() == 0);
  CHECK(k4[Statement::s1].hypotheses_unmet == k4.instances);
  CHECK(k4[Statement::s4].hypotheses_unmet == k4.instances);
  CHECK(k4[Statement::claim].hypotheses_unmet == k4.instances);
  CHECK_THROWS_AS(audit_graph(Graph(11)), ContractViolation);

  const auto null = audit_graph(Graph(0));
  CHECK(null.instances == 0);
  CHECK(null.gate_every_vertex == 0);
  REQUIRE(null[Statement::final_bound].hypotheses_unmet == 1);
}

TEST_CASE("coloring policy") {
  const auto small = audit_colorings(kC5, 100);
  CHECK(small.colorings.size() == 5);
  const Graph c9 = Graph::cycle(9);
  const auto large = audit_colorings(c9, 100);
  REQUIRE(!large.colorings.empty());
  for (const auto& c : large.colorings) {
    CHECK(is_proper(c9, c));
    CHECK(c.color_count() == 3);
  }
  // Every rotation of first-fit on an even cycle uses two colours.
  const auto even = audit_colorings(Graph::cycle(8), 100);
  CHECK(even.colorings.size() == 1);
}

TEST_CASE("unmet findings name their hypothesis") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      const Auditor auditor(g);
      for (const auto& c : audit_colorings(g, 50).colorings)
        for (Vertex u = 0; u < n; ++u) {
          std::vector<AuditFinding> all{auditor.statement_1(c, u), auditor.statement_4(c, u), auditor.claim(c, u)};
          for (auto& f : auditor.statement_2(c, u)) all.push_back(f);
          for (auto& f : auditor.statement_3(c, u)) all.push_back(f);
          for (const auto& f : all) {
            if (f.status == Status::hypotheses_unmet) REQUIRE(!f.unmet_hypothesis.empty());
            else REQUIRE(f.unmet_hypothesis.empty());
          }
        }
    }
}

TEST_CASE("certificates replay to the same status") {
  std::size_t replayed = 0;
  std::size_t violated = 0;
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      const Auditor auditor(g);
      for (const auto& c : audit_colorings(g, 20).colorings) {
        std::vector<AuditFinding> all{auditor.final_bound(c)};
        for (Vertex u = 0; u < n; ++u) {
          all.push_back(auditor.gate_I(c, u));
          all.push_back(auditor.statement_1(c, u));
          all.push_back(auditor.statement_4(c, u));
          all.push_back(auditor.claim(c, u));
          for (auto& f : auditor.statement_2(c, u)) all.push_back(f);
          for (auto& f : auditor.statement_3(c, u)) all.push_back(f);
        }
        for (const auto& f : all) {
          const auto through_json = finding_from_json(nlohmann::json::parse(finding_json(f).dump()));
          const auto again = replay(through_json);
          REQUIRE(again.status == f.status);
          REQUIRE(again.certificate == f.certificate);
          ++replayed;
          if (f.status == Status::violated) ++violated;
        }
      }
    }
  CHECK(replayed > 1000);
  CHECK(violated > 0);
}

TEST_CASE("statement 2 and 3 never fail on family members (n <= 8)") {
  const FamilySpec family = named_family("p5-flagc");
  std::size_t holds = 0;
  for (int n = 0; n <= 8; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      if (!in_family(g, family).member) continue;
      const auto report = audit_graph(g);
      REQUIRE(report[Statement::s2].violated == 0);
      REQUIRE(report[Statement::s3].violated == 0);
      REQUIRE(report.gate_every_vertex == 0);
      holds += report[Statement::s2].holds;
    }
  CHECK(holds > 0);
}
