#include "reed/auditor.hpp"

#include <algorithm>
#include <numeric>

#include "reed/errors.hpp"
#include "reed/graph6.hpp"
#include "reed/invariants.hpp"

namespace reed {

namespace {

constexpr std::array<std::string_view, kStatementCount> kStatementNames{"I", "S1", "S2", "S3", "S4", "CLAIM", "FINAL"};
constexpr std::array<std::string_view, 4> kStatusNames{"hypotheses-unmet", "holds", "violated", "gate-failed"};

constexpr std::string_view kGateHypothesis = "gate-I";

VertexSet colors_of(const Coloring& c, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out = out.with(c[v]);
  return out;
}

} // namespace

std::string_view to_string(Statement s) { return kStatementNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }

Statement statement_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kStatementNames.size(); ++i)
    if (kStatementNames[i] == s) return static_cast<Statement>(i);
  throw ContractViolation("unknown statement id '" + std::string(s) + "'");
}

Status status_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i)
    if (kStatusNames[i] == s) return static_cast<Status>(i);
  throw ContractViolation("unknown status '" + std::string(s) + "'");
}

void StatusCounts::add(Status s) {
  switch (s) {
  case Status::hypotheses_unmet: ++hypotheses_unmet; break;
  case Status::holds: ++holds; break;
  case Status::violated: ++violated; break;
  case Status::gate_failed: ++gate_failed; break;
  }
}

StatusCounts& StatusCounts::operator+=(const StatusCounts& o) {
  hypotheses_unmet += o.hypotheses_unmet;
  holds += o.holds;
  violated += o.violated;
  gate_failed += o.gate_failed;
  return *this;
}

std::size_t AuditReport::violated_total() const {
  std::size_t total = 0;
  for (const auto& c : counts) total += c.violated;
  return total;
}

void AuditReport::record(const AuditFinding& f) {
  counts[static_cast<std::size_t>(f.statement)].add(f.status);
  if (f.status == Status::violated) violations.push_back(f);
}

ColoringEnumeration audit_colorings(const Graph& g, std::size_t budget) {
  if (g.order() <= 7) return enumerate_optimal_colorings(g, budget);

  const int chi = chromatic_number(g);
  ColoringEnumeration out;
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (int shift = 0; shift < g.order(); ++shift) {
    std::iota(order.begin(), order.end(), 0);
    std::rotate(order.begin(), order.begin() + shift, order.end());
    Coloring c = greedy_coloring(g, order).canonical();
    if (c.color_count() != chi) continue;
    if (std::find(out.colorings.begin(), out.colorings.end(), c) != out.colorings.end()) continue;
    if (out.colorings.size() == budget) {
      out.truncated = true;
      break;
    }
    out.colorings.push_back(std::move(c));
  }
  if (out.colorings.empty() && budget > 0)
    out.colorings.push_back(Coloring(minimum_coloring(g), chi).canonical());
  return out;
}

Auditor::Auditor(const Graph& g)
    : g_(g), graph6_(graph_to_graph6(g)), delta_(max_degree(g)), omega_(clique_number(g)), chi_(chromatic_number(g)),
      bound_(reed_bound(delta_, omega_)) {}

void Auditor::require_proper(const Coloring& c) const {
  if (!is_proper(g_, c)) throw ContractViolation("colouring is not proper");
}

void Auditor::require_optimal(const Coloring& c) const {
  require_proper(c);
  if (c.color_count() != chi_) throw ContractViolation("colouring does not use exactly chi colours");
}

int Auditor::count_colored_neighbors(const Coloring& c, Vertex v, int color) const {
  return (g_.neighbors(v) & c.color_class(color)).size();
}

AuditFinding Auditor::make(Statement s, const Coloring& c, std::optional<Vertex> u) const {
  AuditFinding f;
  f.statement = s;
  f.certificate.graph6 = graph6_;
  f.certificate.u = u;
  f.certificate.colors.assign(c.colors().begin(), c.colors().end());
  return f;
}

bool Auditor::gate_passes(const Coloring& c, Vertex u) const {
  require_optimal(c);
  const int r = unique_color_neighbors(g_, c, u).r.size();
  return g_.degree(u) >= r + 2 * (bound_ - r) && r >= omega_ + 1;
}

AuditFinding Auditor::gate_I(const Coloring& c, Vertex u) const {
  AuditFinding f = make(Statement::gate_I, c, u);
  f.status = gate_passes(c, u) ? Status::holds : Status::gate_failed;
  return f;
}

AuditFinding Auditor::statement_1(const Coloring& c, Vertex u) const {
  AuditFinding f = make(Statement::s1, c, u);
  if (!gate_passes(c, u)) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = kGateHypothesis;
    return f;
  }
  const auto d = unique_color_neighbors(g_, c, u);
  const bool ok = d.t.size() >= 2 || (d.t.empty() && g_.is_clique(d.r) && d.r.size() >= omega_ + 1);
  f.status = ok ? Status::holds : Status::violated;
  f.certificate.tuple = d.t.to_vector();
  return f;
}

AuditFinding Auditor::statement_2_pair(const Coloring& c, Vertex u, Vertex t, Vertex t_prime) const {
  require_proper(c);
  AuditFinding f = make(Statement::s2, c, u);
  f.certificate.tuple = {t, t_prime};
  const auto path = find_bicolor_path4(g_, c, t, t_prime);
  if (!path) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = "bicolor-path-4";
    return f;
  }
  f.certificate.tuple.push_back(path->vertices[1]);
  f.certificate.tuple.push_back(path->vertices[2]);
  const bool unique_at_t = count_colored_neighbors(c, t, c[t_prime]) == 1;
  const bool unique_at_t_prime = count_colored_neighbors(c, t_prime, c[t]) == 1;
  f.status = unique_at_t && unique_at_t_prime ? Status::holds : Status::violated;
  return f;
}

std::vector<AuditFinding> Auditor::statement_2(const Coloring& c, Vertex u) const {
  require_proper(c);
  const auto d = unique_color_neighbors(g_, c, u);
  std::vector<AuditFinding> out;
  for (Vertex t : d.t)
    for (Vertex tp : d.t.without(t) - g_.neighbors(t)) out.push_back(statement_2_pair(c, u, t, tp));
  return out;
}

AuditFinding Auditor::statement_3_triple(const Coloring& c, Vertex u, Vertex t, Vertex t1, Vertex t2) const {
  AuditFinding f = make(Statement::s3, c, u);
  f.certificate.tuple = {t, t1, t2};
  if (statement_2_pair(c, u, t, t1).status != Status::holds || statement_2_pair(c, u, t, t2).status != Status::holds) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = "statement-2-pair";
    return f;
  }
  const VertexSet color_t = c.color_class(c[t]);
  const Vertex a = (g_.neighbors(t1) & color_t).lowest();
  const Vertex b = (g_.neighbors(t2) & color_t).lowest();
  f.certificate.tuple.push_back(a);
  f.certificate.tuple.push_back(b);
  f.status = a == b ? Status::holds : Status::violated;
  return f;
}

std::vector<AuditFinding> Auditor::statement_3(const Coloring& c, Vertex u) const {
  require_proper(c);
  const auto d = unique_color_neighbors(g_, c, u);
  std::vector<AuditFinding> out;
  for (Vertex t : d.t) {
    const VertexSet far = d.t.without(t) - g_.neighbors(t);
    for (Vertex t1 : far)
      for (Vertex t2 : far)
        if (t1 < t2) out.push_back(statement_3_triple(c, u, t, t1, t2));
  }
  return out;
}

AuditFinding Auditor::statement_4(const Coloring& c, Vertex u) const {
  require_proper(c);
  AuditFinding f = make(Statement::s4, c, u);
  const auto seq = build_sequence(g_, c, u);
  VertexSet joined = seq.levels[0].s_prime;
  if (seq.levels.size() > 1) joined |= seq.levels[1].s_prime;
  const bool complete = g_.is_clique(joined);
  f.informational = complete;
  f.certificate.tuple = joined.to_vector();
  if (c.color_count() != chi_) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = "optimal-colouring";
  } else if (!gate_passes(c, u)) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = kGateHypothesis;
  } else if (seq.levels[0].s_prime.empty()) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = "T-prime-nonempty";
  } else {
    f.status = complete ? Status::holds : Status::violated;
  }
  return f;
}

AuditFinding Auditor::claim(const Coloring& c, Vertex u) const {
  require_proper(c);
  AuditFinding f = make(Statement::claim, c, u);
  const auto seq = build_sequence(g_, c, u);
  const VertexSet joined = seq.w | seq.all_substitutes();
  const bool complete = g_.is_clique(joined);
  f.informational = complete;
  f.certificate.tuple = joined.to_vector();
  if (c.color_count() != chi_) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = "optimal-colouring";
  } else if (!gate_passes(c, u)) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = kGateHypothesis;
  } else {
    const bool covers = colors_of(c, seq.base.r).subset_of(colors_of(c, joined));
    f.status = complete && covers ? Status::holds : Status::violated;
  }
  return f;
}

AuditFinding Auditor::final_bound(const Coloring& c) const {
  require_optimal(c);
  AuditFinding f = make(Statement::final_bound, c, std::nullopt);
  // A counterexample needs chi > bound >= 1, so the null graph never qualifies.
  if (g_.order() == 0) {
    f.status = Status::hypotheses_unmet;
    f.unmet_hypothesis = "non-empty";
    return f;
  }
  for (Vertex u = 0; u < g_.order(); ++u) {
    if (!gate_passes(c, u)) {
      f.status = Status::hypotheses_unmet;
      f.unmet_hypothesis = "gate-I-every-vertex";
      f.certificate.tuple = {u};
      return f;
    }
  }
  f.status = chi_ <= bound_ ? Status::holds : Status::violated;
  return f;
}

AuditFinding check_gate_I(const Graph& g, const Coloring& c, Vertex u) { return Auditor(g).gate_I(c, u); }
AuditFinding check_statement_1(const Graph& g, const Coloring& c, Vertex u) { return Auditor(g).statement_1(c, u); }
std::vector<AuditFinding> check_statement_2(const Graph& g, const Coloring& c, Vertex u) {
  return Auditor(g).statement_2(c, u);
}
std::vector<AuditFinding> check_statement_3(const Graph& g, const Coloring& c, Vertex u) {
  return Auditor(g).statement_3(c, u);
}
AuditFinding check_statement_4(const Graph& g, const Coloring& c, Vertex u) { return Auditor(g).statement_4(c, u); }
AuditFinding check_claim(const Graph& g, const Coloring& c, Vertex u) { return Auditor(g).claim(c, u); }

AuditReport audit_graph(const Graph& g, std::size_t coloring_budget) {
  if (g.order() > 10) throw ContractViolation("audit supports at most 10 vertices");
  const Auditor auditor(g);
  AuditReport report;
  report.graph6 = graph_to_graph6(g);
  const auto source = audit_colorings(g, coloring_budget);
  report.colorings = source.colorings.size();
  report.colorings_truncated = source.truncated;
  for (const auto& c : source.colorings) {
    for (Vertex u = 0; u < g.order(); ++u) {
      ++report.instances;
      report.record(auditor.gate_I(c, u));
      report.record(auditor.statement_1(c, u));
      for (const auto& f : auditor.statement_2(c, u)) report.record(f);
      for (const auto& f : auditor.statement_3(c, u)) report.record(f);
      report.record(auditor.statement_4(c, u));
      report.record(auditor.claim(c, u));
    }
    const auto fin = auditor.final_bound(c);
    if (fin.status != Status::hypotheses_unmet) ++report.gate_every_vertex;
    report.record(fin);
  }
  return report;
}

AuditFinding replay(const AuditFinding& finding) {
  const Certificate& cert = finding.certificate;
  const Graph g = graph_from_graph6(cert.graph6);
  const Auditor auditor(g);
  const Coloring c = Coloring::from_colors(cert.colors);
  auto need = [&](std::size_t k) {
    if (cert.tuple.size() < k) throw ContractViolation("certificate tuple too short for " + std::string(to_string(finding.statement)));
  };
  auto apex = [&]() {
    if (!cert.u) throw ContractViolation("certificate lacks an apex vertex");
    return *cert.u;
  };
  switch (finding.statement) {
  case Statement::gate_I: return auditor.gate_I(c, apex());
  case Statement::s1: return auditor.statement_1(c, apex());
  case Statement::s2: need(2); return auditor.statement_2_pair(c, apex(), cert.tuple[0], cert.tuple[1]);
  case Statement::s3: need(3); return auditor.statement_3_triple(c, apex(), cert.tuple[0], cert.tuple[1], cert.tuple[2]);
  case Statement::s4: return auditor.statement_4(c, apex());
  case Statement::claim: return auditor.claim(c, apex());
  case Statement::final_bound: return auditor.final_bound(c);
  }
  throw ContractViolation("unknown statement");
}

} // namespace reed
