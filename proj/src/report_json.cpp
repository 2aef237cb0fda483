#include "reed/report_json.hpp"

#include "reed/errors.hpp"

namespace reed {

using nlohmann::ordered_json;

namespace {

ordered_json counts_json(const std::array<StatusCounts, kStatementCount>& counts) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < kStatementCount; ++i) {
    const auto& c = counts[i];
    out[std::string(to_string(static_cast<Statement>(i)))] = {
        {"hypotheses-unmet", c.hypotheses_unmet},
        {"holds", c.holds},
        {"violated", c.violated},
        {"gate-failed", c.gate_failed},
    };
  }
  return out;
}

ordered_json findings_json(const std::vector<AuditFinding>& findings) {
  ordered_json out = ordered_json::array();
  for (const auto& f : findings) out.push_back(finding_json(f));
  return out;
}

} // namespace

ordered_json bundle_json(const std::string& graph6, const InvariantBundle& b) {
  return {{"graph6", graph6}, {"n", b.n},         {"m", b.m},
          {"delta", b.delta}, {"omega", b.omega}, {"chi", b.chi},
          {"alpha", b.alpha}, {"reed_bound", b.reed_bound}, {"slack", b.slack}};
}

ordered_json finding_json(const AuditFinding& f) {
  ordered_json j;
  j["statement"] = to_string(f.statement);
  j["status"] = to_string(f.status);
  j["graph6"] = f.certificate.graph6;
  j["u"] = f.certificate.u ? ordered_json(*f.certificate.u) : ordered_json(nullptr);
  j["colors"] = f.certificate.colors;
  j["tuple"] = f.certificate.tuple;
  if (!f.unmet_hypothesis.empty()) j["hypothesis"] = f.unmet_hypothesis;
  if (f.informational) j["informational_complete"] = *f.informational;
  return j;
}

AuditFinding finding_from_json(const nlohmann::json& j) {
  try {
    AuditFinding f;
    f.statement = statement_from_string(j.at("statement").get<std::string>());
    f.status = status_from_string(j.at("status").get<std::string>());
    f.certificate.graph6 = j.at("graph6").get<std::string>();
    if (j.contains("u") && !j.at("u").is_null()) f.certificate.u = j.at("u").get<Vertex>();
    f.certificate.colors = j.at("colors").get<std::vector<int>>();
    f.certificate.tuple = j.value("tuple", std::vector<Vertex>{});
    f.unmet_hypothesis = j.value("hypothesis", std::string{});
    if (j.contains("informational_complete")) f.informational = j.at("informational_complete").get<bool>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("malformed certificate: ") + e.what());
  }
}

ordered_json audit_report_json(const AuditReport& r, bool member) {
  return {
      {"graph6", r.graph6},
      {"member", member},
      {"colorings", r.colorings},
      {"colorings_truncated", r.colorings_truncated},
      {"instances", r.instances},
      {"gate_every_vertex", r.gate_every_vertex},
      {"counts", counts_json(r.counts)},
      {"violations", findings_json(r.violations)},
  };
}

ordered_json sweep_report_json(const SweepReport& r, bool include_timing) {
  ordered_json j;
  j["family"] = r.family;
  j["forbidden"] = r.forbidden;
  j["source"] = r.source;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["examined"] = r.examined;
  j["members"] = r.members;
  j["reed_violations"] = r.violations.size();
  j["tight"] = r.tight;
  ordered_json levels = ordered_json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"n", l.n}, {"examined", l.examined}, {"members", l.members}, {"violations", l.violations},
                      {"tight", l.tight}});
  j["levels"] = std::move(levels);
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) {
    auto entry = bundle_json(v.graph6, v.bundle);
    entry["coloring"] = v.coloring;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  j["tight_exemplars"] = r.tight_exemplars;
  if (r.audit) {
    const auto& a = *r.audit;
    j["audit"] = {
        {"graphs", a.graphs},
        {"colorings", a.colorings},
        {"instances", a.instances},
        {"truncated_graphs", a.truncated_graphs},
        {"gate_every_vertex_graphs", a.gate_every_vertex_graphs},
        {"counts", counts_json(a.counts)},
        {"violations", findings_json(a.violations)},
    };
  }
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

} // namespace reed
