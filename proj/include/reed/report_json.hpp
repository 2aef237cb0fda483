#pragma once

#include <json.hpp>

#include "reed/auditor.hpp"
#include "reed/corpus.hpp"
#include "reed/invariants.hpp"
#include "reed/patterns.hpp"

namespace reed {

/// {graph6, n, m, delta, omega, chi, alpha, reed_bound, slack}
nlohmann::ordered_json bundle_json(const std::string& graph6, const InvariantBundle& b);

/// {statement, status, graph6, u, colors, tuple[, hypothesis][, informational_complete]}
nlohmann::ordered_json finding_json(const AuditFinding& f);
/// Inverse of finding_json; throws ContractViolation on malformed objects.
AuditFinding finding_from_json(const nlohmann::json& j);

nlohmann::ordered_json audit_report_json(const AuditReport& r, bool member);

/// Wall time is omitted unless include_timing is set, so equal sweeps serialise identically.
nlohmann::ordered_json sweep_report_json(const SweepReport& r, bool include_timing);

} // namespace reed
