#include "reed/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "reed/errors.hpp"
#include "reed/graph6.hpp"
#include "reed/report_json.hpp"

namespace reed::cli {

namespace {

struct RunConfig {
  std::vector<std::string> graphs;
  std::string source;
  std::string family;
  std::vector<std::string> forbid;
  int n_max = -1;
  bool audit = false;
  bool strict = false;
  bool lenient = false;
  int workers = 1;
  std::string out_path;
  std::string certificates_path;
  bool pretty = false;
  bool timing = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int default_workers() {
  if (const char* env = std::getenv("REED_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

StreamPolicy policy_of(const RunConfig& cfg) { return cfg.lenient ? StreamPolicy::lenient : StreamPolicy::strict; }

// Graphs from positional arguments, else --source, else stdin.
std::vector<NumberedGraph> load_graphs(const RunConfig& cfg, std::istream& in, std::ostream& err) {
  StreamResult result;
  if (!cfg.graphs.empty()) {
    std::stringstream joined;
    for (const auto& g : cfg.graphs) joined << g << '\n';
    result = read_graph6_stream(joined, policy_of(cfg));
  } else if (!cfg.source.empty()) {
    std::ifstream file(cfg.source);
    if (!file) throw UsageError("cannot open source file '" + cfg.source + "'");
    result = read_graph6_stream(file, policy_of(cfg));
  } else {
    result = read_graph6_stream(in, policy_of(cfg));
  }
  for (const auto& issue : result.skipped) err << "skipped line " << issue.line << ": " << issue.message << '\n';
  return std::move(result.graphs);
}

FamilySpec resolve_family(const RunConfig& cfg) {
  if (!cfg.forbid.empty()) {
    std::vector<Pattern> patterns;
    std::string name = "forbid";
    for (const auto& code : cfg.forbid) {
      try {
        patterns.push_back({code, graph_from_graph6(code)});
      } catch (const ParseError& e) {
        throw UsageError("bad --forbid pattern '" + code + "': " + e.what());
      }
      name += ":" + code;
    }
    try {
      return FamilySpec(name, std::move(patterns));
    } catch (const ContractViolation& e) {
      throw UsageError(e.what());
    }
  }
  try {
    return named_family(cfg.family.empty() ? "p5-flagc" : cfg.family);
  } catch (const CatalogError& e) {
    throw UsageError(e.what());
  }
}

class Output {
public:
  Output(const RunConfig& cfg, std::ostream& fallback) : stream_(&fallback) {
    if (!cfg.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg.out_path);
      if (!*file_) throw UsageError("cannot open output file '" + cfg.out_path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  void line(const nlohmann::ordered_json& j) { *stream_ << j.dump() << '\n'; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void write_certificates(const RunConfig& cfg, const std::vector<AuditFinding>& findings) {
  if (cfg.certificates_path.empty()) return;
  std::ofstream file(cfg.certificates_path);
  if (!file) throw UsageError("cannot open certificate file '" + cfg.certificates_path + "'");
  for (const auto& f : findings) file << finding_json(f).dump() << '\n';
}

int cmd_invariants(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(cfg, in, err);
  Output sink(cfg, out);
  if (cfg.pretty)
    *sink << std::left << std::setw(16) << "graph6" << " n  m  delta omega chi alpha bound slack\n";
  for (const auto& [g, line] : graphs) {
    const auto b = invariant_bundle(g);
    const auto code = graph_to_graph6(g);
    if (cfg.pretty) {
      *sink << std::left << std::setw(16) << code << ' ' << std::setw(2) << b.n << ' ' << std::setw(2) << b.m << ' '
            << std::setw(5) << b.delta << ' ' << std::setw(5) << b.omega << ' ' << std::setw(3) << b.chi << ' '
            << std::setw(5) << b.alpha << ' ' << std::setw(5) << b.reed_bound << ' ' << b.slack << '\n';
    } else {
      sink.line(bundle_json(code, b));
    }
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const FamilySpec family = resolve_family(cfg);
  const auto graphs = load_graphs(cfg, in, err);
  Output sink(cfg, out);
  for (const auto& [g, line] : graphs) {
    const auto m = in_family(g, family);
    const auto code = graph_to_graph6(g);
    if (cfg.pretty) {
      *sink << code << "  " << family.name() << "  " << (m.member ? "member" : "excluded");
      if (m.witness) {
        *sink << " (" << *m.pattern << " at";
        for (Vertex v : m.witness->vertices) *sink << ' ' << v;
        *sink << ')';
      }
      *sink << '\n';
      continue;
    }
    nlohmann::ordered_json j{{"graph6", code}, {"family", family.name()}, {"member", m.member}};
    if (m.witness) j["witness"] = {{"pattern", *m.pattern}, {"vertices", m.witness->vertices}};
    sink.line(j);
  }
  return kExitOk;
}

void print_sweep_pretty(std::ostream& os, const SweepReport& r) {
  os << "family " << r.family << "  source " << r.source << '\n';
  os << " n  examined  members  violations  tight\n";
  for (const auto& l : r.levels)
    os << std::right << std::setw(2) << l.n << std::setw(10) << l.examined << std::setw(9) << l.members << std::setw(12)
       << l.violations << std::setw(7) << l.tight << '\n';
  os << "total " << r.examined << " examined, " << r.members << " members, " << r.violations.size()
     << " Reed violations, " << r.tight << " tight\n";
  if (r.audit)
    os << "audit: " << r.audit->graphs << " graphs, " << r.audit->instances << " instances, "
       << r.audit->violations.size() << " violated findings\n";
}

int cmd_sweep(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const FamilySpec family = resolve_family(cfg);
  SweepOptions options;
  options.audit = cfg.audit;
  options.workers = cfg.workers;
  SweepReport report;
  if (!cfg.source.empty() || !cfg.graphs.empty()) {
    std::vector<Graph> graphs;
    for (auto& ng : load_graphs(cfg, in, err)) graphs.push_back(std::move(ng.graph));
    report = sweep_graphs(family, graphs, options, cfg.source.empty() ? "arguments" : cfg.source);
  } else {
    if (cfg.n_max < 0) throw UsageError("sweep needs --n-max or --source");
    if (cfg.n_max > kMaxEnumerationOrder)
      throw UsageError("--n-max must be at most " + std::to_string(kMaxEnumerationOrder) + "; use --source for larger graphs");
    report = sweep(family, cfg.n_max, options);
  }
  Output sink(cfg, out);
  if (cfg.pretty)
    print_sweep_pretty(*sink, report);
  else
    sink.line(sweep_report_json(report, cfg.timing));
  const std::size_t audit_violations = report.audit ? report.audit->violations.size() : 0;
  if (report.audit) write_certificates(cfg, report.audit->violations);
  return report.violations.empty() && audit_violations == 0 ? kExitOk : kExitViolation;
}

int cmd_audit(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const FamilySpec family = resolve_family(cfg);
  const auto graphs = load_graphs(cfg, in, err);
  for (const auto& [g, line] : graphs)
    if (g.order() > 10) throw UsageError("audit supports at most 10 vertices (line " + std::to_string(line) + ")");
  Output sink(cfg, out);
  bool member_violation = false;
  std::vector<AuditFinding> certificates;
  for (const auto& [g, line] : graphs) {
    const bool member = in_family(g, family).member;
    const auto report = audit_graph(g);
    if (member && report.violated_total() > 0) member_violation = true;
    certificates.insert(certificates.end(), report.violations.begin(), report.violations.end());
    if (cfg.pretty) {
      *sink << report.graph6 << (member ? "  member" : "  non-member") << "  colorings " << report.colorings
            << "  instances " << report.instances << '\n';
      for (std::size_t i = 0; i < kStatementCount; ++i) {
        const auto& c = report.counts[i];
        *sink << "  " << std::left << std::setw(6) << to_string(static_cast<Statement>(i)) << " unmet " << c.hypotheses_unmet
              << "  holds " << c.holds << "  violated " << c.violated << "  gate-failed " << c.gate_failed << '\n';
      }
    } else {
      sink.line(audit_report_json(report, member));
    }
  }
  write_certificates(cfg, certificates);
  return member_violation ? kExitViolation : kExitOk;
}

int cmd_replay(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* source = &in;
  if (!cfg.source.empty()) {
    file.open(cfg.source);
    if (!file) throw UsageError("cannot open source file '" + cfg.source + "'");
    source = &file;
  }
  Output sink(cfg, out);
  bool failed = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(*source, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    AuditFinding original;
    try {
      original = finding_from_json(nlohmann::json::parse(raw));
    } catch (const std::exception& e) {
      if (!cfg.lenient) throw StreamError(e.what(), line);
      err << "skipped line " << line << ": " << e.what() << '\n';
      continue;
    }
    const AuditFinding again = replay(original);
    const bool reproduced = again.status == original.status;
    if (!reproduced || again.status == Status::violated) failed = true;
    auto j = finding_json(again);
    j["reproduced"] = reproduced;
    sink.line(j);
  }
  return failed ? kExitViolation : kExitOk;
}

int cmd_patterns(const RunConfig& cfg, std::ostream& out) {
  Output sink(cfg, out);
  for (const auto& name : pattern_names()) {
    const Graph g = builtin_pattern(name);
    if (cfg.pretty)
      *sink << std::left << std::setw(8) << name << ' ' << std::setw(6) << graph_to_graph6(g) << " n=" << g.order()
            << " m=" << g.size() << '\n';
    else
      sink.line({{"name", name}, {"graph6", graph_to_graph6(g)}, {"n", g.order()}, {"m", g.size()}});
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Reed's bound on hereditary graph families", "reedcheck"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = default_workers();

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("graphs", cfg.graphs, "graph6 strings (default: --source or stdin)");
    sub->add_option("--source", cfg.source, "file with one graph6 string per line");
    auto* strict = sub->add_flag("--strict", cfg.strict, "abort on the first malformed line (default)");
    sub->add_flag("--lenient", cfg.lenient, "skip malformed lines")->excludes(strict);
  };
  auto add_family = [&](CLI::App* sub) {
    auto* fam = sub->add_option("--family", cfg.family, "p5-flagc | p5-c4 | 3k1 | p3k1 | 2k2-c4");
    sub->add_option("--forbid", cfg.forbid, "forbidden induced pattern as graph6 (repeatable)")
        ->allow_extra_args(false)
        ->excludes(fam);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "write output to file instead of stdout");
    sub->add_flag("--pretty", cfg.pretty, "human-readable tables instead of NDJSON");
  };

  auto* invariants = app.add_subcommand("invariants", "exact n, m, delta, omega, chi, alpha and Reed bound per graph");
  add_inputs(invariants);
  add_output(invariants);

  auto* classify = app.add_subcommand("classify", "family membership with a forbidden-pattern witness");
  add_inputs(classify);
  add_family(classify);
  add_output(classify);

  auto* sweep_cmd = app.add_subcommand("sweep", "verify the bound over all graphs up to --n-max or a graph6 file");
  add_inputs(sweep_cmd);
  add_family(sweep_cmd);
  add_output(sweep_cmd);
  sweep_cmd->add_option("--n-max", cfg.n_max, "largest vertex count to enumerate (<= 9)");
  sweep_cmd->add_flag("--audit", cfg.audit, "also audit proof statements on every member");
  sweep_cmd->add_option("--workers", cfg.workers, "worker threads (default: REED_WORKERS or 1)")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--timing", cfg.timing, "include wall_time_ms in the report");
  sweep_cmd->add_option("--certificates", cfg.certificates_path, "write violated audit findings as NDJSON");

  auto* audit = app.add_subcommand("audit", "check proof statements on every vertex and optimal colouring");
  add_inputs(audit);
  add_family(audit);
  add_output(audit);
  audit->add_option("--certificates", cfg.certificates_path, "write violated findings as NDJSON");

  auto* replay_cmd = app.add_subcommand("replay", "re-evaluate NDJSON audit certificates");
  replay_cmd->add_option("--source", cfg.source, "certificate file (default: stdin)");
  replay_cmd->add_flag("--lenient", cfg.lenient, "skip malformed lines");
  add_output(replay_cmd);

  auto* patterns = app.add_subcommand("patterns", "list the built-in pattern catalog");
  add_output(patterns);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*invariants) return cmd_invariants(cfg, in, out, err);
    if (*classify) return cmd_classify(cfg, in, out, err);
    if (*sweep_cmd) return cmd_sweep(cfg, in, out, err);
    if (*audit) return cmd_audit(cfg, in, out, err);
    if (*replay_cmd) return cmd_replay(cfg, in, out, err);
    if (*patterns) return cmd_patterns(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StreamError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace reed::cli
