#include "reed/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>

#include <omp.h>

#include "reed/canonical.hpp"
#include "reed/errors.hpp"
#include "reed/graph6.hpp"

namespace reed {

namespace {

using ClassMap = std::map<CanonicalCode, Graph>;

void check_enumeration_order(int n) {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw UnsupportedSize("internal enumeration supports 0.." + std::to_string(kMaxEnumerationOrder) +
                          " vertices, got " + std::to_string(n) + "; use a graph6 stream instead");
}

// Canonical forms of every one-vertex extension of parent, merged into classes.
void extend_into(const Graph& parent, ClassMap& classes) {
  const int n = parent.order() + 1;
  const std::uint64_t masks = std::uint64_t{1} << parent.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::copy(parent.rows().begin(), parent.rows().end(), rows.begin());
    rows.back() = mask;
    for (Vertex v : VertexSet(mask)) rows[static_cast<std::size_t>(v)] |= VertexSet::bit(n - 1);
    Graph canon = canonical_form(Graph::from_rows(n, rows));
    CanonicalCode code = labelled_code(canon);
    classes.try_emplace(std::move(code), std::move(canon));
  }
}

std::vector<Graph> flatten(ClassMap&& classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> next_level_serial(const std::vector<Graph>& parents) {
  ClassMap classes;
  for (const auto& p : parents) extend_into(p, classes);
  return flatten(std::move(classes));
}

std::vector<Graph> next_level_parallel(const std::vector<Graph>& parents, int workers) {
  const int threads = std::max(1, workers);
  std::vector<ClassMap> local(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  const auto count = static_cast<std::ptrdiff_t>(parents.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    try {
      extend_into(parents[static_cast<std::size_t>(i)], local[tid]);
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  ClassMap merged;
  for (auto& m : local) merged.merge(m);
  return flatten(std::move(merged));
}

std::vector<std::vector<Graph>> levels_through(int n_max, int workers, bool parallel) {
  check_enumeration_order(n_max);
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph(0)});
  for (int n = 1; n <= n_max; ++n)
    levels.push_back(parallel ? next_level_parallel(levels.back(), workers) : next_level_serial(levels.back()));
  return levels;
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n) {
  check_enumeration_order(n);
  return std::move(levels_through(n, 1, false).back());
}

std::vector<Graph> enumerate_graphs_parallel(int n, int workers) {
  check_enumeration_order(n);
  return std::move(levels_through(n, workers, true).back());
}

std::vector<std::vector<Graph>> enumerate_graphs_through(int n_max, int workers) {
  return levels_through(n_max, workers, workers > 1);
}

StreamResult read_graph6_stream(std::istream& in, StreamPolicy policy) {
  StreamResult out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = trim_line_end(raw);
    if (text.empty()) continue;
    if (text.starts_with(">>") && !(text.starts_with(">>graph6<<") && text.size() > 10)) continue;
    try {
      out.graphs.push_back({graph_from_graph6(text), line});
    } catch (const std::exception& e) {
      if (policy == StreamPolicy::strict) throw StreamError(e.what(), line);
      out.skipped.push_back({line, e.what()});
    }
  }
  return out;
}

GraphOutcome evaluate_graph(const Graph& g, const FamilySpec& family, const SweepOptions& options) {
  GraphOutcome out;
  out.member = in_family(g, family).member;
  if (!out.member) return out;
  out.bundle = invariant_bundle(g);
  if (options.audit && g.order() <= 10) out.audit = audit_graph(g, options.coloring_budget);
  return out;
}

std::vector<GraphOutcome> evaluate_serial(std::span<const Graph> graphs, const FamilySpec& family,
                                          const SweepOptions& options) {
  std::vector<GraphOutcome> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(evaluate_graph(g, family, options));
  return out;
}

std::vector<GraphOutcome> evaluate_parallel(std::span<const Graph> graphs, const FamilySpec& family,
                                            const SweepOptions& options) {
  std::vector<GraphOutcome> out(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
  const int threads = std::max(1, options.workers);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = evaluate_graph(graphs[k], family, options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

void AuditSummary::merge(const AuditReport& r) {
  ++graphs;
  colorings += r.colorings;
  instances += r.instances;
  if (r.colorings_truncated) ++truncated_graphs;
  if (r.gate_every_vertex > 0) ++gate_every_vertex_graphs;
  for (std::size_t i = 0; i < kStatementCount; ++i) counts[i] += r.counts[i];
  violations.insert(violations.end(), r.violations.begin(), r.violations.end());
}

SweepReport sweep_graphs(const FamilySpec& family, std::span<const Graph> graphs, const SweepOptions& options,
                         std::string source) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.family = family.name();
  for (const auto& p : family.forbidden()) report.forbidden.push_back(p.name);
  report.source = std::move(source);
  if (options.audit) report.audit.emplace();

  const auto outcomes =
      options.workers > 1 ? evaluate_parallel(graphs, family, options) : evaluate_serial(graphs, family, options);

  std::map<int, LevelSummary> levels;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const GraphOutcome& o = outcomes[i];
    LevelSummary& level = levels[g.order()];
    level.n = g.order();
    ++level.examined;
    ++report.examined;
    if (!o.member) continue;
    ++level.members;
    ++report.members;
    if (o.bundle->slack < 0) {
      ++level.violations;
      report.violations.push_back({graph_to_graph6(g), *o.bundle, minimum_coloring(g)});
    } else if (o.bundle->slack == 0) {
      ++level.tight;
      ++report.tight;
      if (report.tight_exemplars.size() < options.exemplar_cap) report.tight_exemplars.push_back(graph_to_graph6(g));
    }
    if (o.audit) report.audit->merge(*o.audit);
  }
  for (auto& [n, level] : levels) report.levels.push_back(level);
  if (!report.levels.empty()) {
    report.n_min = report.levels.front().n;
    report.n_max = report.levels.back().n;
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport sweep(const FamilySpec& family, int n_max, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> all;
  for (auto& level : enumerate_graphs_through(n_max, options.workers))
    for (auto& g : level) all.push_back(std::move(g));
  SweepReport report = sweep_graphs(family, all, options, "enumerated");
  report.n_min = 0;
  report.n_max = n_max;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace reed
