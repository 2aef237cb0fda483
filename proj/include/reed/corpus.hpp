#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reed/auditor.hpp"
#include "reed/graph.hpp"
#include "reed/invariants.hpp"
#include "reed/patterns.hpp"

namespace reed {

inline constexpr int kMaxEnumerationOrder = 9;

/// One canonical representative per isomorphism class on n vertices (n <= 9), sorted by
/// canonical code. Classes on n vertices are produced by attaching a new vertex to every
/// class on n-1 vertices with every possible neighbourhood and deduplicating canonical forms.
/// This is the serial reference.
std::vector<Graph> enumerate_graphs(int n);

/// Same output as enumerate_graphs, with candidate canonicalisation spread over workers.
std::vector<Graph> enumerate_graphs_parallel(int n, int workers);

/// Classes for every order 0..n_max; index is the vertex count.
std::vector<std::vector<Graph>> enumerate_graphs_through(int n_max, int workers = 1);

enum class StreamPolicy { strict, lenient };

struct NumberedGraph {
  Graph graph;
  std::size_t line = 0;
};

struct StreamIssue {
  std::size_t line = 0;
  std::string message;
};

struct StreamResult {
  std::vector<NumberedGraph> graphs;
  std::vector<StreamIssue> skipped;
};

/// One graph6 string per line. Blank lines and lines starting with ">>" (other than a
/// ">>graph6<<" header followed by a graph) are ignored. Strict mode throws StreamError
/// on the first bad line; lenient mode records it and continues.
StreamResult read_graph6_stream(std::istream& in, StreamPolicy policy);

struct SweepOptions {
  bool audit = false;
  int workers = 1;
  std::size_t coloring_budget = kDefaultColoringBudget;
  std::size_t exemplar_cap = 16;
};

/// Result of evaluating one graph in a sweep.
struct GraphOutcome {
  bool member = false;
  std::optional<InvariantBundle> bundle;
  std::optional<AuditReport> audit;
};

GraphOutcome evaluate_graph(const Graph& g, const FamilySpec& family, const SweepOptions& options);

/// Serial reference kernel.
std::vector<GraphOutcome> evaluate_serial(std::span<const Graph> graphs, const FamilySpec& family,
                                          const SweepOptions& options);
/// OpenMP kernel; output is index-aligned with the input regardless of worker count.
std::vector<GraphOutcome> evaluate_parallel(std::span<const Graph> graphs, const FamilySpec& family,
                                            const SweepOptions& options);

struct LevelSummary {
  int n = 0;
  std::size_t examined = 0;
  std::size_t members = 0;
  std::size_t violations = 0;
  std::size_t tight = 0;

  friend bool operator==(const LevelSummary&, const LevelSummary&) = default;
};

struct ReedViolation {
  std::string graph6;
  InvariantBundle bundle;
  std::vector<int> coloring;
};

struct AuditSummary {
  std::array<StatusCounts, kStatementCount> counts{};
  std::size_t graphs = 0;
  std::size_t colorings = 0;
  std::size_t instances = 0;
  std::size_t truncated_graphs = 0;
  /// Member graphs with some examined colouring passing gate I at every vertex.
  std::size_t gate_every_vertex_graphs = 0;
  std::vector<AuditFinding> violations;

  const StatusCounts& operator[](Statement s) const { return counts[static_cast<std::size_t>(s)]; }
  void merge(const AuditReport& r);
};

struct SweepReport {
  std::string family;
  std::vector<std::string> forbidden;
  std::string source;
  int n_min = 0;
  int n_max = 0;
  std::size_t examined = 0;
  std::size_t members = 0;
  std::size_t tight = 0;
  std::vector<LevelSummary> levels;
  std::vector<ReedViolation> violations;
  std::vector<std::string> tight_exemplars;
  std::optional<AuditSummary> audit;
  double wall_time_ms = 0.0;
};

/// Sweeps every isomorphism class on 0..n_max vertices (n_max <= 9).
SweepReport sweep(const FamilySpec& family, int n_max, const SweepOptions& options);

/// Sweeps an explicit graph list (e.g. a graph6 stream). Graphs are processed in order.
SweepReport sweep_graphs(const FamilySpec& family, std::span<const Graph> graphs, const SweepOptions& options,
                         std::string source);

} // namespace reed
