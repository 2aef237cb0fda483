#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reed/coloring.hpp"
#include "reed/decomposition.hpp"
#include "reed/graph.hpp"

namespace reed {

/// Proof steps checked on concrete (graph, colouring, apex) instances.
enum class Statement { gate_I, s1, s2, s3, s4, claim, final_bound };
inline constexpr std::size_t kStatementCount = 7;

enum class Status { hypotheses_unmet, holds, violated, gate_failed };

std::string_view to_string(Statement s);
std::string_view to_string(Status s);
Statement statement_from_string(std::string_view s);
Status status_from_string(std::string_view s);

/// Enough to re-run one check: the graph, the apex (absent for whole-colouring checks),
/// the colour vector and the vertex tuple that selects the pair or triple.
struct Certificate {
  std::string graph6;
  std::optional<Vertex> u;
  std::vector<int> colors;
  std::vector<Vertex> tuple;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct AuditFinding {
  Statement statement = Statement::gate_I;
  Status status = Status::hypotheses_unmet;
  /// Name of the failed hypothesis when status is hypotheses_unmet.
  std::string unmet_hypothesis;
  /// Completeness sub-check evaluated regardless of hypotheses (statement 4 and the claim).
  std::optional<bool> informational;
  Certificate certificate;
};

struct StatusCounts {
  std::size_t hypotheses_unmet = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t gate_failed = 0;

  std::size_t total() const { return hypotheses_unmet + holds + violated + gate_failed; }
  void add(Status s);
  StatusCounts& operator+=(const StatusCounts& o);
  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct AuditReport {
  std::string graph6;
  std::size_t colorings = 0;
  bool colorings_truncated = false;
  /// (apex, colouring) pairs examined.
  std::size_t instances = 0;
  std::array<StatusCounts, kStatementCount> counts{};
  /// Colourings under which gate I passes at every vertex.
  std::size_t gate_every_vertex = 0;
  std::vector<AuditFinding> violations;

  const StatusCounts& operator[](Statement s) const { return counts[static_cast<std::size_t>(s)]; }
  std::size_t violated_total() const;
  void record(const AuditFinding& f);
};

/// Colourings examined per graph: every canonical optimal colouring when n <= 7 (up to
/// budget), otherwise first-fit along each rotation of the vertex order, keeping those that
/// use exactly chi colours, falling back to one exact minimum colouring.
ColoringEnumeration audit_colorings(const Graph& g, std::size_t budget);

inline constexpr std::size_t kDefaultColoringBudget = 10000;

/// Per-graph checker; caches delta, omega and chi.
class Auditor {
public:
  explicit Auditor(const Graph& g);

  const Graph& graph() const { return g_; }
  int delta() const { return delta_; }
  int omega() const { return omega_; }
  int chi() const { return chi_; }
  int bound() const { return bound_; }

  /// deg u >= |R| + 2(bound - |R|) and |R| >= omega + 1. Requires a proper chi-colouring.
  bool gate_passes(const Coloring& c, Vertex u) const;

  AuditFinding gate_I(const Coloring& c, Vertex u) const;
  AuditFinding statement_1(const Coloring& c, Vertex u) const;
  std::vector<AuditFinding> statement_2(const Coloring& c, Vertex u) const;
  AuditFinding statement_2_pair(const Coloring& c, Vertex u, Vertex t, Vertex t_prime) const;
  std::vector<AuditFinding> statement_3(const Coloring& c, Vertex u) const;
  AuditFinding statement_3_triple(const Coloring& c, Vertex u, Vertex t, Vertex t1, Vertex t2) const;
  AuditFinding statement_4(const Coloring& c, Vertex u) const;
  AuditFinding claim(const Coloring& c, Vertex u) const;
  /// Whole-colouring check: if gate I passes at every vertex, chi must still respect the bound.
  AuditFinding final_bound(const Coloring& c) const;

private:
  AuditFinding make(Statement s, const Coloring& c, std::optional<Vertex> u) const;
  void require_proper(const Coloring& c) const;
  void require_optimal(const Coloring& c) const;
  int count_colored_neighbors(const Coloring& c, Vertex v, int color) const;

  Graph g_;
  std::string graph6_;
  int delta_ = 0;
  int omega_ = 0;
  int chi_ = 0;
  int bound_ = 0;
};

AuditFinding check_gate_I(const Graph& g, const Coloring& c, Vertex u);
AuditFinding check_statement_1(const Graph& g, const Coloring& c, Vertex u);
std::vector<AuditFinding> check_statement_2(const Graph& g, const Coloring& c, Vertex u);
std::vector<AuditFinding> check_statement_3(const Graph& g, const Coloring& c, Vertex u);
AuditFinding check_statement_4(const Graph& g, const Coloring& c, Vertex u);
AuditFinding check_claim(const Graph& g, const Coloring& c, Vertex u);

AuditReport audit_graph(const Graph& g, std::size_t coloring_budget = kDefaultColoringBudget);

/// Re-evaluates the single check named by a finding's certificate.
AuditFinding replay(const AuditFinding& finding);

} // namespace reed
