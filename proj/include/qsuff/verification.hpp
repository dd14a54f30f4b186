// verification.hpp - seeded property suites over random and constructed
// instances. Each check produces a record with a signed slack; a record
// passes when slack >= -tolerance.

#pragma once

#include "qsuff/measures.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace qsuff {

struct Tolerances {
  double structural = 1e-8;  // equalities that hold exactly in theory
  double inequality = 1e-9;  // slack floor for inequalities
  double limit = 1e-3;       // alpha -> 1 limits at |alpha - 1| = 1e-4
  double oracle = 1e-10;     // diagonal instances vs the classical oracle
  double converse = 1e-6;    // positivity floor on non-sufficient triples
};

struct SuiteConfig {
  std::size_t trials = 100;
  Dims dims{2, 2, 2};
  std::uint64_t seed = 42;
  Tolerances tol;
  std::vector<double> petz_grid{0.25, 0.5, 0.75, 1.25, 1.5, 1.75};
  std::vector<double> sandwiched_grid{0.6, 0.75, 0.9, 1.5, 2.0, 3.0, 5.0};
  std::size_t structured_trials = 20;
  std::size_t converse_trials = 50;
  std::size_t channel_in = 4;
  std::size_t channel_out = 3;
  std::size_t channel_kraus = 3;
  /// Minimum Petz round-trip distance for a triple to count as non-sufficient.
  double non_sufficient_distance = 0.05;
};

/// Throws InvalidArgument when trials == 0, a tolerance is not positive or
/// dims does not have three entries.
void validate_config(const SuiteConfig& cfg);

enum class Relation { at_most, at_least, near };

std::string_view to_string(Relation r) noexcept;

struct CheckRecord {
  std::string check;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  double value = 0.0;
  double bound = 0.0;
  Relation relation = Relation::at_most;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// at_most: slack = bound - value; at_least: value - bound; near: -|value - bound|.
CheckRecord make_record(std::string check, std::uint64_t seed, std::optional<double> alpha,
                        double value, double bound, Relation relation, double tolerance);

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;

  double worst_slack() const;
  /// Record with the smallest slack, or nullptr for an empty report.
  const CheckRecord* worst() const;
  bool all_pass() const;
  void append(const VerificationReport& other);
};

struct CheckSummary {
  std::string check;
  std::size_t count = 0;
  std::size_t passed = 0;
  double worst_slack = 0.0;
};

/// Per-check aggregates in order of first appearance.
std::vector<CheckSummary> summarize(const VerificationReport& report);

/// Aligned text table of summarize(report) followed by a verdict line.
std::string format_table(const VerificationReport& report);

VerificationReport trace_inequality_suite(const SuiteConfig& cfg);
VerificationReport characterization_suite(const SuiteConfig& cfg);
VerificationReport limit_suite(const SuiteConfig& cfg);
VerificationReport inequality_suite(const SuiteConfig& cfg);
VerificationReport classical_suite(const SuiteConfig& cfg);
VerificationReport all_suites(const SuiteConfig& cfg);

/// Throws InvalidArgument for an unknown name. Names: trace,
/// characterization, limits, inequalities, classical, all.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Non-negativity and trace inequalities for one given tripartite state.
VerificationReport state_suite(const TripartiteState& s, const SuiteConfig& cfg);

/// Tr{(A B^p A^dagger)^(1/p)}.
double concavity_functional(const Matrix& a, const Matrix& b, double p);

/// ||X^(1/(1-a)) - exp(ln rho_AC + ln rho_BC - ln rho_C)||_inf, X = cmi_petz_bracket.
double lie_trotter_deviation(const TripartiteState& s, double alpha);

/// Tr{exp(ln rho_AC + ln rho_BC - ln rho_C)}.
double exp_trace_cmi(const TripartiteState& s);
/// Tr{exp(ln sigma + N^dagger(ln N(rho) - ln N(sigma)))}.
double exp_trace_channel(const ChannelTriple& t);

}  // namespace qsuff
