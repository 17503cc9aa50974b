#pragma once

// Command implementations behind the `cohlab` executable. Each command
// writes human-readable text and JSON lines to `out`, diagnostics to `err`,
// and returns the process exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohlab/relations.hpp"
#include "cohlab/states.hpp"

namespace cohlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;

enum class Command { Check, Fuzz, Examples, Figure1 };

struct RunConfig {
  Command command = Command::Check;
  std::vector<std::string> relations;
  // Path to a JSON state file, or a preset: bell:d1,d2,d3,d4 (PhiFirst
  // ordering), bell2:d1,d2,d3,d4 (PhiOuter), horodecki:gamma.
  std::string state;
  std::string basis_a = "computational";
  std::string basis_b = "fourier";
  // Bases for the multi-basis relations; defaults to {basis_a, basis_b}.
  std::vector<std::string> bases;
  std::uint64_t seed = 7;
  std::uint64_t trials = 10000;
  std::uint64_t first_trial = 0;
  std::filesystem::path output;
  double tolerance = kSlackTol;
  // Test hook: negate the slack of this relation during fuzzing.
  std::optional<std::string> inject_flip;
};

// Throws InvalidParams when trials < 1 or tolerance <= 0.
void validate(const RunConfig& config);

// COHLAB_TOL when set and valid, otherwise `fallback`.
double tolerance_from_env(double fallback = kSlackTol);

// Resolves a basis name at dimension d: computational, fourier, hadamard
// (d = 2), circular (d = 2), random:<seed>, or a path to a JSON unitary.
Basis resolve_basis(std::string_view spec, std::size_t d);

// Loads a state file or builds a preset (see RunConfig::state).
DensityMatrix resolve_state(std::string_view spec);

// Human-readable block followed by one JSON line.
void print_report(std::ostream& out, const RelationReport& report);
std::string report_json(const RelationReport& report);

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_examples(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fuzz(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_figure1(const RunConfig& config, std::ostream& out, std::ostream& err);

// --- building blocks shared with the test suites --------------------------

struct ExampleRow {
  std::string quantity;
  double computed;
  double reference;
  double tolerance;
  // Documented discrepancy rows are reported but excluded from pass/fail.
  bool discrepancy;

  double delta() const;
  bool passes() const;
};
std::vector<ExampleRow> example_rows();

struct FuzzSummary {
  RelationId relation;
  std::uint64_t trials;
  double min_slack;
  std::uint64_t worst_trial;
  std::uint64_t violations;
};
// Runs trials [first_trial, first_trial + trials) of one relation.
FuzzSummary fuzz_relation(RelationId relation, std::uint64_t seed, std::uint64_t first_trial,
                          std::uint64_t trials, double tolerance, bool flip_sign = false);

struct FigureRow {
  double d3;
  double lhs;
  double rhs_eq27;
  double rhs_eq18;
  double rhs_eq28;
};
inline constexpr std::string_view kFigureHeader = "d3,lhs,rhs_eq27,rhs_eq18,rhs_eq28";
inline constexpr int kFigurePoints = 201;
// Sweep of d3 over [1e-6, 1 - d1 - d2 - 1e-6] with d4 = 1 - d1 - d2 - d3.
std::vector<FigureRow> figure_panel(double d1, double d2, int points = kFigurePoints);
std::string figure_csv(const std::vector<FigureRow>& rows);

}  // namespace cohlab::cli
