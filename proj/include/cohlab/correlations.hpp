#pragma once

#include <optional>

#include "cohlab/states.hpp"

namespace cohlab {

// S(A|B), I(A:B) and, for two qubits, the measured split I = J + D with
// projective measurements on B.
struct CorrelationSet {
  double conditional_entropy_AB;
  double mutual_information;
  std::optional<double> classical_correlation;
  std::optional<double> discord;
};

struct ConcurrenceValue {
  double value;
};

// Best measurement direction found on B, as a Bloch vector (polar, azimuth).
struct ClassicalCorrelationResult {
  double value;
  double grid_value;  // best value over the coarse grid alone
  double theta;
  double phi;
};

// Grid resolution of the measurement search.
inline constexpr int kDiscordGridAzimuthal = 64;
inline constexpr int kDiscordGridPolar = 32;

double conditional_entropy(const DensityMatrix& rho_ab);
double mutual_information(const DensityMatrix& rho_ab);

// J(A|B) = max over rank-1 projective measurements on B of
//   S(rho_A) - sum_b q_b S(rho_{A|b}).
// Two qubits only (Unsupported otherwise). Grid search over the Bloch
// sphere followed by Nelder-Mead refinement.
double classical_correlation_J(const DensityMatrix& rho_ab);
ClassicalCorrelationResult classical_correlation_search(const DensityMatrix& rho_ab);

// S(rho_A) - sum_b q_b S(rho_{A|b}) for the measurement on B along Bloch
// direction (theta, phi). Two qubits only.
double measured_information(const DensityMatrix& rho_ab, double theta, double phi);

CorrelationSet correlation_set(const DensityMatrix& rho_ab);

// Wootters concurrence of a two-qubit state.
ConcurrenceValue concurrence(const DensityMatrix& rho_ab);

}  // namespace cohlab
