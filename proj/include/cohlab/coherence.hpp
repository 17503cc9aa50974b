#pragma once

// Entropies (all in bits) and the relative entropy of coherence
//   C(rho) = S(dephase(rho)) - S(rho)
// with respect to an arbitrary reference basis.

#include <span>
#include <string>
#include <vector>

#include "cohlab/states.hpp"

namespace cohlab {

// Outcome probabilities of a projective measurement in `basis_label`.
// Entries down to -1e-12 are clipped to zero; the sum must be 1 within 1e-9.
class MeasurementDistribution {
 public:
  MeasurementDistribution(std::vector<double> probabilities, std::string basis_label = {});

  const std::vector<double>& probabilities() const { return probabilities_; }
  const std::string& basis_label() const { return basis_label_; }

 private:
  std::vector<double> probabilities_;
  std::string basis_label_;
};

// -sum x log2 x over a spectrum. Values in [-1e-9, 0) count as zero; anything
// more negative throws NotPositive.
double entropy_of_spectrum(std::span<const double> values);

double von_neumann_entropy(const DensityMatrix& rho);
double shannon_entropy(const MeasurementDistribution& p);
// Throws DomainError outside [0, 1] (1e-12 grace).
double binary_entropy(double x);

// <k|rho|k> for each basis vector |k>.
MeasurementDistribution measure(const DensityMatrix& rho, const Basis& basis);

// Diagonal part of rho in `basis`, expressed back in the computational
// representation: sum_k p_k |k><k|. Throws DimensionMismatch.
DensityMatrix dephase(const DensityMatrix& rho, const Basis& basis);

// Clipped at zero; values below -1e-9 indicate a numerical fault and throw.
double rel_ent_coherence(const DensityMatrix& rho, const Basis& basis);

// Basis |i> (x) |mu> on A (x) B where |mu> are the eigenvectors of Tr_A rho_AB
// (with hermitian_eig's deterministic tie-break).
Basis product_basis_with_B_eigenbasis(const DensityMatrix& rho_ab, const Basis& basis_a);

}  // namespace cohlab
