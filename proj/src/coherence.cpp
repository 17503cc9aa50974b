#include "cohlab/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cohlab/error.hpp"

namespace cohlab {

namespace {

constexpr double kClip = 1e-9;
constexpr double kProbClip = 1e-12;
constexpr double kProbSumTol = 1e-9;
constexpr double kBinaryGrace = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void require_basis_fits(const DensityMatrix& rho, const Basis& basis, const char* what) {
  if (basis.dim() != rho.dim()) {
    throw DimensionMismatch(std::string(what) + ": basis dimension " +
                            std::to_string(basis.dim()) + " does not match state dimension " +
                            std::to_string(rho.dim()));
  }
}

}  // namespace

MeasurementDistribution::MeasurementDistribution(std::vector<double> probabilities,
                                                 std::string basis_label)
    : probabilities_(std::move(probabilities)), basis_label_(std::move(basis_label)) {
  double sum = 0.0;
  for (double& p : probabilities_) {
    if (p < 0.0) {
      if (p < -kProbClip) {
        throw DomainError("MeasurementDistribution: negative probability " + std::to_string(p));
      }
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw DomainError("MeasurementDistribution: probabilities sum to " + std::to_string(sum));
  }
}

double entropy_of_spectrum(std::span<const double> values) {
  double h = 0.0;
  for (double x : values) {
    if (x < -kClip) throw NotPositive("entropy: eigenvalue " + std::to_string(x) + " < 0");
    h -= xlog2x(x);
  }
  // -0.0 and tiny negative round-off from a single unit eigenvalue.
  return h > 0.0 ? h : 0.0;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const std::vector<double> ev = hermitian_eigenvalues(rho.matrix());
  return entropy_of_spectrum(ev);
}

double shannon_entropy(const MeasurementDistribution& p) {
  return entropy_of_spectrum(p.probabilities());
}

double binary_entropy(double x) {
  if (!(x >= -kBinaryGrace && x <= 1.0 + kBinaryGrace)) {
    throw DomainError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  const double h = -xlog2x(x) - xlog2x(1.0 - x);
  return h > 0.0 ? h : 0.0;
}

MeasurementDistribution measure(const DensityMatrix& rho, const Basis& basis) {
  require_basis_fits(rho, basis, "measure");
  const std::size_t d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix& u = basis.unitary();
  std::vector<double> p(d);
  for (std::size_t k = 0; k < d; ++k) {
    // <k|rho|k> = sum_{rc} conj(u_rk) m_rc u_ck
    Complex acc = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      const Complex ur = std::conj(u(r, k));
      if (ur == Complex{}) continue;
      Complex row = 0.0;
      for (std::size_t c = 0; c < d; ++c) row += m(r, c) * u(c, k);
      acc += ur * row;
    }
    p[k] = acc.real();
  }
  return MeasurementDistribution(std::move(p), basis.label());
}

DensityMatrix dephase(const DensityMatrix& rho, const Basis& basis) {
  const MeasurementDistribution p = measure(rho, basis);
  const std::size_t d = rho.dim();
  const ComplexMatrix& u = basis.unitary();
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double pk = p.probabilities()[k];
    if (pk == 0.0) continue;
    for (std::size_t r = 0; r < d; ++r) {
      const Complex ur = u(r, k) * pk;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += ur * std::conj(u(c, k));
    }
  }
  return DensityMatrix(std::move(out), rho.dims());
}

double rel_ent_coherence(const DensityMatrix& rho, const Basis& basis) {
  // The dephased state is diagonal in `basis`, so its entropy is the
  // Shannon entropy of the outcome distribution.
  const double c = shannon_entropy(measure(rho, basis)) - von_neumann_entropy(rho);
  if (c < -kClip) {
    throw NotPositive("rel_ent_coherence: negative coherence " + std::to_string(c));
  }
  return c > 0.0 ? c : 0.0;
}

Basis product_basis_with_B_eigenbasis(const DensityMatrix& rho_ab, const Basis& basis_a) {
  if (rho_ab.subsystems() != 2) {
    throw DimensionMismatch("product_basis_with_B_eigenbasis: state has " +
                            std::to_string(rho_ab.subsystems()) + " subsystems, expected 2");
  }
  if (basis_a.dim() != rho_ab.dims()[0]) {
    throw DimensionMismatch("product_basis_with_B_eigenbasis: basis on A has dimension " +
                            std::to_string(basis_a.dim()) + ", subsystem A has " +
                            std::to_string(rho_ab.dims()[0]));
  }
  const DensityMatrix rho_b = rho_ab.reduced({1});
  const HermitianEigen eig = hermitian_eig(rho_b.matrix());
  return Basis(kron(basis_a.unitary(), eig.vectors), basis_a.label() + "*eig(B)");
}

}  // namespace cohlab
