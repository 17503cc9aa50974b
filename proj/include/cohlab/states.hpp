#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cohlab/linalg.hpp"

namespace cohlab {

using Dims = std::vector<std::size_t>;

// Positive semidefinite, unit-trace matrix together with the ordered list
// of subsystem dimensions. Construction validates Hermiticity, trace and
// the spectrum (all within 1e-9).
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, Dims dims);
  // Single system of dimension matrix.dim().
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return matrix_.dim(); }
  std::size_t subsystems() const { return dims_.size(); }

  // Reduced state on the listed subsystems.
  DensityMatrix reduced(std::initializer_list<std::size_t> keep) const;
  DensityMatrix reduced(std::span<const std::size_t> keep) const;

  double purity() const;

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

// Orthonormal reference basis; column k of the unitary is basis vector k.
class Basis {
 public:
  Basis(ComplexMatrix unitary, std::string label);

  const ComplexMatrix& unitary() const { return unitary_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return unitary_.dim(); }
  std::vector<Complex> vector(std::size_t k) const { return unitary_.column(k); }

 private:
  ComplexMatrix unitary_;
  std::string label_;
};

// Bell weights d_1..d_4, non-negative and summing to one within 1e-12.
struct BellDiagonalParams {
  std::array<double, 4> d;

  explicit BellDiagonalParams(std::array<double, 4> weights);
};

// Bound-entangled qutrit family parameter, 2 <= gamma <= 5.
struct HorodeckiParams {
  double gamma;

  explicit HorodeckiParams(double g);
};

// Ordering of the Bell vectors B1..B4.
//   PhiFirst: Phi+, Phi-, Psi+, Psi-
//   PhiOuter: Phi+, Psi+, Psi-, Phi-
enum class BellOrdering { PhiFirst, PhiOuter };

// Amplitude vector of Bell vector `index` (0-based) in the given ordering.
std::array<Complex, 4> bell_vector(BellOrdering ordering, std::size_t index);

Basis computational_basis(std::size_t d);
// Column a has entries exp(2 pi i j a / d) / sqrt(d).
Basis fourier_basis(std::size_t d);
Basis hadamard_basis();
// (|0> + i|1>)/sqrt2, (|0> - i|1>)/sqrt2
Basis circular_basis();
// Columns |i> (x) |j> in row-major order of (i, j).
Basis product_basis(const Basis& a, const Basis& b);

DensityMatrix maximally_coherent(std::size_t d);
DensityMatrix maximally_mixed(const Dims& dims);
DensityMatrix pure_state(std::span<const Complex> amplitudes, Dims dims);
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);
// sum_k w_k rho_k; all states must share dims.
DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states);

DensityMatrix bell_diagonal(const BellDiagonalParams& p, BellOrdering ordering);
DensityMatrix horodecki_state(const HorodeckiParams& p);
// Components of the Horodecki family: |psi+><psi+|, P+ and P-.
ComplexMatrix horodecki_psi_plus();
ComplexMatrix horodecki_p_plus();
ComplexMatrix horodecki_p_minus();

DensityMatrix random_pure(std::size_t d, std::uint64_t seed);
DensityMatrix random_pure(const Dims& dims, std::uint64_t seed);
DensityMatrix random_mixed(std::size_t d, std::uint64_t seed);
DensityMatrix random_mixed(const Dims& dims, std::uint64_t seed);
Basis random_basis(std::size_t d, std::uint64_t seed);

class Rng;
DensityMatrix random_pure(const Dims& dims, Rng& rng);
DensityMatrix random_mixed(const Dims& dims, Rng& rng);
Basis random_basis(std::size_t d, Rng& rng);

}  // namespace cohlab
