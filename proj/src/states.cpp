#include "cohlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cohlab/error.hpp"
#include "cohlab/rng.hpp"

namespace cohlab {

namespace {

constexpr double kStateTol = 1e-9;
constexpr double kUnitaryTol = 1e-9;
constexpr double kWeightTol = 1e-12;

std::size_t product_of(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_dim_at_least_two(std::size_t d, const char* what) {
  if (d < 2) throw InvalidParams(std::string(what) + ": dimension must be >= 2");
}

ComplexMatrix normalised_outer(std::vector<Complex> v) {
  double n = 0.0;
  for (const Complex& x : v) n += std::norm(x);
  n = std::sqrt(n);
  for (Complex& x : v) x /= n;
  return ComplexMatrix::outer(v);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty() || product_of(dims_) != matrix_.dim()) {
    throw DimensionMismatch("DensityMatrix: subsystem dimensions do not multiply to " +
                            std::to_string(matrix_.dim()));
  }
  if (std::any_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; })) {
    throw DimensionMismatch("DensityMatrix: zero subsystem dimension");
  }
  const double herm = matrix_.hermiticity_error();
  if (herm > kStateTol) {
    throw NotHermitian("DensityMatrix: not Hermitian (error " + std::to_string(herm) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw InvalidParams("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const std::vector<double> ev = hermitian_eigenvalues(matrix_);
  if (!ev.empty() && ev.front() < -kStateTol) {
    throw NotPositive("DensityMatrix: negative eigenvalue " + std::to_string(ev.front()));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : DensityMatrix(matrix, Dims{matrix.dim()}) {}

DensityMatrix DensityMatrix::reduced(std::initializer_list<std::size_t> keep) const {
  return reduced(std::span<const std::size_t>(keep.begin(), keep.size()));
}

DensityMatrix DensityMatrix::reduced(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  ComplexMatrix m = partial_trace(matrix_, dims_, sorted);
  Dims sub;
  for (std::size_t k : sorted) sub.push_back(dims_[k]);
  return DensityMatrix(std::move(m), std::move(sub));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

Basis::Basis(ComplexMatrix unitary, std::string label)
    : unitary_(std::move(unitary)), label_(std::move(label)) {
  const double err =
      max_abs_diff(unitary_.adjoint() * unitary_, ComplexMatrix::identity(unitary_.dim()));
  if (err > kUnitaryTol) {
    throw InvalidParams("Basis '" + label_ + "': columns are not orthonormal (error " +
                        std::to_string(err) + ")");
  }
}

BellDiagonalParams::BellDiagonalParams(std::array<double, 4> weights) : d(weights) {
  double sum = 0.0;
  for (double x : d) {
    if (!(x >= 0.0)) throw InvalidParams("BellDiagonalParams: negative weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightTol) {
    throw InvalidParams("BellDiagonalParams: weights sum to " + std::to_string(sum));
  }
}

HorodeckiParams::HorodeckiParams(double g) : gamma(g) {
  if (!(g >= 2.0 && g <= 5.0)) {
    throw InvalidParams("HorodeckiParams: gamma must lie in [2, 5], got " + std::to_string(g));
  }
}

std::array<Complex, 4> bell_vector(BellOrdering ordering, std::size_t index) {
  const double h = M_SQRT1_2;
  const std::array<Complex, 4> phi_plus{h, 0, 0, h};
  const std::array<Complex, 4> phi_minus{h, 0, 0, -h};
  const std::array<Complex, 4> psi_plus{0, h, h, 0};
  const std::array<Complex, 4> psi_minus{0, h, -h, 0};
  if (index > 3) throw InvalidParams("bell_vector: index out of range");
  if (ordering == BellOrdering::PhiFirst) {
    const std::array<Complex, 4>* table[] = {&phi_plus, &phi_minus, &psi_plus, &psi_minus};
    return *table[index];
  }
  const std::array<Complex, 4>* table[] = {&phi_plus, &psi_plus, &psi_minus, &phi_minus};
  return *table[index];
}

Basis computational_basis(std::size_t d) {
  require_dim_at_least_two(d, "computational_basis");
  return Basis(ComplexMatrix::identity(d), "computational");
}

Basis fourier_basis(std::size_t d) {
  require_dim_at_least_two(d, "fourier_basis");
  ComplexMatrix u(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t a = 0; a < d; ++a) {
      // Reduce j*a mod d first so the angle stays small and exact for
      // the symmetric entries.
      const double angle = 2.0 * M_PI * static_cast<double>((j * a) % d) / static_cast<double>(d);
      u(j, a) = std::polar(scale, angle);
    }
  }
  return Basis(std::move(u), "fourier");
}

Basis hadamard_basis() {
  const double h = M_SQRT1_2;
  return Basis(ComplexMatrix{{h, h}, {h, -h}}, "hadamard");
}

Basis circular_basis() {
  const double h = M_SQRT1_2;
  const Complex ih{0.0, h};
  return Basis(ComplexMatrix{{h, h}, {ih, -ih}}, "circular");
}

Basis product_basis(const Basis& a, const Basis& b) {
  return Basis(kron(a.unitary(), b.unitary()), a.label() + "*" + b.label());
}

DensityMatrix maximally_coherent(std::size_t d) {
  require_dim_at_least_two(d, "maximally_coherent");
  ComplexMatrix m(d);
  const double v = 1.0 / static_cast<double>(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = v;
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed(const Dims& dims) {
  const std::size_t d = product_of(dims);
  return DensityMatrix(ComplexMatrix::identity(d) * Complex(1.0 / static_cast<double>(d)), dims);
}

DensityMatrix pure_state(std::span<const Complex> amplitudes, Dims dims) {
  return DensityMatrix(normalised_outer({amplitudes.begin(), amplitudes.end()}), std::move(dims));
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw DimensionMismatch("mixture: weights and states differ in length");
  }
  ComplexMatrix m(states.front().dim());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dims() != states.front().dims()) {
      throw DimensionMismatch("mixture: states have different subsystem dimensions");
    }
    m += states[k].matrix() * Complex(weights[k]);
  }
  return DensityMatrix(std::move(m), states.front().dims());
}

DensityMatrix bell_diagonal(const BellDiagonalParams& p, BellOrdering ordering) {
  ComplexMatrix m(4);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = bell_vector(ordering, k);
    m += ComplexMatrix::outer(v) * Complex(p.d[k]);
  }
  return DensityMatrix(std::move(m), Dims{2, 2});
}

ComplexMatrix horodecki_psi_plus() {
  std::vector<Complex> v(9, 0.0);
  const double s = 1.0 / std::sqrt(3.0);
  v[0] = s;  // |00>
  v[4] = s;  // |11>
  v[8] = s;  // |22>
  return ComplexMatrix::outer(v);
}

ComplexMatrix horodecki_p_plus() {
  // (|01><01| + |12><12| + |20><20|) / 3
  ComplexMatrix m(9);
  for (std::size_t idx : {1u, 5u, 6u}) m(idx, idx) = 1.0 / 3.0;
  return m;
}

ComplexMatrix horodecki_p_minus() {
  // (|10><10| + |21><21| + |02><02|) / 3
  ComplexMatrix m(9);
  for (std::size_t idx : {3u, 7u, 2u}) m(idx, idx) = 1.0 / 3.0;
  return m;
}

DensityMatrix horodecki_state(const HorodeckiParams& p) {
  ComplexMatrix m = horodecki_psi_plus() * Complex(2.0 / 7.0);
  m += horodecki_p_plus() * Complex(p.gamma / 7.0);
  m += horodecki_p_minus() * Complex((5.0 - p.gamma) / 7.0);
  return DensityMatrix(std::move(m), Dims{3, 3});
}

DensityMatrix random_pure(const Dims& dims, Rng& rng) {
  const std::size_t d = product_of(dims);
  require_dim_at_least_two(d, "random_pure");
  std::vector<Complex> v(d);
  for (Complex& x : v) x = rng.complex_gaussian();
  return DensityMatrix(normalised_outer(std::move(v)), dims);
}

DensityMatrix random_mixed(const Dims& dims, Rng& rng) {
  const std::size_t d = product_of(dims);
  require_dim_at_least_two(d, "random_mixed");
  ComplexMatrix g(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  }
  ComplexMatrix w = g * g.adjoint();
  const double tr = w.trace().real();
  w *= Complex(1.0 / tr);
  // G G^dagger is Hermitian only up to rounding; average it out.
  w = (w + w.adjoint()) * Complex(0.5);
  return DensityMatrix(std::move(w), dims);
}

Basis random_basis(std::size_t d, Rng& rng) {
  require_dim_at_least_two(d, "random_basis");
  // Gram-Schmidt QR of a Ginibre matrix; R gets a positive real diagonal,
  // which makes Q Haar distributed.
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) cols[c][r] = rng.complex_gaussian();
  }
  for (std::size_t c = 0; c < d; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < c; ++k) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < d; ++r) proj += std::conj(cols[k][r]) * cols[c][r];
        for (std::size_t r = 0; r < d; ++r) cols[c][r] -= proj * cols[k][r];
      }
    }
    double n = 0.0;
    for (const Complex& x : cols[c]) n += std::norm(x);
    n = std::sqrt(n);
    for (Complex& x : cols[c]) x /= n;
  }
  ComplexMatrix u(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) u(r, c) = cols[c][r];
  }
  return Basis(std::move(u), "random");
}

DensityMatrix random_pure(std::size_t d, std::uint64_t seed) { return random_pure(Dims{d}, seed); }

DensityMatrix random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dims, rng);
}

DensityMatrix random_mixed(std::size_t d, std::uint64_t seed) { return random_mixed(Dims{d}, seed); }

DensityMatrix random_mixed(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_mixed(dims, rng);
}

Basis random_basis(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  Basis b = random_basis(d, rng);
  return Basis(b.unitary(), "random:" + std::to_string(seed));
}

}  // namespace cohlab
