#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cohlab/coherence.hpp"
#include "cohlab/error.hpp"
#include "cohlab/rng.hpp"
#include "cohlab/states.hpp"
#include "oracles.hpp"

using namespace cohlab;
using doctest::Approx;

namespace {

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).front(); }

double unitarity_error(const Basis& b) {
  return max_abs_diff(b.unitary().adjoint() * b.unitary(), ComplexMatrix::identity(b.dim()));
}

}  // namespace

TEST_CASE("computational and Fourier bases") {
  CHECK(max_abs_diff(computational_basis(2).unitary(), ComplexMatrix::identity(2)) == 0.0);
  CHECK(max_abs_diff(computational_basis(3).unitary(), ComplexMatrix::identity(3)) == 0.0);

  const Basis f2 = fourier_basis(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2.unitary()(0, 0) - s) < 1e-15);
  CHECK(std::abs(f2.unitary()(1, 0) - s) < 1e-15);
  CHECK(std::abs(f2.unitary()(0, 1) - s) < 1e-15);
  CHECK(std::abs(f2.unitary()(1, 1) + s) < 1e-15);

  const Basis f3 = fourier_basis(3);
  for (Complex z : f3.unitary().entries()) CHECK(std::abs(z) == Approx(1.0 / std::sqrt(3.0)));
  for (std::size_t d = 2; d <= 9; ++d) CHECK(unitarity_error(fourier_basis(d)) < 1e-12);
}

TEST_CASE("Basis rejects non-unitary input") {
  CHECK_THROWS_AS(Basis(ComplexMatrix::diagonal({1.0, 2.0}), "bad"), InvalidParams);
}

TEST_CASE("maximally_coherent") {
  const DensityMatrix plus = maximally_coherent(2);
  CHECK(rel_ent_coherence(plus, computational_basis(2)) == Approx(1.0).epsilon(1e-12));
  CHECK(rel_ent_coherence(maximally_coherent(4), computational_basis(4)) == Approx(2.0).epsilon(1e-12));
  CHECK(maximally_coherent(5).purity() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bell_diagonal") {
  SUBCASE("single Bell projector has corner entries 1/2") {
    const ComplexMatrix m =
        bell_diagonal(BellDiagonalParams({1, 0, 0, 0}), BellOrdering::PhiFirst).matrix();
    for (std::size_t r : {0u, 3u})
      for (std::size_t c : {0u, 3u}) CHECK(m(r, c).real() == Approx(0.5));
    CHECK(std::abs(m(1, 1)) < 1e-15);
    CHECK(std::abs(m(1, 2)) < 1e-15);
  }
  SUBCASE("spectrum is the weight vector") {
    for (BellOrdering o : {BellOrdering::PhiFirst, BellOrdering::PhiOuter}) {
      const auto ev = hermitian_eigenvalues(bell_diagonal(BellDiagonalParams({0.6, 0.2, 0.1, 0.1}), o).matrix());
      CHECK(ev[0] == Approx(0.1).epsilon(1e-12));
      CHECK(ev[1] == Approx(0.1).epsilon(1e-12));
      CHECK(ev[2] == Approx(0.2).epsilon(1e-12));
      CHECK(ev[3] == Approx(0.6).epsilon(1e-12));
    }
  }
  SUBCASE("uniform weights give I/4") {
    const ComplexMatrix m =
        bell_diagonal(BellDiagonalParams({0.25, 0.25, 0.25, 0.25}), BellOrdering::PhiOuter).matrix();
    CHECK(max_abs_diff(m, ComplexMatrix::identity(4) * Complex(0.25)) < 1e-15);
  }
  SUBCASE("the two orderings permute the same four vectors") {
    // Second ordering: Phi+, Psi+, Psi-, Phi-.
    const int map[4] = {0, 2, 3, 1};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto a = bell_vector(BellOrdering::PhiOuter, k);
      const auto b = bell_vector(BellOrdering::PhiFirst, map[k]);
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(a[i]) * b[i];
      CHECK(std::abs(overlap) == Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("weights must sum to one") {
    CHECK_THROWS_AS(BellDiagonalParams({0.5, 0.2, 0.1, 0.1}), InvalidParams);
    CHECK_THROWS_AS(BellDiagonalParams({1.2, -0.2, 0.0, 0.0}), InvalidParams);
  }
}

TEST_CASE("horodecki_state") {
  SUBCASE("gamma = 5 carries no P- weight") {
    const ComplexMatrix m = horodecki_state(HorodeckiParams(5.0)).matrix();
    const ComplexMatrix expected =
        Complex(2.0 / 7.0) * horodecki_psi_plus() + Complex(5.0 / 7.0) * horodecki_p_plus();
    CHECK(max_abs_diff(m, expected) < 1e-15);
  }
  SUBCASE("gamma = 3.5 has maximally mixed marginals") {
    const DensityMatrix rho = horodecki_state(HorodeckiParams(3.5));
    CHECK(rho.matrix().trace().real() == Approx(1.0).epsilon(1e-14));
    CHECK(min_eigenvalue(rho.matrix()) > -1e-14);
    const ComplexMatrix third = ComplexMatrix::identity(3) * Complex(1.0 / 3.0);
    const oracle::Dense dense{9, {rho.matrix().entries().begin(), rho.matrix().entries().end()}};
    const oracle::Dense a = oracle::trace_out_second(dense, 3, 3);
    const oracle::Dense b = oracle::trace_out_first(dense, 3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        CHECK(std::abs(a(r, c) - third(r, c)) < 1e-15);
        CHECK(std::abs(b(r, c) - third(r, c)) < 1e-15);
      }
    }
    CHECK(max_abs_diff(rho.reduced({0}).matrix(), third) < 1e-15);
    CHECK(max_abs_diff(rho.reduced({1}).matrix(), third) < 1e-15);
  }
  SUBCASE("gamma = 2 spectrum") {
    const auto ev = hermitian_eigenvalues(horodecki_state(HorodeckiParams(2.0)).matrix());
    std::vector<double> expected{0, 0, 2.0 / 21, 2.0 / 21, 2.0 / 21, 1.0 / 7, 1.0 / 7, 1.0 / 7, 2.0 / 7};
    for (std::size_t k = 0; k < 9; ++k) CHECK(ev[k] == Approx(expected[k]).epsilon(1e-12));
  }
  SUBCASE("gamma outside [2, 5]") {
    CHECK_THROWS_AS(HorodeckiParams(1.9), InvalidParams);
    CHECK_THROWS_AS(HorodeckiParams(5.1), InvalidParams);
  }
}

TEST_CASE("random_pure") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_pure(std::size_t{3}, seed);
    CHECK(rho.matrix().trace().real() == Approx(1.0).epsilon(1e-12));
    CHECK(rho.purity() == Approx(1.0).epsilon(1e-9));
  }
  CHECK(max_abs_diff(random_pure(std::size_t{2}, 42).matrix(), random_pure(std::size_t{2}, 42).matrix()) == 0.0);
  CHECK(max_abs_diff(random_pure(std::size_t{2}, 42).matrix(), random_pure(std::size_t{2}, 43).matrix()) > 0.0);
}

TEST_CASE("random_pure: Haar first moment of <0|rho|0>") {
  for (std::size_t d : {2, 3, 4}) {
    const int n = 10000;
    double sum = 0.0;
    for (int s = 0; s < n; ++s) sum += random_pure(d, static_cast<std::uint64_t>(s)).matrix()(0, 0).real();
    // Var |<0|psi>|^2 = (d - 1) / (d^2 (d + 1)) for Haar states.
    const double sigma = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / n);
    CHECK(std::abs(sum / n - 1.0 / d) < 3.0 * sigma);
  }
}

TEST_CASE("random_mixed") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_mixed(std::size_t{3}, seed);
    CHECK(rho.matrix().trace().real() == Approx(1.0).epsilon(1e-12));
    CHECK(min_eigenvalue(rho.matrix()) > 1e-12);
  }
  CHECK(max_abs_diff(random_mixed(std::size_t{4}, 8).matrix(), random_mixed(std::size_t{4}, 8).matrix()) == 0.0);
}

TEST_CASE("random_basis") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(unitarity_error(random_basis(4, seed)) < 1e-9);
  CHECK(max_abs_diff(random_basis(3, 5).unitary(), random_basis(3, 5).unitary()) == 0.0);
  CHECK(random_basis(3, 5).label() == "random:5");

  for (std::size_t d : {2, 3}) {
    const int n = 10000;
    double sum = 0.0;
    for (int s = 0; s < n; ++s) sum += std::norm(random_basis(d, static_cast<std::uint64_t>(s)).unitary()(0, 0));
    const double sigma = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / n);
    CHECK(std::abs(sum / n - 1.0 / d) < 3.0 * sigma);
  }
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), NotHermitian);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({0.7, 0.7})), InvalidParams);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2})), NotPositive);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25), Dims{2, 3}), DimensionMismatch);
}

TEST_CASE("mixture and product_state") {
  const DensityMatrix a = random_mixed(std::size_t{2}, 1);
  const DensityMatrix b = random_pure(std::size_t{3}, 2);
  const DensityMatrix ab = product_state(a, b);
  CHECK(ab.dims() == Dims{2, 3});
  CHECK(max_abs_diff(ab.reduced({1}).matrix(), b.matrix()) < 1e-14);

  const std::vector<double> w{0.25, 0.75};
  const std::vector<DensityMatrix> states{a, maximally_mixed(Dims{2})};
  const DensityMatrix m = mixture(w, states);
  CHECK(max_abs_diff(m.matrix(), Complex(0.25) * a.matrix() + Complex(0.375) * ComplexMatrix::identity(2)) <
        1e-15);
}
