#include <doctest.h>

#include <array>
#include <cmath>

#include "cohlab/error.hpp"
#include "cohlab/linalg.hpp"
#include "cohlab/rng.hpp"
#include "cohlab/states.hpp"
#include "oracles.hpp"

using namespace cohlab;
using doctest::Approx;

namespace {

const Complex I{0.0, 1.0};

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix g(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  return g + g.adjoint();
}

double reconstruction_error(const ComplexMatrix& m, const HermitianEigen& e) {
  ComplexMatrix rebuilt(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    rebuilt += e.values[k] * ComplexMatrix::outer(e.vectors.column(k));
  }
  return max_abs_diff(rebuilt, m);
}

}  // namespace

TEST_CASE("hermitian_eig: Pauli X") {
  const ComplexMatrix x{{0, 1}, {1, 0}};
  const auto e = hermitian_eig(x);
  CHECK(e.values[0] == Approx(-1.0).epsilon(1e-14));
  CHECK(e.values[1] == Approx(1.0).epsilon(1e-14));
  CHECK(reconstruction_error(x, e) < 1e-12);
}

TEST_CASE("hermitian_eig: diagonal input keeps identity eigenvectors") {
  const auto e = hermitian_eig(ComplexMatrix::diagonal({0.1, 0.9}));
  CHECK(e.values[0] == Approx(0.1));
  CHECK(e.values[1] == Approx(0.9));
  CHECK(max_abs_diff(e.vectors, ComplexMatrix::identity(2)) < 1e-14);
}

TEST_CASE("hermitian_eig: 3x3 with characteristic polynomial (x-1)^2 (x-3)") {
  const ComplexMatrix m{{2, I, 0}, {-I, 2, 0}, {0, 0, 1}};
  const auto e = hermitian_eig(m);
  CHECK(e.values[0] == Approx(1.0).epsilon(1e-12));
  CHECK(e.values[1] == Approx(1.0).epsilon(1e-12));
  CHECK(e.values[2] == Approx(3.0).epsilon(1e-12));
  CHECK(reconstruction_error(m, e) < 1e-12);
}

TEST_CASE("hermitian_eig: random matrices are diagonalised by a unitary") {
  Rng rng(11);
  for (std::size_t d : {2, 3, 4, 6, 9}) {
    for (int rep = 0; rep < 20; ++rep) {
      const ComplexMatrix m = random_hermitian(d, rng);
      const auto e = hermitian_eig(m);
      CHECK(reconstruction_error(m, e) < 1e-10);
      CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(d)) < 1e-12);
      for (std::size_t k = 1; k < d; ++k) CHECK(e.values[k - 1] <= e.values[k]);
    }
  }
}

TEST_CASE("hermitian_eig: 2x2 spectra match the closed form") {
  Rng rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const ComplexMatrix m = random_hermitian(2, rng);
    const auto ref = oracle::eig2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
    const auto got = hermitian_eigenvalues(m);
    CHECK(got[0] == Approx(ref[0]).epsilon(1e-12));
    CHECK(got[1] == Approx(ref[1]).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig: degenerate eigenspaces resolve to computational vectors") {
  // I/2 on a qubit: any basis diagonalises it, the tie-break picks e_0, e_1.
  const auto e = hermitian_eig(ComplexMatrix::diagonal({0.5, 0.5}));
  CHECK(max_abs_diff(e.vectors, ComplexMatrix::identity(2)) < 1e-12);

  // Degenerate pair inside a rotated frame: the vectors are the normalised
  // projections of e_0 then e_1, with a real positive leading entry.
  const ComplexMatrix m{{1, 0, 0}, {0, 1, 0}, {0, 0, 3}};
  const auto f = hermitian_eig(m);
  CHECK(max_abs_diff(f.vectors, ComplexMatrix::identity(3)) < 1e-12);

  const ComplexMatrix rotated{{2, I, 0}, {-I, 2, 0}, {0, 0, 1}};
  const auto g = hermitian_eig(rotated);
  // Eigenspace of 1 is span{(1, i, 0)/sqrt2, (0, 0, 1)}; projecting e_0 gives (1, i, 0)/sqrt2.
  CHECK(std::abs(g.vectors(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(g.vectors(1, 0) - I / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(g.vectors(2, 1) - 1.0) < 1e-12);
}

TEST_CASE("kron") {
  CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_abs_diff(kron(ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1})),
                     ComplexMatrix::diagonal({0, 1, 0, 0})) == 0.0);

  // (X (x) X) |00> = |11>
  const ComplexMatrix x{{0, 1}, {1, 0}};
  ComplexMatrix ket00(4);
  ket00(0, 0) = 1.0;
  const ComplexMatrix out = kron(x, x) * ket00;
  CHECK(out(3, 0) == Complex(1.0));
  CHECK(std::abs(out(0, 0)) == 0.0);
}

TEST_CASE("partial_trace") {
  const std::array<std::size_t, 2> dims{2, 2};
  const std::array<std::size_t, 1> keep_b{1};
  const std::array<std::size_t, 1> keep_a{0};

  SUBCASE("Bell state marginal is I/2") {
    const DensityMatrix bell = bell_diagonal(BellDiagonalParams({1, 0, 0, 0}), BellOrdering::PhiFirst);
    CHECK(max_abs_diff(partial_trace(bell.matrix(), dims, keep_b), ComplexMatrix::diagonal({0.5, 0.5})) <
          1e-15);
  }
  SUBCASE("product state returns its factor") {
    const DensityMatrix a = random_mixed(Dims{2}, 1);
    const DensityMatrix b = random_mixed(Dims{3}, 2);
    const std::array<std::size_t, 2> d23{2, 3};
    const ComplexMatrix ab = kron(a.matrix(), b.matrix());
    CHECK(max_abs_diff(partial_trace(ab, d23, keep_b), b.matrix()) < 1e-15);
    CHECK(max_abs_diff(partial_trace(ab, d23, keep_a), a.matrix()) < 1e-15);
  }
  SUBCASE("Horodecki state at gamma = 3 against an index loop") {
    const ComplexMatrix rho = horodecki_state(HorodeckiParams(3.0)).matrix();
    const oracle::Dense dense{9, {rho.entries().begin(), rho.entries().end()}};
    const oracle::Dense ref = oracle::trace_out_first(dense, 3, 3);
    const std::array<std::size_t, 2> d33{3, 3};
    const ComplexMatrix got = partial_trace(rho, d33, keep_b);
    double diag_sum = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(got(r, c) - ref(r, c)) < 1e-15);
      diag_sum += got(r, r).real();
    }
    CHECK(diag_sum == Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("random tripartite against the two-step loop") {
    const DensityMatrix rho = random_mixed(Dims{2, 3, 2}, 9);
    const std::array<std::size_t, 3> d{2, 3, 2};
    const std::array<std::size_t, 2> keep01{0, 1};
    const std::array<std::size_t, 1> keep0{0};
    const ComplexMatrix ab = partial_trace(rho.matrix(), d, keep01);
    const oracle::Dense dense{12, {rho.matrix().entries().begin(), rho.matrix().entries().end()}};
    const oracle::Dense ref_ab = oracle::trace_out_second(dense, 6, 2);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) CHECK(std::abs(ab(r, c) - ref_ab(r, c)) < 1e-15);
    const oracle::Dense ref_a = oracle::trace_out_second(ref_ab, 2, 3);
    const ComplexMatrix a = partial_trace(rho.matrix(), d, keep0);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(a(r, c) - ref_a(r, c)) < 1e-15);
  }
  SUBCASE("dimension mismatch") {
    const std::array<std::size_t, 2> wrong{2, 3};
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), wrong, keep_a), DimensionMismatch);
  }
}

TEST_CASE("partial_transpose of a Bell projector has eigenvalue -1/2") {
  const DensityMatrix bell = bell_diagonal(BellDiagonalParams({1, 0, 0, 0}), BellOrdering::PhiFirst);
  const std::array<std::size_t, 2> dims{2, 2};
  const auto ev = hermitian_eigenvalues(partial_transpose(bell.matrix(), dims, 1));
  CHECK(ev[0] == Approx(-0.5));
  CHECK(ev[3] == Approx(0.5));
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(ComplexMatrix::diagonal({1, 0}) - ComplexMatrix::diagonal({0.5, 0.5})) ==
        Approx(1.0));
  CHECK(trace_norm(ComplexMatrix(3)) == 0.0);
  const std::array<Complex, 2> plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  CHECK(trace_norm(ComplexMatrix::diagonal({0.5, 0.5}) - ComplexMatrix::outer(plus)) ==
        Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Rng streams are deterministic and distinct") {
  Rng a(42, 3), b(42, 3), c(42, 4);
  const auto x = a.next_u64();
  CHECK(x == b.next_u64());
  CHECK(x != c.next_u64());
  Rng base(1);
  CHECK(base.split(0).next_u64() != base.split(1).next_u64());
  CHECK(base.split(7).next_u64() == Rng(1).split(7).next_u64());
}
