#pragma once

// Dense complex linear algebra for the small matrices used throughout the
// library (dimension up to ~81). Everything is value-semantic.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cohlab {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-9;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  // Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  // |v><v| for an amplitude vector v.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }

  std::vector<Complex> column(std::size_t c) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  double frobenius_norm() const;
  double max_abs() const;
  // max |M[j,k] - conj(M[k,j])|
  double hermiticity_error() const;
  bool is_hermitian(double tol = kHermitianTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Max-entry distance between two matrices of equal dimension.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues ascending; column k of `vectors` belongs to `values[k]`.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi. Eigenvectors inside near-degenerate clusters
// (gap < 1e-10) are made deterministic: the cluster subspace is spanned by
// projecting computational basis vectors in index order and Gram-Schmidt
// orthonormalising them. Every vector's first component above 1e-10 in
// magnitude is made real positive.
//
// Throws NotHermitian when M fails the 1e-9 Hermiticity check.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

// Eigenvalues only, same ordering as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix on the subsystems listed in `keep` (any order; the result
// keeps them in ascending subsystem order). Throws DimensionMismatch.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

// Transpose of the listed subsystem only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem);

// Sum of |eigenvalues| of a Hermitian matrix. Throws NotHermitian.
double trace_norm(const ComplexMatrix& m);

// f applied to the spectrum: V diag(f(lambda)) V^dagger.
template <class F>
ComplexMatrix apply_spectral(const ComplexMatrix& m, F&& f) {
  const HermitianEigen eig = hermitian_eig(m);
  const std::size_t d = m.dim();
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double fk = f(eig.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t r = 0; r < d; ++r) {
      const Complex vr = eig.vectors(r, k) * fk;
      for (std::size_t c = 0; c < d; ++c) {
        out(r, c) += vr * std::conj(eig.vectors(c, k));
      }
    }
  }
  return out;
}

}  // namespace cohlab
