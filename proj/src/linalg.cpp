#include "cohlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cohlab/error.hpp"

namespace cohlab {

namespace {

constexpr double kJacobiRelTol = 1e-12;
constexpr int kMaxSweeps = 100;
constexpr double kDegenerateGap = 1e-10;
constexpr double kPhaseThreshold = 1e-10;
// A projected computational vector shorter than this is treated as lying
// outside the cluster subspace.
constexpr double kSpanThreshold = 1e-6;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()) + " differ");
  }
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
  const double err = m.hermiticity_error();
  if (err > kHermitianTol) {
    throw NotHermitian(std::string(what) + ": matrix is not Hermitian (error " +
                       std::to_string(err) + ")");
  }
}

double max_off_diagonal(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = r + 1; c < a.dim(); ++c) best = std::max(best, std::abs(a(r, c)));
  }
  return best;
}

// One two-sided rotation zeroing a(p,q). The 2x2 unitary is
//   [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
// which first removes the phase of a(p,q) and then applies a real Jacobi
// rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c * std::conj(phase);

  const std::size_t n = a.dim();
  // A <- A U (columns p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  // A <- U^dagger A (rows p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

void fix_phase(std::vector<Complex>& vec) {
  for (const Complex& x : vec) {
    const double mag = std::abs(x);
    if (mag > kPhaseThreshold) {
      const Complex rot = std::conj(x) / mag;
      for (Complex& y : vec) y *= rot;
      return;
    }
  }
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

// <a|b>
Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

void orthogonalise_against(std::vector<Complex>& w, const std::vector<std::vector<Complex>>& basis) {
  // Two passes of classical Gram-Schmidt keep the result orthogonal to
  // working precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const Complex proj = inner(b, w);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= proj * b[k];
    }
  }
}

// Replaces the cluster's eigenvectors with the canonical spanning set.
std::vector<std::vector<Complex>> canonical_cluster_basis(
    const std::vector<std::vector<Complex>>& cluster) {
  const std::size_t d = cluster.front().size();
  const std::size_t m = cluster.size();
  std::vector<std::vector<Complex>> accepted;
  accepted.reserve(m);
  for (std::size_t j = 0; j < d && accepted.size() < m; ++j) {
    // P e_j = sum_k v_k conj(v_k[j])
    std::vector<Complex> w(d, 0.0);
    for (const auto& vk : cluster) {
      const Complex coeff = std::conj(vk[j]);
      for (std::size_t r = 0; r < d; ++r) w[r] += vk[r] * coeff;
    }
    orthogonalise_against(w, accepted);
    const double n = norm2(w);
    if (n <= kSpanThreshold) continue;
    for (Complex& x : w) x /= n;
    accepted.push_back(std::move(w));
  }
  if (accepted.size() < m) return cluster;
  return accepted;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionMismatch("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                            " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = values[k];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (Complex& x : out.entries_) x = std::conj(x);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& x : entries_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const Complex& x : entries_) best = std::max(best, std::abs(x));
  return best;
}

double ComplexMatrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return err;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_error() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& x : entries_) x *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return best;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eig");
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // Symmetrise so the rotations act on an exactly Hermitian matrix.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kJacobiRelTol * a.frobenius_norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (max_off_diagonal(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigen out;
  out.values.resize(n);
  std::vector<std::vector<Complex>> vecs(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    vecs[k] = v.column(order[k]);
  }

  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && out.values[end] - out.values[end - 1] < kDegenerateGap) ++end;
    if (end - start > 1) {
      std::vector<std::vector<Complex>> cluster(vecs.begin() + static_cast<std::ptrdiff_t>(start),
                                                vecs.begin() + static_cast<std::ptrdiff_t>(end));
      cluster = canonical_cluster_basis(cluster);
      for (std::size_t k = start; k < end; ++k) vecs[k] = std::move(cluster[k - start]);
    }
    start = end;
  }

  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    fix_phase(vecs[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = vecs[k][r];
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eig(m).values; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ar = 0; ar < da; ++ar) {
    for (std::size_t ac = 0; ac < da; ++ac) {
      const Complex x = a(ar, ac);
      if (x == Complex{}) continue;
      for (std::size_t br = 0; br < db; ++br) {
        for (std::size_t bc = 0; bc < db; ++bc) {
          out(ar * db + br, ac * db + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t nsys = dims.size();
  if (nsys == 0) throw DimensionMismatch("partial_trace: empty dimension list");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != m.dim()) {
    throw DimensionMismatch("partial_trace: dims multiply to " + std::to_string(total) +
                            " but matrix has dimension " + std::to_string(m.dim()));
  }
  if (keep.empty()) throw DimensionMismatch("partial_trace: keep set is empty");
  std::vector<bool> kept(nsys, false);
  for (std::size_t k : keep) {
    if (k >= nsys) {
      throw DimensionMismatch("partial_trace: subsystem index " + std::to_string(k) +
                              " out of range");
    }
    if (kept[k]) throw DimensionMismatch("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }

  // Row-major strides of the full tensor index.
  std::vector<std::size_t> stride(nsys);
  for (std::size_t s = nsys, acc = 1; s-- > 0;) {
    stride[s] = acc;
    acc *= dims[s];
  }
  std::size_t dkeep = 1;
  std::size_t dtrace = 1;
  std::vector<std::size_t> kept_sys;
  std::vector<std::size_t> traced_sys;
  for (std::size_t s = 0; s < nsys; ++s) {
    if (kept[s]) {
      kept_sys.push_back(s);
      dkeep *= dims[s];
    } else {
      traced_sys.push_back(s);
      dtrace *= dims[s];
    }
  }

  // Offset in the full index contributed by a composite index over a
  // subset of subsystems.
  auto offsets = [&](const std::vector<std::size_t>& systems, std::size_t count) {
    std::vector<std::size_t> off(count, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rem = idx;
      std::size_t o = 0;
      for (std::size_t j = systems.size(); j-- > 0;) {
        const std::size_t s = systems[j];
        o += (rem % dims[s]) * stride[s];
        rem /= dims[s];
      }
      off[idx] = o;
    }
    return off;
  };
  const std::vector<std::size_t> keep_off = offsets(kept_sys, dkeep);
  const std::vector<std::size_t> trace_off = offsets(traced_sys, dtrace);

  ComplexMatrix out(dkeep);
  for (std::size_t r = 0; r < dkeep; ++r) {
    for (std::size_t c = 0; c < dkeep; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dtrace; ++t) acc += m(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem) {
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != m.dim() || subsystem >= dims.size()) {
    throw DimensionMismatch("partial_transpose: inconsistent dimensions");
  }
  std::size_t inner_size = 1;
  for (std::size_t s = subsystem + 1; s < dims.size(); ++s) inner_size *= dims[s];
  const std::size_t ds = dims[subsystem];
  auto digit = [&](std::size_t idx) { return (idx / inner_size) % ds; };
  auto replace = [&](std::size_t idx, std::size_t value) {
    return idx - digit(idx) * inner_size + value * inner_size;
  };
  ComplexMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      out(replace(r, digit(c)), replace(c, digit(r))) = m(r, c);
    }
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  require_hermitian(m, "trace_norm");
  double s = 0.0;
  for (double x : hermitian_eigenvalues(m)) s += std::abs(x);
  return s;
}

}  // namespace cohlab
