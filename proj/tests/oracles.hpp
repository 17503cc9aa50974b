#pragma once

// Reference computations that share no numerics with the library: scalar
// entropies, closed-form 2x2 spectra, index-loop partial traces and a dense
// brute-force search over qubit measurements.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

inline double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

inline double binary(double x) { return shannon({x, 1.0 - x}); }

// Eigenvalues of [[a, b], [conj(b), d]].
inline std::array<double, 2> eig2(double a, double d, cd b) {
  const double mean = 0.5 * (a + d);
  const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean - r, mean + r};
}

// Row-major d x d matrix.
struct Dense {
  std::size_t d;
  std::vector<cd> a;
  cd operator()(std::size_t r, std::size_t c) const { return a[r * d + c]; }
};

// Tr_B of a (dA dB) x (dA dB) matrix, written as an explicit index loop.
inline Dense trace_out_second(const Dense& m, std::size_t da, std::size_t db) {
  Dense out{da, std::vector<cd>(da * da)};
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k) out.a[i * da + j] += m(i * db + k, j * db + k);
  return out;
}

inline Dense trace_out_first(const Dense& m, std::size_t da, std::size_t db) {
  Dense out{db, std::vector<cd>(db * db)};
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k) out.a[i * db + j] += m(k * db + i, k * db + j);
  return out;
}

inline double entropy2(const Dense& m) {
  const auto ev = eig2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
  return shannon({std::max(ev[0], 0.0), std::max(ev[1], 0.0)});
}

// S(A) - sum_k p_k S(rho_A|k) for the projective measurement of qubit B
// along Bloch direction (theta, phi).
inline double measured_info(const Dense& rho, double theta, double phi) {
  const std::array<cd, 2> up{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
  const std::array<cd, 2> dn{-std::conj(up[1]), std::conj(up[0])};
  double avg = 0.0;
  for (const auto& v : {up, dn}) {
    // (I (x) <v|) rho (I (x) |v>)
    Dense cond{2, std::vector<cd>(4)};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l)
            cond.a[i * 2 + j] += std::conj(v[k]) * rho(i * 2 + k, j * 2 + l) * v[l];
    const double p = (cond(0, 0) + cond(1, 1)).real();
    if (p <= 1e-15) continue;
    for (auto& x : cond.a) x /= p;
    avg += p * entropy2(cond);
  }
  return entropy2(trace_out_second(rho, 2, 2)) - avg;
}

// Maximum of measured_info over an n_theta x n_phi grid covering every
// measurement axis once (theta in [0, pi], phi in [0, pi)).
inline double brute_force_J(const Dense& rho, int n_theta, int n_phi) {
  double best = -1.0;
  for (int i = 0; i < n_theta; ++i) {
    const double th = std::numbers::pi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      best = std::max(best, measured_info(rho, th, std::numbers::pi * j / n_phi));
    }
  }
  return best;
}

}  // namespace oracle
