#include "cohlab/lsdecomp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cohlab/coherence.hpp"
#include "cohlab/error.hpp"

namespace cohlab {

namespace {

constexpr double kReconstructionTol = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

std::size_t dominant_index(const BellDiagonalParams& p) {
  return static_cast<std::size_t>(std::max_element(p.d.begin(), p.d.end()) - p.d.begin());
}

ComplexMatrix horodecki_separable_part() {
  ComplexMatrix m = horodecki_psi_plus() * Complex(2.0 / 7.0);
  m += horodecki_p_plus() * Complex(3.0 / 7.0);
  m += horodecki_p_minus() * Complex(2.0 / 7.0);
  return m;
}

ComplexMatrix horodecki_entangled_part() {
  ComplexMatrix m = horodecki_psi_plus() * Complex(2.0 / 7.0);
  m += horodecki_p_plus() * Complex(5.0 / 7.0);
  return m;
}

}  // namespace

ComplexMatrix LSDecomposition::recompose() const {
  ComplexMatrix m = rho_s.matrix() * Complex(lambda);
  if (rho_e) m += rho_e->matrix() * Complex(1.0 - lambda);
  return m;
}

std::array<double, 4> ls_bell_separable_weights(const BellDiagonalParams& p) {
  const std::size_t k = dominant_index(p);
  const double d_max = p.d[k];
  if (d_max <= 0.5) return p.d;
  const double lambda = 2.0 * (1.0 - d_max);
  std::array<double, 4> w{};
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == k) {
      w[j] = 0.5;
    } else if (lambda > 0.0) {
      w[j] = p.d[j] / lambda;
    } else {
      // Pure Bell state: rho_s carries no weight, so any valid completion
      // works; spread the remaining half uniformly.
      w[j] = 0.5 / 3.0;
    }
  }
  return w;
}

LSDecomposition ls_bell_diagonal(const BellDiagonalParams& p, BellOrdering ordering) {
  const DensityMatrix rho = bell_diagonal(p, ordering);
  const std::size_t k = dominant_index(p);
  const double d_max = p.d[k];
  if (d_max <= 0.5) return ls_separable(rho);

  const double lambda = 2.0 * (1.0 - d_max);
  const DensityMatrix rho_s = bell_diagonal(BellDiagonalParams(ls_bell_separable_weights(p)), ordering);
  const auto vec = bell_vector(ordering, k);
  DensityMatrix rho_e(ComplexMatrix::outer(vec), Dims{2, 2});
  const double k_value = lambda * von_neumann_entropy(rho_s) + (1.0 - lambda) * von_neumann_entropy(rho_e);
  return LSDecomposition{lambda, rho_s, std::move(rho_e), k_value};
}

LSDecomposition ls_separable(const DensityMatrix& rho) {
  return LSDecomposition{1.0, rho, std::nullopt, von_neumann_entropy(rho)};
}

LSDecomposition ls_horodecki(const HorodeckiParams& p) {
  const double lambda = std::min(1.0, (5.0 - p.gamma) / 2.0);
  if (lambda >= 1.0) return ls_separable(horodecki_state(p));
  DensityMatrix rho_s(horodecki_separable_part(), Dims{3, 3});
  DensityMatrix rho_e(horodecki_entangled_part(), Dims{3, 3});
  const double k_value = lambda * von_neumann_entropy(rho_s) + (1.0 - lambda) * von_neumann_entropy(rho_e);
  return LSDecomposition{lambda, std::move(rho_s), std::move(rho_e), k_value};
}

HorodeckiKLine horodecki_k_line() {
  const double s_s = von_neumann_entropy(DensityMatrix(horodecki_separable_part(), Dims{3, 3}));
  const double s_e = von_neumann_entropy(DensityMatrix(horodecki_entangled_part(), Dims{3, 3}));
  return {s_e, s_s - s_e};
}

RelationReport upper_bound_ls(const DensityMatrix& rho, const LSDecomposition& ls, const Basis& b1,
                              const Basis& b2, double tol) {
  if (ls.rho_s.dim() != rho.dim()) {
    throw Mismatch("upper_bound_ls: decomposition dimension " + std::to_string(ls.rho_s.dim()) +
                   " differs from state dimension " + std::to_string(rho.dim()));
  }
  const double err = max_abs_diff(ls.recompose(), rho.matrix());
  if (err > kReconstructionTol) {
    throw Mismatch("upper_bound_ls: decomposition does not reconstruct the state (error " +
                   std::to_string(err) + ")");
  }
  const double c1 = rel_ent_coherence(rho, b1);
  const double c2 = rel_ent_coherence(rho, b2);
  const double log_dim = std::log2(static_cast<double>(rho.dim()));
  const double rhs = 2.0 * log_dim - 2.0 * ls.K;
  return make_report(RelationId::LsUpper, c1 + c2, rhs,
                     {{"C_1", c1}, {"C_2", c2}, {"lambda", ls.lambda}, {"K", ls.K},
                      {"log2_dAdB", log_dim}},
                     tol);
}

double bell_ls_bound_unit_factor(const BellDiagonalParams& p) {
  const double d1 = p.d[0];
  if (!(d1 > 0.5)) {
    throw InvalidParams("bell_ls_bound_unit_factor: requires d1 > 1/2, got " + std::to_string(d1));
  }
  const double rest = 1.0 - d1;
  double tail = 0.0;
  for (std::size_t i = 1; i < 4; ++i) tail += xlog2x(p.d[i]);
  // (1 - d1)(2 + log2(1 - d1)), finite as d1 -> 1
  return 4.0 - (2.0 * rest + xlog2x(rest)) + tail;
}

double bell_conditional_bound(const BellDiagonalParams& p) {
  double s = 0.0;
  for (double x : p.d) s += xlog2x(x);
  return 4.0 + 2.0 * s;
}

}  // namespace cohlab
