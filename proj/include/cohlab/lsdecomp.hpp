#pragma once

// Closed-form Lewenstein-Sanpera decompositions rho = lambda rho_s +
// (1 - lambda) rho_e for Bell-diagonal two-qubit states and the Horodecki
// bound-entangled qutrit family, and the upper bounds built on
//   K(rho) = lambda S(rho_s) + (1 - lambda) S(rho_e).

#include <array>
#include <optional>

#include "cohlab/relations.hpp"
#include "cohlab/states.hpp"

namespace cohlab {

struct LSDecomposition {
  double lambda;
  DensityMatrix rho_s;
  std::optional<DensityMatrix> rho_e;  // absent when lambda == 1
  double K;

  // lambda rho_s + (1 - lambda) rho_e
  ComplexMatrix recompose() const;
};

// Bell-diagonal family. When max d_i <= 1/2 the state is separable and
// lambda = 1. Otherwise the dominant Bell projector is the entangled part,
// lambda = 2 (1 - d_max) and rho_s has weight 1/2 on the dominant vector and
// d_j / lambda elsewhere.
LSDecomposition ls_bell_diagonal(const BellDiagonalParams& p, BellOrdering ordering);

// Bell weights of rho_s from ls_bell_diagonal, in the caller's ordering.
std::array<double, 4> ls_bell_separable_weights(const BellDiagonalParams& p);

// lambda = 1 decomposition of a state the caller knows to be separable:
// rho_s = rho, no entangled part, K = S(rho).
LSDecomposition ls_separable(const DensityMatrix& rho);

// Horodecki family. lambda = min(1, (5 - gamma) / 2); for gamma <= 3 the
// state itself is the separable part.
LSDecomposition ls_horodecki(const HorodeckiParams& p);

// K for the Horodecki family as an affine function of lambda:
// K = intercept + slope * lambda with intercept S(rho_e), slope S(rho_s) - S(rho_e).
struct HorodeckiKLine {
  double intercept;
  double slope;
};
HorodeckiKLine horodecki_k_line();

// Upper bound 2 log2(d_A d_B) - 2 K on C(rho, b1) + C(rho, b2) where b1, b2
// are full-dimension bases. Throws Mismatch unless `ls` reconstructs rho
// within 1e-12.
RelationReport upper_bound_ls(const DensityMatrix& rho, const LSDecomposition& ls, const Basis& b1,
                              const Basis& b2, double tol = kSlackTol);

// Closed form 4 - (1 - d1)(2 + log2(1 - d1)) + sum_{i>=2} d_i log2 d_i of the
// LS bound with unit weight on lambda S(rho_s), i.e. 4 - lambda S(rho_s).
// d1 is the first Bell weight and must exceed 1/2 (InvalidParams otherwise).
double bell_ls_bound_unit_factor(const BellDiagonalParams& p);

// 2 log2 d_A - 2 S(A|B) for a Bell-diagonal state: 4 + 2 sum_i d_i log2 d_i.
double bell_conditional_bound(const BellDiagonalParams& p);

}  // namespace cohlab
