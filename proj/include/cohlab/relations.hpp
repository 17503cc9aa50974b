#pragma once

// Lower (uncertainty-like), upper (complementarity-like) and difference
// bounds on relative entropies of coherence, each returned as a
// RelationReport carrying every intermediate quantity.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohlab/states.hpp"

namespace cohlab {

// Default slack tolerance in bits.
inline constexpr double kSlackTol = 1e-9;

enum class RelationId {
  TwoBasisSingle,          // eq5
  BipartiteTwoBasis,       // eq9
  DiscordImproved,         // eq10
  TripartiteAD,            // eq11
  MultiBasisSingle,        // eq14
  MultiBasisBipartite,     // eq17
  LsUpper,                 // eq18
  ConditionalUpper,        // eq26
  FannesCoherence,         // eq29
  CoherenceDifference,     // eq31
};

enum class BoundDirection { Lower, Upper };

// Short command-line name ("eq5", "eq9", ...).
std::string_view relation_name(RelationId id);
std::optional<RelationId> relation_from_name(std::string_view name);
BoundDirection relation_direction(RelationId id);
const std::vector<RelationId>& all_relations();

struct RelationReport {
  RelationId relation_id;
  double lhs;
  double rhs;
  // lhs - rhs for lower bounds, rhs - lhs for upper bounds.
  double slack;
  bool holds;
  // Every intermediate quantity in evaluation order.
  std::vector<std::pair<std::string, double>> terms;

  double term(std::string_view name) const;
  bool has_term(std::string_view name) const;
};

// Builds a report, filling slack and holds from the direction of `id`.
RelationReport make_report(RelationId id, double lhs, double rhs,
                           std::vector<std::pair<std::string, double>> terms,
                           double tol = kSlackTol);

struct OverlapStats {
  double max_overlap;  // C, maximised over all basis pairs
  double b;
  // c(i_k, j_l) = |<i_k|j_l>|^2 for every pair k < l, row index over basis k.
  struct Pair {
    std::size_t first;
    std::size_t second;
    std::vector<std::vector<double>> c;
  };
  std::vector<Pair> pairwise;
};

// max_{i,a} |<i|a>|. Throws DimensionMismatch.
double max_overlap(const Basis& b1, const Basis& b2);

// b = max_{i_n} sum_{i_2..i_{n-1}} max_{i_1} c(i_1,i_2) prod_{k=2}^{n-1} c(i_k,i_{k+1})
// for the bases in the given order. For n = 2 the sum and product are empty
// and b = max c(i_1, i_2).
double overlap_b(const std::vector<Basis>& bases);

// Smallest b (largest -log b) over all orderings of `bases`, and the order
// achieving it (lexicographically first on ties).
struct BestOrdering {
  double b;
  std::vector<std::size_t> order;
};
BestOrdering overlap_b_best_ordering(const std::vector<Basis>& bases);

OverlapStats overlap_stats(const std::vector<Basis>& bases);

enum class BasisOrdering { AsGiven, BestPermutation };

RelationReport check_two_basis_single(const DensityMatrix& rho, const Basis& b1, const Basis& b2,
                                      double tol = kSlackTol);

RelationReport check_multi_basis_single(const DensityMatrix& rho, const std::vector<Basis>& bases,
                                        BasisOrdering ordering = BasisOrdering::AsGiven,
                                        double tol = kSlackTol);

// Coherences are taken in the product bases |i>|mu> and |a>|mu>, |mu> the
// eigenbasis of rho_B; C uses the A-side bases only.
RelationReport check_bipartite_two_basis(const DensityMatrix& rho_ab, const Basis& a1,
                                         const Basis& a2, double tol = kSlackTol);

// Two qubits only (Unsupported otherwise).
RelationReport check_bipartite_discord_improved(const DensityMatrix& rho_ab, const Basis& a1,
                                                const Basis& a2, double tol = kSlackTol);

RelationReport check_multi_basis_bipartite(const DensityMatrix& rho_ab,
                                           const std::vector<Basis>& bases_a,
                                           BasisOrdering ordering = BasisOrdering::AsGiven,
                                           double tol = kSlackTol);

struct TripartiteReport {
  RelationReport ab;
  RelationReport ad;
  double ssa_sum;  // S(A|B) + S(A|D)
  bool ssa_holds;
};

// Subsystems are ordered (A, B, D).
TripartiteReport check_tripartite(const DensityMatrix& rho_abd, const Basis& a1, const Basis& a2,
                                  double tol = kSlackTol);

RelationReport check_conditional_upper(const DensityMatrix& rho_ab, const Basis& a1,
                                       const Basis& a2, double tol = kSlackTol);

RelationReport fannes_coherence_upper(const DensityMatrix& rho, const Basis& basis,
                                      double tol = kSlackTol);

RelationReport coherence_difference_bound(const DensityMatrix& rho, const Basis& b1,
                                          const Basis& b2, double tol = kSlackTol);

}  // namespace cohlab
