#include "cohlab/relations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "cohlab/coherence.hpp"
#include "cohlab/correlations.hpp"
#include "cohlab/error.hpp"

namespace cohlab {

namespace {

struct RelationInfo {
  RelationId id;
  std::string_view name;
  BoundDirection direction;
};

constexpr std::array<RelationInfo, 10> kRelations{{
    {RelationId::TwoBasisSingle, "eq5", BoundDirection::Lower},
    {RelationId::BipartiteTwoBasis, "eq9", BoundDirection::Lower},
    {RelationId::DiscordImproved, "eq10", BoundDirection::Lower},
    {RelationId::TripartiteAD, "eq11", BoundDirection::Lower},
    {RelationId::MultiBasisSingle, "eq14", BoundDirection::Lower},
    {RelationId::MultiBasisBipartite, "eq17", BoundDirection::Lower},
    {RelationId::LsUpper, "eq18", BoundDirection::Upper},
    {RelationId::ConditionalUpper, "eq26", BoundDirection::Upper},
    {RelationId::FannesCoherence, "eq29", BoundDirection::Upper},
    {RelationId::CoherenceDifference, "eq31", BoundDirection::Upper},
}};

const RelationInfo& info(RelationId id) {
  for (const auto& r : kRelations) {
    if (r.id == id) return r;
  }
  throw InvalidParams("unknown relation id");
}

void require_same_dims(const std::vector<Basis>& bases, std::size_t d, const char* what) {
  for (const Basis& b : bases) {
    if (b.dim() != d) {
      throw DimensionMismatch(std::string(what) + ": basis '" + b.label() + "' has dimension " +
                              std::to_string(b.dim()) + ", expected " + std::to_string(d));
    }
  }
}

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.subsystems() != 2) {
    throw DimensionMismatch(std::string(what) + ": expected a bipartite state, got " +
                            std::to_string(rho.subsystems()) + " subsystems");
  }
}

void require_at_least_two(const std::vector<Basis>& bases, const char* what) {
  if (bases.size() < 2) throw InvalidParams(std::string(what) + ": need at least two bases");
}

// c(i, j) = |<i|j>|^2 between columns of two bases.
std::vector<std::vector<double>> overlap_matrix(const Basis& x, const Basis& y) {
  const std::size_t d = x.dim();
  const ComplexMatrix g = x.unitary().adjoint() * y.unitary();
  std::vector<std::vector<double>> c(d, std::vector<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) c[i][j] = std::norm(g(i, j));
  }
  return c;
}

double overlap_b_ordered(const std::vector<Basis>& bases, std::span<const std::size_t> order) {
  const std::size_t d = bases.front().dim();
  const auto first = overlap_matrix(bases[order[0]], bases[order[1]]);
  // weight[i_2] = max_{i_1} c(i_1, i_2)
  std::vector<double> weight(d, 0.0);
  for (std::size_t i2 = 0; i2 < d; ++i2) {
    for (std::size_t i1 = 0; i1 < d; ++i1) weight[i2] = std::max(weight[i2], first[i1][i2]);
  }
  // Push the weights through c(i_k, i_{k+1}) for k = 2..n-1; the nested
  // sum over i_2..i_{n-1} factorises into this chain.
  for (std::size_t k = 1; k + 1 < order.size(); ++k) {
    const auto c = overlap_matrix(bases[order[k]], bases[order[k + 1]]);
    std::vector<double> next(d, 0.0);
    for (std::size_t ik = 0; ik < d; ++ik) {
      for (std::size_t in = 0; in < d; ++in) next[in] += weight[ik] * c[ik][in];
    }
    weight = std::move(next);
  }
  return *std::max_element(weight.begin(), weight.end());
}

std::vector<double> coherences(const DensityMatrix& rho, const std::vector<Basis>& bases) {
  std::vector<double> out;
  out.reserve(bases.size());
  for (const Basis& b : bases) out.push_back(rel_ent_coherence(rho, b));
  return out;
}

// Product bases |i_k> (x) |mu> sharing one eigenbasis of rho_B.
std::vector<Basis> with_b_eigenbasis(const DensityMatrix& rho_ab, const std::vector<Basis>& bases_a) {
  require_bipartite(rho_ab, "bipartite relation");
  require_same_dims(bases_a, rho_ab.dims()[0], "bipartite relation");
  const HermitianEigen eig = hermitian_eig(rho_ab.reduced({1}).matrix());
  std::vector<Basis> out;
  out.reserve(bases_a.size());
  for (const Basis& a : bases_a) {
    out.emplace_back(kron(a.unitary(), eig.vectors), a.label() + "*eig(B)");
  }
  return out;
}

double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double min_log_b(const std::vector<Basis>& bases, BasisOrdering ordering, std::vector<std::size_t>* order_out) {
  if (ordering == BasisOrdering::AsGiven) {
    std::vector<std::size_t> order(bases.size());
    std::iota(order.begin(), order.end(), 0);
    if (order_out) *order_out = order;
    return overlap_b_ordered(bases, order);
  }
  BestOrdering best = overlap_b_best_ordering(bases);
  if (order_out) *order_out = best.order;
  return best.b;
}

}  // namespace

std::string_view relation_name(RelationId id) { return info(id).name; }

std::optional<RelationId> relation_from_name(std::string_view name) {
  for (const auto& r : kRelations) {
    if (r.name == name) return r.id;
  }
  return std::nullopt;
}

BoundDirection relation_direction(RelationId id) { return info(id).direction; }

const std::vector<RelationId>& all_relations() {
  static const std::vector<RelationId> ids = [] {
    std::vector<RelationId> v;
    for (const auto& r : kRelations) v.push_back(r.id);
    return v;
  }();
  return ids;
}

double RelationReport::term(std::string_view name) const {
  for (const auto& [k, v] : terms) {
    if (k == name) return v;
  }
  throw InvalidParams("RelationReport: no term named '" + std::string(name) + "'");
}

bool RelationReport::has_term(std::string_view name) const {
  return std::any_of(terms.begin(), terms.end(), [&](const auto& kv) { return kv.first == name; });
}

RelationReport make_report(RelationId id, double lhs, double rhs,
                           std::vector<std::pair<std::string, double>> terms, double tol) {
  const double slack = relation_direction(id) == BoundDirection::Lower ? lhs - rhs : rhs - lhs;
  return RelationReport{id, lhs, rhs, slack, slack >= -tol, std::move(terms)};
}

double max_overlap(const Basis& b1, const Basis& b2) {
  if (b1.dim() != b2.dim()) {
    throw DimensionMismatch("max_overlap: bases have dimensions " + std::to_string(b1.dim()) +
                            " and " + std::to_string(b2.dim()));
  }
  const ComplexMatrix g = b1.unitary().adjoint() * b2.unitary();
  return g.max_abs();
}

double overlap_b(const std::vector<Basis>& bases) {
  require_at_least_two(bases, "overlap_b");
  require_same_dims(bases, bases.front().dim(), "overlap_b");
  std::vector<std::size_t> order(bases.size());
  std::iota(order.begin(), order.end(), 0);
  return overlap_b_ordered(bases, order);
}

BestOrdering overlap_b_best_ordering(const std::vector<Basis>& bases) {
  require_at_least_two(bases, "overlap_b_best_ordering");
  require_same_dims(bases, bases.front().dim(), "overlap_b_best_ordering");
  std::vector<std::size_t> order(bases.size());
  std::iota(order.begin(), order.end(), 0);
  BestOrdering best{overlap_b_ordered(bases, order), order};
  while (std::next_permutation(order.begin(), order.end())) {
    const double b = overlap_b_ordered(bases, order);
    if (b < best.b) best = {b, order};
  }
  return best;
}

OverlapStats overlap_stats(const std::vector<Basis>& bases) {
  OverlapStats out{0.0, overlap_b(bases), {}};
  for (std::size_t k = 0; k < bases.size(); ++k) {
    for (std::size_t l = k + 1; l < bases.size(); ++l) {
      out.max_overlap = std::max(out.max_overlap, max_overlap(bases[k], bases[l]));
      out.pairwise.push_back({k, l, overlap_matrix(bases[k], bases[l])});
    }
  }
  return out;
}

RelationReport check_two_basis_single(const DensityMatrix& rho, const Basis& b1, const Basis& b2,
                                      double tol) {
  require_same_dims({b1, b2}, rho.dim(), "check_two_basis_single");
  const double c1 = rel_ent_coherence(rho, b1);
  const double c2 = rel_ent_coherence(rho, b2);
  const double s = von_neumann_entropy(rho);
  const double overlap = max_overlap(b1, b2);
  const double rhs = -2.0 * std::log2(overlap) - s;
  return make_report(RelationId::TwoBasisSingle, c1 + c2, rhs,
                     {{"C_1", c1}, {"C_2", c2}, {"S_rho", s}, {"C", overlap},
                      {"minus_2log_C", -2.0 * std::log2(overlap)}},
                     tol);
}

RelationReport check_multi_basis_single(const DensityMatrix& rho, const std::vector<Basis>& bases,
                                        BasisOrdering ordering, double tol) {
  require_at_least_two(bases, "check_multi_basis_single");
  require_same_dims(bases, rho.dim(), "check_multi_basis_single");
  const std::vector<double> c = coherences(rho, bases);
  const double s = von_neumann_entropy(rho);
  std::vector<std::size_t> order;
  const double b = min_log_b(bases, ordering, &order);
  std::vector<std::pair<std::string, double>> terms;
  for (std::size_t k = 0; k < c.size(); ++k) terms.emplace_back("C_" + std::to_string(k + 1), c[k]);
  terms.emplace_back("S_rho", s);
  terms.emplace_back("b", b);
  terms.emplace_back("minus_log_b", -std::log2(b));
  if (bases.size() == 2) terms.emplace_back("C", max_overlap(bases[0], bases[1]));
  for (std::size_t k = 0; k < order.size(); ++k) {
    terms.emplace_back("order_" + std::to_string(k + 1), static_cast<double>(order[k] + 1));
  }
  return make_report(RelationId::MultiBasisSingle, sum_of(c), -std::log2(b) - s, std::move(terms), tol);
}

RelationReport check_bipartite_two_basis(const DensityMatrix& rho_ab, const Basis& a1,
                                         const Basis& a2, double tol) {
  const std::vector<Basis> composite = with_b_eigenbasis(rho_ab, {a1, a2});
  const double c1 = rel_ent_coherence(rho_ab, composite[0]);
  const double c2 = rel_ent_coherence(rho_ab, composite[1]);
  const double s_cond = conditional_entropy(rho_ab);
  const double overlap = max_overlap(a1, a2);
  const double rhs = -2.0 * std::log2(overlap) - s_cond;
  return make_report(RelationId::BipartiteTwoBasis, c1 + c2, rhs,
                     {{"C_1", c1}, {"C_2", c2}, {"S_A_given_B", s_cond}, {"C", overlap},
                      {"minus_2log_C", -2.0 * std::log2(overlap)}},
                     tol);
}

RelationReport check_bipartite_discord_improved(const DensityMatrix& rho_ab, const Basis& a1,
                                                const Basis& a2, double tol) {
  require_bipartite(rho_ab, "check_bipartite_discord_improved");
  if (rho_ab.dims()[0] != 2 || rho_ab.dims()[1] != 2) {
    throw Unsupported("check_bipartite_discord_improved: only two-qubit states are supported");
  }
  const RelationReport base = check_bipartite_two_basis(rho_ab, a1, a2, tol);
  const CorrelationSet corr = correlation_set(rho_ab);
  const double d = *corr.discord;
  const double j = *corr.classical_correlation;
  const double penalty = std::max(0.0, d - j);
  std::vector<std::pair<std::string, double>> terms = base.terms;
  terms.emplace_back("D", d);
  terms.emplace_back("J", j);
  terms.emplace_back("max0_D_minus_J", penalty);
  terms.emplace_back("rhs_eq9", base.rhs);
  return make_report(RelationId::DiscordImproved, base.lhs, base.rhs - penalty, std::move(terms), tol);
}

RelationReport check_multi_basis_bipartite(const DensityMatrix& rho_ab,
                                           const std::vector<Basis>& bases_a,
                                           BasisOrdering ordering, double tol) {
  require_at_least_two(bases_a, "check_multi_basis_bipartite");
  const std::vector<Basis> composite = with_b_eigenbasis(rho_ab, bases_a);
  const std::vector<double> c = coherences(rho_ab, composite);
  const double s_cond = conditional_entropy(rho_ab);
  std::vector<std::size_t> order;
  const double b = min_log_b(bases_a, ordering, &order);
  std::vector<std::pair<std::string, double>> terms;
  for (std::size_t k = 0; k < c.size(); ++k) terms.emplace_back("C_" + std::to_string(k + 1), c[k]);
  terms.emplace_back("S_A_given_B", s_cond);
  terms.emplace_back("b", b);
  terms.emplace_back("minus_log_b", -std::log2(b));
  if (bases_a.size() == 2) terms.emplace_back("C", max_overlap(bases_a[0], bases_a[1]));
  for (std::size_t k = 0; k < order.size(); ++k) {
    terms.emplace_back("order_" + std::to_string(k + 1), static_cast<double>(order[k] + 1));
  }
  return make_report(RelationId::MultiBasisBipartite, sum_of(c), -std::log2(b) - s_cond,
                     std::move(terms), tol);
}

TripartiteReport check_tripartite(const DensityMatrix& rho_abd, const Basis& a1, const Basis& a2,
                                  double tol) {
  if (rho_abd.subsystems() != 3) {
    throw DimensionMismatch("check_tripartite: expected a tripartite state, got " +
                            std::to_string(rho_abd.subsystems()) + " subsystems");
  }
  const DensityMatrix rho_ab = rho_abd.reduced({0, 1});
  const DensityMatrix rho_ad = rho_abd.reduced({0, 2});
  RelationReport ab = check_bipartite_two_basis(rho_ab, a1, a2, tol);
  RelationReport ad = check_bipartite_two_basis(rho_ad, a1, a2, tol);
  ad.relation_id = RelationId::TripartiteAD;
  for (auto& [name, value] : ad.terms) {
    if (name == "S_A_given_B") name = "S_A_given_D";
  }
  const double ssa = ab.term("S_A_given_B") + ad.term("S_A_given_D");
  return {std::move(ab), std::move(ad), ssa, ssa >= -tol};
}

RelationReport check_conditional_upper(const DensityMatrix& rho_ab, const Basis& a1,
                                       const Basis& a2, double tol) {
  const std::vector<Basis> composite = with_b_eigenbasis(rho_ab, {a1, a2});
  const double c1 = rel_ent_coherence(rho_ab, composite[0]);
  const double c2 = rel_ent_coherence(rho_ab, composite[1]);
  const double s_cond = conditional_entropy(rho_ab);
  const double d_a = static_cast<double>(rho_ab.dims()[0]);
  const double rhs = 2.0 * std::log2(d_a) - 2.0 * s_cond;
  return make_report(RelationId::ConditionalUpper, c1 + c2, rhs,
                     {{"C_1", c1}, {"C_2", c2}, {"S_A_given_B", s_cond}, {"d_A", d_a}}, tol);
}

RelationReport fannes_coherence_upper(const DensityMatrix& rho, const Basis& basis, double tol) {
  if (rho.dim() < 2) throw InvalidParams("fannes_coherence_upper: dimension must be >= 2");
  const DensityMatrix diag = dephase(rho, basis);
  const double eps = 0.5 * trace_norm(diag.matrix() - rho.matrix());
  const double d = static_cast<double>(rho.dim());
  const double h = binary_entropy(std::min(eps, 1.0));
  const double lhs = rel_ent_coherence(rho, basis);
  const double rhs = eps * std::log2(d - 1.0) + h;
  return make_report(RelationId::FannesCoherence, lhs, rhs,
                     {{"C", lhs}, {"epsilon", eps}, {"H_epsilon", h}, {"d", d}}, tol);
}

RelationReport coherence_difference_bound(const DensityMatrix& rho, const Basis& b1,
                                          const Basis& b2, double tol) {
  require_same_dims({b1, b2}, rho.dim(), "coherence_difference_bound");
  if (rho.dim() < 2) throw InvalidParams("coherence_difference_bound: dimension must be >= 2");
  const DensityMatrix d1 = dephase(rho, b1);
  const DensityMatrix d2 = dephase(rho, b2);
  const double eta = 0.5 * trace_norm(d1.matrix() - d2.matrix());
  const double d = static_cast<double>(rho.dim());
  const double h = binary_entropy(std::min(eta, 1.0));
  const double c1 = rel_ent_coherence(rho, b1);
  const double c2 = rel_ent_coherence(rho, b2);
  const double rhs = eta * std::log2(d - 1.0) + h;
  return make_report(RelationId::CoherenceDifference, std::abs(c1 - c2), rhs,
                     {{"C_1", c1}, {"C_2", c2}, {"eta", eta}, {"H_eta", h}, {"d", d}}, tol);
}

}  // namespace cohlab
