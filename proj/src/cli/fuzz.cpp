#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cohlab/cli.hpp"
#include "cohlab/error.hpp"
#include "cohlab/lsdecomp.hpp"
#include "cohlab/rng.hpp"

namespace cohlab::cli {

namespace {

constexpr std::array<std::size_t, 3> kSingleDims{2, 3, 4};
const std::array<Dims, 3> kBipartiteDims{Dims{2, 2}, Dims{2, 3}, Dims{3, 3}};

std::uint64_t relation_stream(RelationId id) { return 0x100 + static_cast<std::uint64_t>(id); }

// Alternates mixed and pure states so both the interior and the boundary
// of state space are exercised.
DensityMatrix random_state(const Dims& dims, std::uint64_t trial, Rng& rng) {
  return (trial / 3) % 2 == 0 ? random_mixed(dims, rng) : random_pure(dims, rng);
}

std::vector<Basis> random_bases(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<Basis> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_basis(d, rng));
  return out;
}

// Slack of the relation on trial `trial`. For relations with several
// checked quantities the smallest slack is returned.
double trial_slack(RelationId id, std::uint64_t trial, Rng& rng, double tol) {
  const std::size_t single_d = kSingleDims[trial % 3];
  const Dims& bi = kBipartiteDims[trial % 3];
  switch (id) {
    case RelationId::TwoBasisSingle: {
      const DensityMatrix rho = random_state({single_d}, trial, rng);
      const auto b = random_bases(2, single_d, rng);
      return check_two_basis_single(rho, b[0], b[1], tol).slack;
    }
    case RelationId::MultiBasisSingle: {
      const std::size_t n = 2 + (trial / 6) % 2;
      const DensityMatrix rho = random_state({single_d}, trial, rng);
      const auto b = random_bases(n, single_d, rng);
      const double given = check_multi_basis_single(rho, b, BasisOrdering::AsGiven, tol).slack;
      const double best = check_multi_basis_single(rho, b, BasisOrdering::BestPermutation, tol).slack;
      return std::min(given, best);
    }
    case RelationId::FannesCoherence: {
      const DensityMatrix rho = random_state({single_d}, trial, rng);
      return fannes_coherence_upper(rho, random_basis(single_d, rng), tol).slack;
    }
    case RelationId::CoherenceDifference: {
      const DensityMatrix rho = random_state({single_d}, trial, rng);
      const auto b = random_bases(2, single_d, rng);
      return coherence_difference_bound(rho, b[0], b[1], tol).slack;
    }
    case RelationId::BipartiteTwoBasis: {
      const DensityMatrix rho = random_state(bi, trial, rng);
      const auto b = random_bases(2, bi[0], rng);
      return check_bipartite_two_basis(rho, b[0], b[1], tol).slack;
    }
    case RelationId::ConditionalUpper: {
      const DensityMatrix rho = random_state(bi, trial, rng);
      const auto b = random_bases(2, bi[0], rng);
      return check_conditional_upper(rho, b[0], b[1], tol).slack;
    }
    case RelationId::MultiBasisBipartite: {
      const std::size_t n = 2 + (trial / 6) % 2;
      const DensityMatrix rho = random_state(bi, trial, rng);
      const auto b = random_bases(n, bi[0], rng);
      const double given = check_multi_basis_bipartite(rho, b, BasisOrdering::AsGiven, tol).slack;
      const double best = check_multi_basis_bipartite(rho, b, BasisOrdering::BestPermutation, tol).slack;
      return std::min(given, best);
    }
    case RelationId::DiscordImproved: {
      const DensityMatrix rho = random_state({2, 2}, trial, rng);
      const auto b = random_bases(2, 2, rng);
      return check_bipartite_discord_improved(rho, b[0], b[1], tol).slack;
    }
    case RelationId::TripartiteAD: {
      const DensityMatrix rho = random_state({2, 2, 2}, trial, rng);
      const auto b = random_bases(2, 2, rng);
      const TripartiteReport t = check_tripartite(rho, b[0], b[1], tol);
      return std::min({t.ab.slack, t.ad.slack, t.ssa_sum});
    }
    case RelationId::LsUpper: {
      if (trial % 4 == 3) {
        const HorodeckiParams p(2.0 + 3.0 * rng.uniform());
        const DensityMatrix rho = horodecki_state(p);
        const auto b = random_bases(2, 9, rng);
        return upper_bound_ls(rho, ls_horodecki(p), b[0], b[1], tol).slack;
      }
      // Flat Dirichlet weights.
      std::array<double, 4> w{};
      double sum = 0.0;
      for (double& x : w) sum += (x = -std::log(1.0 - rng.uniform()));
      for (double& x : w) x /= sum;
      w[0] = 1.0 - w[1] - w[2] - w[3];
      const BellOrdering ordering = trial % 2 ? BellOrdering::PhiOuter : BellOrdering::PhiFirst;
      const BellDiagonalParams p(w);
      const DensityMatrix rho = bell_diagonal(p, ordering);
      const auto b = random_bases(2, 4, rng);
      return upper_bound_ls(rho, ls_bell_diagonal(p, ordering), b[0], b[1], tol).slack;
    }
  }
  throw InvalidParams("fuzz: unhandled relation");
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

}  // namespace

FuzzSummary fuzz_relation(RelationId relation, std::uint64_t seed, std::uint64_t first_trial,
                          std::uint64_t trials, double tolerance, bool flip_sign) {
  const Rng base(seed, relation_stream(relation));
  FuzzSummary s{relation, trials, std::numeric_limits<double>::infinity(), first_trial, 0};
  for (std::uint64_t t = first_trial; t < first_trial + trials; ++t) {
    Rng rng = base.split(t);
    double slack = trial_slack(relation, t, rng, tolerance);
    if (flip_sign) slack = -slack;
    if (slack < s.min_slack) {
      s.min_slack = slack;
      s.worst_trial = t;
    }
    if (slack < -tolerance) ++s.violations;
  }
  return s;
}

int cmd_fuzz(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<RelationId> ids;
  try {
    validate(config);
    if (config.relations.empty()) {
      ids = all_relations();
    } else {
      for (const auto& name : config.relations) {
        const auto id = relation_from_name(name);
        if (!id) throw ParseError("unknown relation '" + name + "'");
        ids.push_back(*id);
      }
    }
    if (config.inject_flip && !relation_from_name(*config.inject_flip)) {
      throw ParseError("unknown relation '" + *config.inject_flip + "' for --inject-flip");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  out << "fuzz seed=" << config.seed << " trials=" << config.trials
      << " first_trial=" << config.first_trial << " tol=" << sci(config.tolerance) << '\n';
  bool ok = true;
  std::vector<std::string> replays;
  for (RelationId id : ids) {
    const std::string name(relation_name(id));
    const bool flip = config.inject_flip && *config.inject_flip == name;
    const FuzzSummary s =
        fuzz_relation(id, config.seed, config.first_trial, config.trials, config.tolerance, flip);
    const bool pass = s.violations == 0;
    ok &= pass;
    out << name << std::string(6 - std::min<std::size_t>(name.size(), 5), ' ') << "min_slack "
        << sci(s.min_slack) << "  worst_trial " << s.worst_trial << "  violations " << s.violations
        << "  " << (pass ? "PASS" : "FAIL") << '\n';
    nlohmann::ordered_json j;
    j["relation"] = name;
    j["trials"] = s.trials;
    j["min_slack"] = s.min_slack;
    j["worst_trial"] = s.worst_trial;
    j["seed"] = config.seed;
    j["violations"] = s.violations;
    out << j.dump() << '\n';
    if (!pass) {
      replays.push_back("cohlab fuzz --relation " + name + " --seed " + std::to_string(config.seed) +
                        " --first-trial " + std::to_string(s.worst_trial) + " --trials 1" +
                        (flip ? " --inject-flip " + name : std::string()));
    }
  }
  for (const auto& r : replays) out << "replay: " << r << '\n';
  return ok ? kExitOk : kExitViolation;
}

}  // namespace cohlab::cli
