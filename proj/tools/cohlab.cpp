// cohlab: check coherence relations on a state, fuzz them, reproduce the
// worked examples, or write the Bell-diagonal figure CSVs.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cohlab/cli.hpp"

namespace cli = cohlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"basis-dependent quantum coherence relations"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::optional<double> tol;
  std::string inject;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "slack tolerance (default $COHLAB_TOL or 1e-9)");
  };

  CLI::App* check = app.add_subcommand("check", "verify relations on one state");
  check->add_option("--relation", config.relations, "relation id, repeatable (eq5 ... eq31)")
      ->required();
  check->add_option("--state", config.state, "state JSON file or preset bell:/bell2:/horodecki:")
      ->required();
  check->add_option("--basis-a", config.basis_a, "first basis")->capture_default_str();
  check->add_option("--basis-b", config.basis_b, "second basis")->capture_default_str();
  check->add_option("--bases", config.bases, "basis list for eq14/eq17");
  add_tol(check);

  CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random search for violations");
  fuzz->add_option("--relation", config.relations, "relation id, repeatable (default: all)");
  fuzz->add_option("--seed", config.seed, "seed")->capture_default_str();
  fuzz->add_option("--trials", config.trials, "trials per relation")->capture_default_str();
  fuzz->add_option("--first-trial", config.first_trial, "index of the first trial")
      ->capture_default_str();
  fuzz->add_option("--inject-flip", inject, "negate the slack of this relation (self-test)");
  add_tol(fuzz);

  CLI::App* examples = app.add_subcommand("examples", "reproduce the worked numerical examples");

  CLI::App* figure = app.add_subcommand("figure1", "write the two Bell-diagonal panel CSVs");
  figure->add_option("--output", config.output, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInputError;
  }

  config.tolerance = tol ? *tol : cli::tolerance_from_env();
  if (!inject.empty()) config.inject_flip = inject;

  if (check->parsed()) return cli::cmd_check(config, std::cout, std::cerr);
  if (fuzz->parsed()) return cli::cmd_fuzz(config, std::cout, std::cerr);
  if (examples->parsed()) return cli::cmd_examples(config, std::cout, std::cerr);
  if (figure->parsed()) return cli::cmd_figure1(config, std::cout, std::cerr);
  return cli::kExitInputError;
}
