#include <chrono>
#include <exception>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "formats.hpp"

using namespace altseq::cli;

int main(int argc, char** argv) {
  CLI::App app{"longest alternating subsequence toolkit: exact statistics, "
               "enumeration oracles and seeded Monte Carlo verification"};
  app.require_subcommand(1);

  std::vector<std::string> echo(argv + 1, argv + argc);

  // exact: closed-form statistics (with enumeration cross-checks where cheap)
  auto* exact = app.add_subcommand("exact", "evaluate the closed-form statistics");
  exact->require_subcommand(1);

  ExactPermArgs perm_args;
  auto* exact_perm = exact->add_subcommand("perm", "uniform random permutation model");
  exact_perm->add_option("--n", perm_args.n, "sequence length")->required()->check(CLI::PositiveNumber);
  exact_perm->add_option("--out-file", perm_args.out_file, "write the JSON report here");

  ExactWordArgs word_args;
  auto* exact_word = exact->add_subcommand("word", "iid finite-alphabet word model");
  exact_word->add_option("--dist", word_args.dist, "uniform:q or a JSON file {\"p\": [...]}")
      ->required();
  exact_word->add_option("--n", word_args.n, "sequence length")->required()->check(CLI::PositiveNumber);
  exact_word->add_option("--mixing-rows", word_args.mixing_rows, "rows in the mixing bound table")
      ->check(CLI::Range(1, 64));
  exact_word->add_option("--out-file", word_args.out_file, "write the JSON report here");

  ExactMarkovArgs markov_args;
  auto* exact_markov = exact->add_subcommand("markov", "stationary Markov word model");
  exact_markov->add_option("--matrix", markov_args.matrix, "JSON file {\"P\": [[...], ...]}")
      ->required();
  exact_markov->add_option("--out-file", markov_args.out_file, "write the JSON report here");

  // simulate: the seeded Monte Carlo harness
  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "run seeded Monte Carlo trials");
  simulate->add_option("--model", sim_args.model, "perm | word | markov")->required();
  simulate->add_option("--n", sim_args.n, "sequence length")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--trials", sim_args.trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_args.seed, "master seed (runs are reproducible)")->required();
  simulate->add_option("--dist", sim_args.dist, "word model distribution");
  simulate->add_option("--matrix", sim_args.matrix, "markov model transition matrix");
  simulate->add_option("--sampler", sim_args.sampler, "perm sampler: shuffle | ranks")
      ->check(CLI::IsMember({"shuffle", "ranks"}));
  simulate->add_option("--out", sim_args.out_format, "json | csv (csv = raw LAS per line)")
      ->check(CLI::IsMember({"json", "csv"}));
  simulate->add_option("--out-file", sim_args.out_file, "write output here instead of stdout");
  simulate->add_flag("--keep-samples", sim_args.keep_samples, "include raw samples in the report");
  simulate->add_option("--sample-cap", sim_args.sample_cap, "retained-sample cap")
      ->check(CLI::NonNegativeNumber);

  // verify: the acceptance checks
  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", verify_args.suite, "permutation | iid | markov | all")
      ->check(CLI::IsMember({"permutation", "perm", "iid", "word", "markov", "all"}));
  verify->add_flag("--fast", verify_args.fast, "skip heavy enumerations/simulations");
  verify->add_flag("--json", verify_args.json, "emit the JSON report instead of the table");
  verify->add_option("--calibration", verify_args.calibration_file,
                     "JSON overrides for thresholds/trial counts");
  verify->add_option("--out-file", verify_args.out_file, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kUsage;
  try {
    if (exact_perm->parsed())
      code = cmd_exact_perm(perm_args, echo);
    else if (exact_word->parsed())
      code = cmd_exact_word(word_args, echo);
    else if (exact_markov->parsed())
      code = cmd_exact_markov(markov_args, echo);
    else if (simulate->parsed()) {
      if (sim_args.model == "word" && sim_args.dist.empty())
        throw std::invalid_argument("--model word needs --dist");
      if (sim_args.model == "markov" && sim_args.matrix.empty())
        throw std::invalid_argument("--model markov needs --matrix");
      code = cmd_simulate(sim_args, echo);
    } else if (verify->parsed()) {
      code = cmd_verify(verify_args, echo);
    }
  } catch (const FileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kUsage;
  }

  // Timing is diagnostic only and goes to stderr: stdout stays byte-stable
  // for identical inputs.
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "wall_ms=" << elapsed.count() << "\n";
  return code;
}
