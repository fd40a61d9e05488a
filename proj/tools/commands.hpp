#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace altseq::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBadInput = 2, kVerifyFailed = 3 };

struct ExactPermArgs {
  std::int64_t n = 1;
  std::string out_file;
};

struct ExactWordArgs {
  std::string dist;
  std::int64_t n = 1;
  int mixing_rows = 10;
  std::string out_file;
};

struct ExactMarkovArgs {
  std::string matrix;
  std::string out_file;
};

struct SimulateArgs {
  std::string model;  // perm | word | markov
  std::int64_t n = 1;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::string dist;
  std::string matrix;
  std::string sampler = "shuffle";  // perm model: shuffle | ranks
  std::string out_format = "json";  // json | csv
  std::string out_file;
  bool keep_samples = false;
  std::int64_t sample_cap = 1 << 17;
};

struct VerifyArgs {
  std::string suite = "all";
  bool fast = false;
  bool json = false;
  std::string calibration_file;
  std::string out_file;
};

int cmd_exact_perm(const ExactPermArgs& args, const std::vector<std::string>& echo);
int cmd_exact_word(const ExactWordArgs& args, const std::vector<std::string>& echo);
int cmd_exact_markov(const ExactMarkovArgs& args, const std::vector<std::string>& echo);
int cmd_simulate(const SimulateArgs& args, const std::vector<std::string>& echo);
int cmd_verify(const VerifyArgs& args, const std::vector<std::string>& echo);

/// Worker count: hardware concurrency, capped by ALTSEQ_THREADS. The cap
/// affects speed only, never results.
int thread_budget();

}  // namespace altseq::cli
