#pragma once

#include <string>
#include <vector>

#include "altseq/calibration.hpp"

namespace altseq {

/// Outcome of one verification check, ready for table or JSON output.
struct CheckResult {
  int criterion = 0;       // 1..13
  std::string name;
  std::string reference;   // which claimed formula/identity is on trial
  std::string expected;
  std::string observed;
  std::string tolerance;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

/// Which candidate matches the exact variance slope of iid uniform q=2
/// words. The double-sum formula predicts 1/4, the printed uniform closed
/// form predicts 1/6; exact Var(LAS_n) for n <= n_max decides.
struct Gamma2Adjudication {
  std::vector<double> diffs;     // Var_n - Var_{n-1}
  double final_diff = 0;
  double final_gap = 0;          // |last diff - previous diff|
  double candidate_double_sum = 0;
  double candidate_closed = 0;
  bool converged = false;
  bool double_sum_wins = false;
  std::string winner;            // name of the matching formula
};

Gamma2Adjudication adjudicate_gamma2(int n_max = 20);

enum class Suite { permutation, iid, markov, all };

Suite suite_from_string(const std::string& name);

/// Runs the checks of one suite (or all of them). `fast` skips the heavy
/// enumerations and simulations, marking them as skipped rather than failed.
std::vector<CheckResult> run_suite(Suite suite, const Calibration& cal, bool fast = false);

/// True when every non-skipped check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace altseq
