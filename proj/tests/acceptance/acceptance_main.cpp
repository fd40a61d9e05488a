// Acceptance gate: runs every verification criterion at full scale and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>

#include "altseq/calibration.hpp"
#include "altseq/verify.hpp"

int main() {
  const altseq::Calibration cal;  // the published defaults

  const auto started = std::chrono::steady_clock::now();
  const auto checks = altseq::run_suite(altseq::Suite::all, cal, /*fast=*/false);
  const auto seconds = std::chrono::duration_cast<std::chrono::duration<double>>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  int failures = 0;
  for (const auto& check : checks) {
    const char* verdict = check.skipped ? "SKIP" : (check.pass ? "PASS" : "FAIL");
    if (!check.skipped && !check.pass) ++failures;
    std::printf("[%s] criterion %2d  %-28s | %s | expected: %s | observed: %s | tolerance: %s%s%s\n",
                verdict, check.criterion, check.name.c_str(), check.reference.c_str(),
                check.expected.c_str(), check.observed.c_str(), check.tolerance.c_str(),
                check.note.empty() ? "" : " | ", check.note.c_str());
  }
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(checks.size()) - failures,
              checks.size(), seconds);
  return failures == 0 ? 0 : 1;
}
