#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ldp {

// One verifiable claim with its measured evidence.
struct CheckResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

// One numbered verification criterion (1..9).
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::vector<CheckResult> checks;
  // Informational findings that are not pass/fail conditions.
  std::vector<std::string> notes;
};

struct VerifyOptions {
  // Master seed for every randomized check (criterion 2 sampling, Monte
  // Carlo cells). The default is pinned so that published numbers are
  // reproducible; see the Monte Carlo notes in the README.
  std::uint64_t seed = 0;
  std::uint64_t replicates = 1000000;
  std::vector<std::size_t> n_grid = {25, 50, 75, 100, 125, 150, 175, 200};
  std::size_t dense_cap = 1024;
  std::size_t threads = 0;
};

// Runs one criterion; id outside 1..9 is an error. Every tolerance is
// pinned inside the implementation — options only control seeds/sizes of
// the stochastic checks.
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

// Criteria making up a named suite: closed-forms -> {3,4,5,7},
// domains -> {6}, convergence -> {1,2}, montecarlo -> {8}.
// (Criterion 9, byte-stable figure grids, runs in the acceptance harness.)
std::vector<int> suite_criteria(const std::string& suite);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"closed-forms", "domains", "convergence",
                                                 "montecarlo"};
  return names;
}

}  // namespace ldp
