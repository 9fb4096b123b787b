// Acceptance harness: runs one verification criterion and reports a single
// PASS/FAIL line (plus per-check details) with a matching exit code, so each
// criterion can be registered as its own test.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ldp/verify.hpp"

namespace {

int usage(const char* argv0) {
  std::cerr << "usage: " << argv0
            << " --criterion N [--seed S] [--replicates R] [--dense-cap C] [--threads T]\n"
            << "criteria: 1.." << 9 << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  ldp::VerifyOptions options;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const auto next_value = [&](const char* name) -> const char* {
      if (i + 1 >= argc) {
        std::cerr << name << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") {
      criterion = std::atoi(next_value("--criterion"));
    } else if (arg == "--seed") {
      options.seed = std::strtoull(next_value("--seed"), nullptr, 10);
    } else if (arg == "--replicates") {
      options.replicates = std::strtoull(next_value("--replicates"), nullptr, 10);
    } else if (arg == "--dense-cap") {
      options.dense_cap = std::strtoull(next_value("--dense-cap"), nullptr, 10);
    } else if (arg == "--threads") {
      options.threads = std::strtoull(next_value("--threads"), nullptr, 10);
    } else {
      return usage(argv[0]);
    }
  }
  if (criterion < 1 || criterion > 9) return usage(argv[0]);

  const ldp::CriterionResult result = ldp::run_criterion(criterion, options);

  std::cout << "criterion " << result.id << ": " << (result.passed ? "PASS" : "FAIL") << "  "
            << result.title << " (" << result.seconds << "s)\n";
  for (const ldp::CheckResult& check : result.checks) {
    std::cout << "  [" << (check.passed ? "ok" : "FAIL") << "] " << check.label << ": "
              << check.detail << "\n";
  }
  for (const std::string& note : result.notes) {
    std::cout << "  note: " << note << "\n";
  }
  return result.passed ? 0 : 1;
}
