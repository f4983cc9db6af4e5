#pragma once

// Built-in property suites over randomized inputs, runnable from the CLI.
// The grassmann suite cross-checks the polynomial kernel against an
// independent term-by-term reference multiplier; inject_sign_fault corrupts
// the reference's sign rule to demonstrate that the suite detects a broken
// sign convention.

#include <cstdint>
#include <optional>
#include <string>

namespace superfft {

struct SelftestOptions {
  std::string only;  // empty = all suites
  bool inject_sign_fault = false;
  uint64_t seed = 20260810;
  unsigned cases = 200;
};

struct SelftestFailure {
  std::string suite;
  std::string check;
  std::string message;
};

/// Runs the requested suites; stops at the first failure.
std::optional<SelftestFailure> run_selftest(const SelftestOptions& options);

}  // namespace superfft
