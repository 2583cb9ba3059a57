#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace valmat {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  long long elapsed_ms = 0;
  std::vector<SuiteCheck> checks;
};

/// Names of the acceptance suites, in criterion order.
const std::vector<std::string>& suite_names();

struct unknown_suite_error : std::runtime_error {
  explicit unknown_suite_error(const std::string& what) : std::runtime_error(what) {}
};

/// Runs one named acceptance suite with the given seed.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace valmat
