#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biregular {

struct CheckOptions {
  std::uint64_t seed = 0;
  long trials = 100000;         // Monte Carlo samples
  int instances = 0;            // random instances; 0 keeps each check's default
  unsigned precision_bits = 128;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  double seconds = 0;
  double max_case_seconds = 0;               // slowest sub-case
  std::vector<std::string> details;          // one line per sub-case
  std::optional<std::string> counterexample; // first failing case
};

struct CheckInfo {
  std::string name;
  std::string summary;
};

// Named oracle checks, in a fixed order.
const std::vector<CheckInfo>& check_catalog();

// Runs one named check. Throws InvalidInput for an unknown name and
// CapExceeded when an enumeration is over the configured cap.
CheckResult run_check(const std::string& name, const CheckOptions& opts = {});

}  // namespace biregular
