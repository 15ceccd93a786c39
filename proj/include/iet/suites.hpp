#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iet/io.hpp"

namespace iet {

struct SuiteOptions {
  long n_max = kDefaultNmax;
  long budget = kDefaultBudget;
  int jobs = 1;
  std::uint64_t seed = 20240607;
  std::string data_dir;  // example1.json, example2.json, golden.json and the generic variants
};

struct SuiteResult {
  std::string name;
  CheckReport checks;
  double seconds = 0;
  std::vector<std::string> artifacts;

  bool passed() const { return checks.passed(); }
};

/// example1, example2, kac, unwinding, symmetric-induction, berk-trujillo, effcriterion, float-oracle.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name. Case failures are recorded, not thrown.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Deterministic: timing is left out.
Json suite_json(const SuiteResult& r);

std::string default_data_dir();

}  // namespace iet
