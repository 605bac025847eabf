#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cofinite::selftest {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions
};

struct Report {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::uint64_t total_checks() const;
  std::uint64_t total_failures() const;
  // Deterministic per (seed, iterations); contains no timing.
  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Runs every property suite with `iterations` random cases apiece (suites
// with exhaustive checks run those at a fixed size as well). Deterministic
// per seed.
Report run(std::uint64_t seed, std::uint64_t iterations);

}  // namespace cofinite::selftest
