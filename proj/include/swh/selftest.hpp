#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swh {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // first failure, or a one-line stat when passing
};

// Deterministic internal cross-checks, heavier than unit tests: randomized
// sweeps of every structural fact the library relies on. Runs well under a
// minute; all suites run even after a failure.
std::vector<SuiteResult> run_selftests(std::uint64_t seed = 7);

}  // namespace swh
