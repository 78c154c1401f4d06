#pragma once

#include <stdexcept>
#include <string>

namespace swh {

// alpha_j > 0 while y_j - Y12 = 0: the quotient alpha^2/(y-Y) is undefined and
// the linear constraint 0 <= alpha_j <= y_j - Y12 is already violated.
struct DegenerateLiftError : std::runtime_error {
  explicit DegenerateLiftError(const std::string& what) : std::runtime_error(what) {}
};

// A structural fact that is provably impossible was observed beyond tolerance
// (e.g. the 3x3 core failing under full linear feasibility). Indicates a bug.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

// Cutting-plane solver exhausted its iteration cap without certifying the gap.
struct NonConvergenceError : std::runtime_error {
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed point file.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swh
