#pragma once

#include <cstdint>
#include <vector>

#include "swh/hull2.hpp"

namespace swh {

// Verdicts for the four PSD blocks (values are eig_min of each block).
// Under full linear feasibility plus a PSD 5x5 block, the 3x3 core never
// fails and at most one of the two 4x4 blocks can fail; classify enforces
// both facts.
struct FailureProfile {
  bool fails_3x3 = false, fails_4x4first = false, fails_4x4second = false,
       fails_5x5 = false;
  double slack_3x3 = 0.0, slack_4x4first = 0.0, slack_4x4second = 0.0,
         slack_5x5 = 0.0;

  bool lacks_only_first() const {
    return fails_4x4first && !fails_3x3 && !fails_4x4second && !fails_5x5;
  }
  bool lacks_only_second() const {
    return fails_4x4second && !fails_3x3 && !fails_4x4first && !fails_5x5;
  }
  bool clean() const {
    return !fails_3x3 && !fails_4x4first && !fails_4x4second && !fails_5x5;
  }
};

// Precondition: z passes the linear conditions and the 5x5 block (throws
// std::invalid_argument naming the violated constraint otherwise). A hard
// violation of either structural fact raises InternalCheckError.
FailureProfile classify(const LiftedPoint& z, const TolerancePolicy& tol = {});

// Shift coordinate 1 onto its trivial lift: x1 -> x1 - alpha1,
// X11 -> X11 - alpha1^2/(y1 - Y12), alpha -> (0, alpha2). Requires alpha1 > 0
// and y1 - Y12 > 0; asserts the output still lacks only the first 4x4 block.
LiftedPoint reduce_alpha1(const LiftedPoint& z, const TolerancePolicy& tol = {});

// Roots in alpha2 of the determinant of the 3x3 minor that gates the first
// 4x4 block (alpha1 = 0 frame). theta = Y12*X11 - x1^2.
struct Alpha2Interval {
  double theta = 0.0, lo = 0.0, hi = 0.0;
};
Alpha2Interval alpha2_interval(const LiftedPoint& z, const TolerancePolicy& tol = {});

// Roots in alpha2 of x2 - alpha2 = X22 - alpha2^2/(y2 - Y12): the range where
// the perspective beta for coordinate 2 is below the linear one.
struct LambdaInterval {
  double rho = 0.0, lo = 0.0, hi = 0.0;
};
LambdaInterval lambda_interval(const LiftedPoint& z, const TolerancePolicy& tol = {});

// Certificate completion: input passes the linear conditions + 5x5 block;
// output keeps (x, X, y, Y12, alpha1) and moves alpha2 to the nearest
// endpoint of the admissible interval, after which all four PSD blocks pass.
// Any postcondition failure is fatal (InternalCheckError with a slack dump).
LiftedPoint repair(const LiftedPoint& z, const TolerancePolicy& tol = {});

// Deterministic test-point generator: random atom mixtures whose alpha is
// then perturbed inside the linear box until the 5x5 block stays PSD while
// the first 4x4 block fails. Alternates alpha1 = 0 and alpha1 > 0 cases.
// May return fewer than budget points.
std::vector<LiftedPoint> sample_lacking(std::uint64_t seed, int budget);

}  // namespace swh
