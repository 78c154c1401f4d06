#pragma once

#include <array>
#include <string>

#include "swh/report.hpp"
#include "swh/symmat.hpp"

namespace swh {

// Perspective cone: alpha^2 <= beta*gamma together with 0 <= beta <= alpha <= gamma.
struct PerPoint {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

Report per_report(const PerPoint& p, const TolerancePolicy& tol = {},
                  const std::string& prefix = "per");
bool per_contains(const PerPoint& p, const TolerancePolicy& tol = {});

// Homogenized box RLT data, arranged as the bordered matrix (lambda, x^T; x, X).
struct RltxMat {
  double lambda = 0.0;
  std::array<double, 2> x{};
  SymMat X = SymMat(2);
};

Report rltx_report(const RltxMat& m, const TolerancePolicy& tol = {},
                   const std::string& prefix = "rltx");
bool rltx_contains(const RltxMat& m, const TolerancePolicy& tol = {});

// Hull of (y, y1*y2) over y in [0,1]^2: max{0, y1+y2-1} <= Y12 <= min{y1, y2}.
struct RltyPoint {
  std::array<double, 2> y{};
  double Y12 = 0.0;
};

Report rlty_report(const RltyPoint& p, const TolerancePolicy& tol = {},
                   const std::string& prefix = "rlty");
bool rlty_contains(const RltyPoint& p, const TolerancePolicy& tol = {});

// Doubly nonnegative 4x4: entrywise nonnegative and PSD.
Report dnn4_report(const SymMat& w, const TolerancePolicy& tol = {});
bool dnn4_contains(const SymMat& w, const TolerancePolicy& tol = {});

}  // namespace swh
