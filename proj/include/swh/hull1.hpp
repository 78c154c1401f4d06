#pragma once

#include "swh/cones.hpp"
#include "swh/report.hpp"
#include "swh/symmat.hpp"

namespace swh {

// Moment point (x1, X11, y1) for one box-constrained variable with one switch.
struct H1Point {
  double x1 = 0.0, X11 = 0.0, y1 = 0.0;
};

// Hull membership: (x1, X11, y1) in the perspective cone and y1 <= 1.
Report h1_report(const H1Point& p, const TolerancePolicy& tol = {});
bool h1_contains(const H1Point& p, const TolerancePolicy& tol = {});

// Doubly-nonnegative certificate for a member point. Rows/columns are ordered
// (unit, x1, s1, t1) with s1 = y1 - x1, t1 = 1 - y1; the linear identities
// x1 + s1 + t1 = 1, X11 + Z11 = x1 and S11 + Z11 = s1 hold by construction.
struct H1Witness {
  double s1 = 0.0, t1 = 0.0, Z11 = 0.0, S11 = 0.0;
  SymMat W = SymMat(4);
};

// Throws std::invalid_argument (naming the violated condition) if p fails
// h1_contains; the raw variant builds W unconditionally so that negative cases
// can be probed too.
H1Witness h1_witness(const H1Point& p, const TolerancePolicy& tol = {});
H1Witness h1_witness_raw(const H1Point& p);

}  // namespace swh
