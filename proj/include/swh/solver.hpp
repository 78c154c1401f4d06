#pragma once

#include <array>
#include <optional>
#include <string>

#include "swh/hull2.hpp"
#include "swh/oracle.hpp"

namespace swh {

// Flat coordinates for the relaxations, in the fixed order
// (x1, x2, X11, X12, X22, y1, y2, Y12, alpha1, alpha2). All four systems
// live in [0,1]^10 (beta enters only through its componentwise-minimal
// elimination, which never changes the projection).
using Vec10 = std::array<double, 10>;

Vec10 to_vector(const LiftedPoint& z);
LiftedPoint from_vector(const Vec10& v);
Vec10 objective_vector(const Objective& o);

// Separating halfspace a . v >= b valid for the whole feasible set and
// violated at the queried point. (a, b) is scaled to unit Euclidean norm.
struct Cut {
  Vec10 normal{};
  double offset = 0.0;
  std::string name;
};

// First violated constraint in the fixed order box, linear, PSD blocks
// (small to large). PSD cuts come from the most negative eigenvector w:
// w^T M(v) w >= 0 is linear in v. Returns nullopt when v passes every
// constraint at the given tolerances.
std::optional<Cut> separate(const Vec10& v, System system,
                            const TolerancePolicy& tol = {});

struct SolveResult {
  double value = 0.0;
  LiftedPoint argmax;
  int iterations = 0;
  double certified_gap = 0.0;
};

// Maximize the objective over one relaxation with a deep-cut ellipsoid
// method, to the requested additive accuracy (>= 1e-8). The certified gap is
// min over iterations of (upper bound from the current ellipsoid) minus the
// best feasible value found; the origin seeds the incumbent. Throws
// NonConvergenceError when the iteration cap is reached first. Disjunctive
// argmaxes come back with the minimal beta attached.
SolveResult support(System system, const Objective& o, double accuracy);

}  // namespace swh
