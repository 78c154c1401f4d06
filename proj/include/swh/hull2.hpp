#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "swh/cones.hpp"
#include "swh/report.hpp"
#include "swh/rng.hpp"
#include "swh/symmat.hpp"

namespace swh {

// Moment vector (x, X, y, Y12) for two box variables with two switches.
struct HullPoint {
  double x1 = 0.0, x2 = 0.0;
  double X11 = 0.0, X12 = 0.0, X22 = 0.0;
  double y1 = 0.0, y2 = 0.0, Y12 = 0.0;
};

// HullPoint plus the certificate variables: alpha always, beta optional.
struct LiftedPoint {
  HullPoint p;
  double alpha1 = 0.0, alpha2 = 0.0;
  bool has_beta = false;
  double beta1 = 0.0, beta2 = 0.0;
};

// Which constraint system to evaluate.
//   disjunctive - x <= y, bordered M(beta) in PSD and RLT_x, two perspective
//                 cone memberships, RLT_y (requires beta)
//   nobeta      - linear conditions + all four PSD blocks (beta eliminated)
//   minimal     - linear conditions + the 5x5 block only
//   conjecture  - linear conditions + the weak complement-variable 5x5
enum class System { disjunctive, nobeta, minimal, conjecture };

const char* system_name(System s);
std::optional<System> system_from_name(std::string_view name);

// Rank-1 generator: on-pattern for the switches plus a box point on the
// active coordinates.
enum class YBits { none, first, second, both };

struct Atom {
  YBits ybits = YBits::none;
  double x1 = 0.0, x2 = 0.0;
};

// Canonical exact lift of an atom: X = x x^T, Y12 = y1*y2, and
// (alpha, beta) = (x1 e1, x1^2 e1) for the first-only pattern (mirrored for
// second-only), (0, 0) otherwise. Throws std::invalid_argument when x leaves
// the box [0, y].
LiftedPoint atom_lift(const Atom& a);

// Convex combination of lifted points (all certificate variables are affine).
// Weights must be nonnegative and sum to 1 within 1e-9.
LiftedPoint convex_mix(const std::vector<std::pair<double, LiftedPoint>>& parts);

// Bordered matrix (Y12, (x-alpha)^T; x-alpha, X - Diag(beta)).
SymMat build_M(const LiftedPoint& z, double beta1, double beta2);

// The four componentwise beta choices: index 1 picks the linear form
// X_jj - x_j + alpha_j, index 2 picks the perspective form
// alpha_j^2 / (y_j - Y12) with 0/0 := 0. p selects coordinate 1's form,
// q coordinate 2's. Throws DegenerateLiftError when y_j - Y12 vanishes but
// alpha_j does not.
std::array<double, 2> beta_pq(const LiftedPoint& z, int p, int q,
                              const TolerancePolicy& tol = {});

// Schur-form PSD blocks, affine in (x, X, y, Y12, alpha). s_j = x_j - alpha_j.
SymMat psd3_matrix(const LiftedPoint& z);        // 3x3 core
SymMat psd4_first_matrix(const LiftedPoint& z);  // core bordered by (y1-Y12, alpha1), full X11
SymMat psd4_second_matrix(const LiftedPoint& z); // core bordered by (y2-Y12, alpha2), full X22
SymMat psd5_matrix(const LiftedPoint& z);        // both borders, full diagonal

// Complement-variable matrices over (1, x, t) with t = e - y and
// T12 = 1 + Y12 - y1 - y2. `strengthened` equals `original` minus T12*u u^T
// for u = (1,0,0,1,1); both identities are verified on every call, and
// strengthened is PSD exactly when the 5x5 block above is (same quadratic
// form in a different basis).
struct TMatrices {
  SymMat strengthened = SymMat(5);
  SymMat original = SymMat(5);
};
TMatrices t_matrices(const LiftedPoint& z);

// The weak complement-variable matrix alone, no identity or verdict
// verification. Separation loops call this; everything else should prefer
// t_matrices.
SymMat t_weak_matrix(const LiftedPoint& z);

// Attach the componentwise-smallest valid beta: the larger of the linear
// form X_jj - x_j + alpha_j and the perspective form alpha_j^2/(y_j - Y12),
// floored at zero. On points satisfying the linear conditions this choice
// keeps M(beta) PSD whenever any valid beta does. Perspective terms with a
// vanishing denominator are taken as zero, matching the 0/0 convention.
LiftedPoint with_minimal_beta(const LiftedPoint& z,
                              const TolerancePolicy& tol = {});

// Per-constraint evaluation of one system. Degenerate lifts propagate from
// beta_pq (nobeta only); a hard disagreement between the Schur forms and the
// M(beta) route raises InternalCheckError.
Report check(const LiftedPoint& z, System system, const TolerancePolicy& tol = {});

// Split into the four on-pattern components. Block rows are (unit, x1, x2).
struct Decomposition {
  std::array<double, 4> lambda{};  // order: none, first, second, both
  SymMat Z_none = SymMat(3);
  SymMat Z_first = SymMat(3);
  SymMat Z_second = SymMat(3);
  SymMat Z_both = SymMat(3);
};

// Requires a point passing check(disjunctive) with beta present. Verifies
// weight nonnegativity, sum to one, the reconstruction identity
// (1, x^T; x, X) = sum of lambda_y Z_y to 1e-10, and membership of each block
// in its component set. Violations raise InternalCheckError.
Decomposition decompose(const LiftedPoint& z, const TolerancePolicy& tol = {});

// Exchange the two coordinates: x, diag(X), y, alpha, beta swap; X12 and Y12
// are fixed. Involution used for all "by symmetry" arguments.
LiftedPoint swap_coords(const LiftedPoint& z);

// Uniform-by-stages draw from the polytope cut out by the linear conditions
// alone (box, diagonal bounds, shifted RLT rows, alpha box, RLT on (y, Y12)).
// PSD blocks are NOT imposed; no beta. Covers the whole polytope, so it is
// the right generator for "linear implies ..." sweeps.
LiftedPoint sample_linear_feasible(Rng& rng);

}  // namespace swh
