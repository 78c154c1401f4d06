#include "swh/repair.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "swh/errors.hpp"
#include "swh/rng.hpp"

namespace swh {

namespace {

// A block "hard-fails" when its eig_min sits far below any tolerance band;
// marginal failures inside the band are rounding noise on facts that hold
// exactly, and get cleared rather than escalated.
bool hard_fail(double eigmin, const SymMat& m) { return eigmin < -1e-7 * (1.0 + m.max_abs()); }

}  // namespace

FailureProfile classify(const LiftedPoint& z, const TolerancePolicy& tol) {
  const Report pre = check(z, System::minimal, tol);
  if (!pre.pass()) {
    const Condition* w = pre.worst();
    throw std::invalid_argument("classify: precondition violated: " +
                                (w ? w->name : std::string("unknown")));
  }

  const SymMat m3 = psd3_matrix(z);
  const SymMat m4a = psd4_first_matrix(z);
  const SymMat m4b = psd4_second_matrix(z);
  const SymMat m5 = psd5_matrix(z);

  FailureProfile fp;
  fp.slack_3x3 = eig_min(m3).value;
  fp.slack_4x4first = eig_min(m4a).value;
  fp.slack_4x4second = eig_min(m4b).value;
  fp.slack_5x5 = eig_min(m5).value;
  fp.fails_3x3 = fp.slack_3x3 < psd_floor(m3, tol);
  fp.fails_4x4first = fp.slack_4x4first < psd_floor(m4a, tol);
  fp.fails_4x4second = fp.slack_4x4second < psd_floor(m4b, tol);
  fp.fails_5x5 = fp.slack_5x5 < psd_floor(m5, tol);

  // structural fact: the 3x3 core is implied by the linear conditions
  if (fp.fails_3x3) {
    if (hard_fail(fp.slack_3x3, m3))
      throw InternalCheckError("classify: 3x3 core failed under linear feasibility");
    fp.fails_3x3 = false;
  }
  // structural fact: the two 4x4 blocks cannot both fail
  if (fp.fails_4x4first && fp.fails_4x4second) {
    const bool ha = hard_fail(fp.slack_4x4first, m4a);
    const bool hb = hard_fail(fp.slack_4x4second, m4b);
    if (ha && hb)
      throw InternalCheckError("classify: both 4x4 blocks failed");
    if (!ha) fp.fails_4x4first = false;
    if (!hb && fp.fails_4x4first) fp.fails_4x4second = false;
  }
  // 5x5 was part of the precondition; a marginal flag here is noise
  fp.fails_5x5 = false;
  return fp;
}

LiftedPoint reduce_alpha1(const LiftedPoint& z, const TolerancePolicy& tol) {
  if (z.alpha1 <= tol.eq_tol)
    throw std::invalid_argument("reduce_alpha1: alpha1 is not positive");
  const double den = z.p.y1 - z.p.Y12;
  if (den <= tol.eq_tol)
    throw std::invalid_argument("reduce_alpha1: y1 - Y12 is not positive");

  LiftedPoint out = z;
  out.p.x1 = z.p.x1 - z.alpha1;
  out.p.X11 = z.p.X11 - z.alpha1 * z.alpha1 / den;
  out.alpha1 = 0.0;
  out.has_beta = false;

  const FailureProfile fp = classify(out, tol);
  if (!fp.lacks_only_first() && !fp.clean())
    throw InternalCheckError("reduce_alpha1: reduction changed the failure profile");
  return out;
}

Alpha2Interval alpha2_interval(const LiftedPoint& z, const TolerancePolicy& tol) {
  if (std::fabs(z.alpha1) > tol.eq_tol)
    throw std::invalid_argument("alpha2_interval: requires alpha1 = 0");
  const double X11 = z.p.X11;
  if (X11 <= tol.eq_tol)
    throw std::invalid_argument("alpha2_interval: requires X11 > 0");

  Alpha2Interval iv;
  iv.theta = z.p.Y12 * X11 - z.p.x1 * z.p.x1;
  if (iv.theta < -tol.eq_tol)
    throw std::invalid_argument("alpha2_interval: theta < 0");
  const double th = std::max(iv.theta, 0.0);

  // discriminant of the determinant quadratic in x2 - alpha2; nonnegative
  // because 0 <= X12 <= x1 here
  const double disc = std::max(th * (th + 4.0 * z.p.X12 * (z.p.x1 - z.p.X12)), 0.0);
  const double root = std::sqrt(disc);
  const double base = z.p.x2 - z.p.X12 * z.p.x1 / X11;
  iv.lo = base - (th + root) / (2.0 * X11);
  iv.hi = base - (th - root) / (2.0 * X11);
  return iv;
}

LambdaInterval lambda_interval(const LiftedPoint& z, const TolerancePolicy& tol) {
  if (std::fabs(z.alpha1) > tol.eq_tol)
    throw std::invalid_argument("lambda_interval: requires alpha1 = 0");
  const double d = z.p.y2 - z.p.Y12;
  if (d <= tol.eq_tol)
    throw std::invalid_argument("lambda_interval: requires y2 - Y12 > 0");
  const double g = z.p.x2 - z.p.X22;
  if (g < -tol.eq_tol || g > 0.25 * d + tol.eq_tol)
    throw std::invalid_argument("lambda_interval: 0 <= x2 - X22 <= (y2 - Y12)/4 violated");

  const double gc = std::clamp(g, 0.0, 0.25 * d);
  LambdaInterval iv;
  iv.rho = std::sqrt(1.0 - 4.0 * gc / d);
  iv.lo = 0.5 * (1.0 - iv.rho) * d;
  iv.hi = 0.5 * (1.0 + iv.rho) * d;
  return iv;
}

namespace {

// z lacks only the first 4x4 block (or is already clean). Moves alpha2 to the
// nearest admissible endpoint computed in the alpha1 = 0 frame, then restores
// the original (x, X, alpha1).
LiftedPoint repair_first(const LiftedPoint& z, const FailureProfile& fp,
                         const TolerancePolicy& tol) {
  LiftedPoint work = z;
  if (z.alpha1 > tol.eq_tol) work = reduce_alpha1(z, tol);

  const Alpha2Interval iv = alpha2_interval(work, tol);
  const double a2 = z.alpha2;
  double a2_new;
  if (a2 < iv.lo) {
    a2_new = iv.lo;
  } else if (a2 > iv.hi) {
    a2_new = iv.hi;
  } else {
    // inside the admissible interval yet flagged: tolerance noise; accept the
    // point if it passes with a 10x looser PSD floor
    TolerancePolicy loose = tol;
    loose.psd_tol = 10.0 * tol.psd_tol;
    if (check(z, System::nobeta, loose).pass()) return z;
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "repair: alpha2 = %.12e already inside [%.12e, %.12e] but the first 4x4 "
                  "block fails (eig_min %.3e)",
                  a2, iv.lo, iv.hi, fp.slack_4x4first);
    throw InternalCheckError(msg);
  }

  LiftedPoint out = z;
  out.alpha2 = a2_new;
  out.has_beta = false;
  return out;
}

}  // namespace

LiftedPoint repair(const LiftedPoint& z, const TolerancePolicy& tol) {
  const Report pre = check(z, System::minimal, tol);
  if (!pre.pass()) {
    const Condition* w = pre.worst();
    throw std::invalid_argument("repair: precondition (linear + 5x5) violated: " +
                                (w ? w->name : std::string("unknown")));
  }

  const FailureProfile fp = classify(z, tol);
  LiftedPoint out;
  if (fp.clean()) {
    out = z;
  } else if (fp.fails_4x4first) {
    out = repair_first(z, fp, tol);
  } else {
    // mirrored case, handled through the coordinate-swap involution
    const LiftedPoint zs = swap_coords(z);
    FailureProfile fs = classify(zs, tol);
    out = swap_coords(repair_first(zs, fs, tol));
  }

  const Report post = check(out, System::nobeta, tol);
  if (!post.pass())
    throw InternalCheckError("repair: output fails the full system\n" + post.summary());
  return out;
}

std::vector<LiftedPoint> sample_lacking(std::uint64_t seed, int budget) {
  if (budget <= 0) throw std::invalid_argument("sample_lacking: budget must be positive");
  std::vector<LiftedPoint> out;
  out.reserve(static_cast<std::size_t>(budget));
  const TolerancePolicy tol;

  const long max_attempts = 400L * budget;
  for (long k = 0; k < max_attempts && static_cast<int>(out.size()) < budget; ++k) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(k));
    const bool want_alpha1_pos = (k % 2 == 1);

    // random mixture of atoms for the moment part, shaped for yield: lacking
    // points need x1 variance across atoms (else theta below dies), a solid
    // both-pattern weight, and x2 hugging {0, 1} so coordinate 2 stays tight
    const int natoms = rng.uniform_int(2, 4);
    std::vector<std::pair<double, LiftedPoint>> parts;
    double wsum = 0.0;
    for (int i = 0; i < natoms; ++i) {
      Atom a;
      const int roll = rng.uniform_int(0, 8);
      a.ybits = roll < 1   ? YBits::none
                : roll < 2 ? YBits::first
                : roll < 5 ? YBits::second
                           : YBits::both;
      const double y1 = (a.ybits == YBits::first || a.ybits == YBits::both) ? 1.0 : 0.0;
      const double y2 = (a.ybits == YBits::second || a.ybits == YBits::both) ? 1.0 : 0.0;
      const double u1 = rng.uniform(), u2 = rng.uniform();
      a.x1 = (u1 < 0.4 ? 0.05 * u1 : 0.3 + 0.7 * u1) * y1;
      a.x2 = (u2 < 0.5 ? 0.1 * u2 : 1.0 - 0.1 * u2) * y2;
      const double w = 0.05 + rng.uniform();
      parts.emplace_back(w, atom_lift(a));
      wsum += w;
    }
    for (auto& pw : parts) pw.first /= wsum;
    HullPoint b = convex_mix(parts).p;

    // need solid room in both switch margins and a positive theta
    if (b.X11 <= 0.02 || b.y2 - b.Y12 <= 0.05 || b.y1 - b.Y12 <= 0.02) continue;
    const double theta = b.Y12 * b.X11 - b.x1 * b.x1;
    if (theta <= 1e-4) continue;

    // admissible alpha2 range from the linear conditions (alpha1 = 0 frame)
    const double box_lo = std::max(0.0, b.x1 + b.x2 - b.X12 - b.Y12);
    const double box_hi = std::min(b.y2 - b.Y12, b.x2 - b.X12);
    if (box_hi - box_lo < 1e-3) continue;

    // scan the range for alpha2 values where the first 4x4 block fails
    // solidly while the 5x5 and the second 4x4 stay strictly inside; the
    // windows are irregular, so probing the actual verdicts beats algebra
    double picks[64];
    int npicks = 0;
    for (int s = 0; s < 64; ++s) {
      const double a2 = box_lo + (box_hi - box_lo) * (s + 0.5) / 64.0;
      LiftedPoint probe{b, 0.0, a2, false, 0.0, 0.0};
      const SymMat m4a = psd4_first_matrix(probe);
      if (eig_min(m4a).value >= -1e-6 * (1.0 + m4a.max_abs())) continue;
      const SymMat m5 = psd5_matrix(probe);
      if (eig_min(m5).value < 1e-8) continue;
      const SymMat m4b = psd4_second_matrix(probe);
      if (eig_min(m4b).value < 1e-8) continue;
      picks[npicks++] = a2;
    }
    if (npicks == 0) continue;
    const double a2 = picks[rng.uniform_int(0, npicks - 1)];

    LiftedPoint cand{b, 0.0, a2, false, 0.0, 0.0};

    if (want_alpha1_pos) {
      // lift coordinate 1 off its trivial certificate, preserving the profile
      const double d1 = b.y1 - b.Y12;
      bool placed = false;
      for (int t = 0; t < 8 && !placed; ++t) {
        const double a1 = rng.uniform(0.05, 1.0) * d1;
        LiftedPoint up = cand;
        up.alpha1 = a1;
        up.p.x1 = cand.p.x1 + a1;
        up.p.X11 = cand.p.X11 + a1 * a1 / d1;
        if (up.p.x1 > up.p.y1 || up.p.X11 > up.p.x1) continue;
        cand = up;
        placed = true;
      }
      if (!placed) continue;
    }

    if (!check(cand, System::minimal, tol).pass()) continue;
    const FailureProfile fp = classify(cand, tol);
    if (!fp.lacks_only_first()) continue;
    out.push_back(cand);
  }
  return out;
}

}  // namespace swh
