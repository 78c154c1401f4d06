#include "swh/solver.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

#include "swh/errors.hpp"

namespace swh {

namespace {

enum VarIndex {
  vX1 = 0, vX2, vXX11, vXX12, vXX22, vY1, vY2, vYY12, vA1, vA2
};

double dot(const Vec10& a, const Vec10& b) {
  double s = 0.0;
  for (int i = 0; i < 10; ++i) s += a[i] * b[i];
  return s;
}

struct LinRow {
  const char* name;
  Vec10 a{};
  double b = 0.0;  // a . v >= b
};

// Shared linear constraints of every system, mirroring the named conditions
// reported by check(): diagonal bounds, x <= y, the off-diagonal RLT rows in
// the shifted variables s = x - alpha, the alpha box, and RLT on (y, Y12).
const std::vector<LinRow>& linear_rows() {
  static const std::vector<LinRow> rows = [] {
    std::vector<LinRow> r;
    auto row = [&r](const char* name,
                    std::initializer_list<std::pair<int, double>> terms,
                    double b) {
      LinRow lr;
      lr.name = name;
      lr.b = b;
      for (const auto& t : terms) lr.a[t.first] = t.second;
      r.push_back(lr);
    };
    row("lin_X11_le_x1", {{vX1, 1.0}, {vXX11, -1.0}}, 0.0);
    row("lin_X22_le_x2", {{vX2, 1.0}, {vXX22, -1.0}}, 0.0);
    row("lin_x1_le_y1", {{vY1, 1.0}, {vX1, -1.0}}, 0.0);
    row("lin_x2_le_y2", {{vY2, 1.0}, {vX2, -1.0}}, 0.0);
    row("lin_X12_nonneg", {{vXX12, 1.0}}, 0.0);
    row("lin_X12_lb",
        {{vXX12, 1.0}, {vX1, -1.0}, {vA1, 1.0}, {vX2, -1.0}, {vA2, 1.0}, {vYY12, 1.0}},
        0.0);
    row("lin_X12_le_s1", {{vX1, 1.0}, {vA1, -1.0}, {vXX12, -1.0}}, 0.0);
    row("lin_X12_le_s2", {{vX2, 1.0}, {vA2, -1.0}, {vXX12, -1.0}}, 0.0);
    row("lin_alpha1_nonneg", {{vA1, 1.0}}, 0.0);
    row("lin_alpha1_ub", {{vY1, 1.0}, {vYY12, -1.0}, {vA1, -1.0}}, 0.0);
    row("lin_alpha2_nonneg", {{vA2, 1.0}}, 0.0);
    row("lin_alpha2_ub", {{vY2, 1.0}, {vYY12, -1.0}, {vA2, -1.0}}, 0.0);
    row("rlty_Y12_nonneg", {{vYY12, 1.0}}, 0.0);
    row("rlty_Y12_lb", {{vYY12, 1.0}, {vY1, -1.0}, {vY2, -1.0}}, -1.0);
    row("rlty_Y12_le_y1", {{vY1, 1.0}, {vYY12, -1.0}}, 0.0);
    row("rlty_Y12_le_y2", {{vY2, 1.0}, {vYY12, -1.0}}, 0.0);
    return r;
  }();
  return rows;
}

double quad_form(const SymMat& m, const std::array<double, 6>& w) {
  const int n = m.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    s += m(i, i) * w[i] * w[i];
    for (int j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * w[i] * w[j];
  }
  return s;
}

struct Block {
  const char* name;
  SymMat (*build)(const LiftedPoint&);
};

// Small blocks first so cheap certificates are preferred.
const Block kNobetaBlocks[] = {{"psd_3x3", psd3_matrix},
                               {"psd_4x4_first", psd4_first_matrix},
                               {"psd_4x4_second", psd4_second_matrix},
                               {"psd_5x5", psd5_matrix}};
const Block kMinimalBlocks[] = {{"psd_5x5", psd5_matrix}};
const Block kConjectureBlocks[] = {{"psd_t_weak", t_weak_matrix}};

bool normalize_cut(Cut& c) {
  double n2 = 0.0;
  for (double x : c.normal) n2 += x * x;
  const double nrm = std::sqrt(n2);
  if (nrm <= 1e-14) return false;
  for (double& x : c.normal) x /= nrm;
  c.offset /= nrm;
  return true;
}

std::optional<Cut> psd_cut(const Vec10& v, const Block& blk,
                           const TolerancePolicy& tol) {
  const SymMat m = blk.build(from_vector(v));
  const EigPair ep = eig_min(m);
  if (ep.value >= psd_floor(m, tol)) return std::nullopt;

  // The block entries are affine in v, so w^T B(v) w = c0 + k . v is a valid
  // linear inequality violated at v; probe the builder at 0 and the unit
  // vectors to read off the coefficients.
  Vec10 zero{};
  const double c0 = quad_form(blk.build(from_vector(zero)), ep.vector);
  Cut c;
  c.name = blk.name;
  for (int i = 0; i < 10; ++i) {
    Vec10 ei{};
    ei[i] = 1.0;
    c.normal[i] = quad_form(blk.build(from_vector(ei)), ep.vector) - c0;
  }
  c.offset = -c0;
  if (!normalize_cut(c)) return std::nullopt;
  return c;
}

}  // namespace

Vec10 to_vector(const LiftedPoint& z) {
  return {z.p.x1, z.p.x2, z.p.X11, z.p.X12, z.p.X22,
          z.p.y1, z.p.y2, z.p.Y12, z.alpha1, z.alpha2};
}

LiftedPoint from_vector(const Vec10& v) {
  LiftedPoint z;
  z.p.x1 = v[vX1];
  z.p.x2 = v[vX2];
  z.p.X11 = v[vXX11];
  z.p.X12 = v[vXX12];
  z.p.X22 = v[vXX22];
  z.p.y1 = v[vY1];
  z.p.y2 = v[vY2];
  z.p.Y12 = v[vYY12];
  z.alpha1 = v[vA1];
  z.alpha2 = v[vA2];
  return z;
}

Vec10 objective_vector(const Objective& o) {
  return {o.cx1, o.cx2, o.Q11, 2.0 * o.Q12, o.Q22, o.cy1, o.cy2, o.cY, 0.0, 0.0};
}

std::optional<Cut> separate(const Vec10& v, System system,
                            const TolerancePolicy& tol) {
  // Box first: [0,1]^10 is implied by each system and keeps iterates tame.
  for (int i = 0; i < 10; ++i) {
    if (v[i] < -tol.eq_tol) {
      Cut c;
      c.normal[i] = 1.0;
      c.offset = 0.0;
      c.name = "box_lower";
      return c;
    }
    if (v[i] > 1.0 + tol.eq_tol) {
      Cut c;
      c.normal[i] = -1.0;
      c.offset = -1.0;
      c.name = "box_upper";
      return c;
    }
  }
  for (const LinRow& lr : linear_rows()) {
    if (dot(lr.a, v) < lr.b - tol.eq_tol) {
      Cut c;
      c.normal = lr.a;
      c.offset = lr.b;
      c.name = lr.name;
      normalize_cut(c);
      return c;
    }
  }
  const Block* blocks = kNobetaBlocks;
  int nblocks = 4;
  if (system == System::minimal) {
    blocks = kMinimalBlocks;
    nblocks = 1;
  } else if (system == System::conjecture) {
    blocks = kConjectureBlocks;
    nblocks = 1;
  }
  for (int k = 0; k < nblocks; ++k) {
    if (auto c = psd_cut(v, blocks[k], tol)) return c;
  }
  return std::nullopt;
}

SolveResult support(System system, const Objective& o, double accuracy) {
  if (!(accuracy >= 1e-8))
    throw std::invalid_argument("support: accuracy must be at least 1e-8");
  const TolerancePolicy tol{};
  const int n = 10;
  const Vec10 obj = objective_vector(o);
  const double onorm = std::sqrt(dot(obj, obj));
  const double radius = std::sqrt(0.25 * n);  // circumscribes [0,1]^10

  Vec10 c;
  c.fill(0.5);
  std::array<std::array<double, 10>, 10> B{};
  for (int i = 0; i < n; ++i) B[i][i] = radius * radius;

  Vec10 vbest{};
  double fbest = 0.0;  // the origin (all-off point) is feasible everywhere
  double umin = std::numeric_limits<double>::infinity();
  double gap = umin;

  // Volume shrinks by a fixed factor per step, so the certified gap closes in
  // O(n^2 log(radius * |obj| / accuracy)) iterations; the slack on top absorbs
  // tolerance-scale wobble near optimality.
  const double span = radius * std::max(1.0, onorm) / accuracy;
  const int cap =
      static_cast<int>(2.0 * n * (n + 1) * std::log(std::max(2.7, span))) + 4000;

  int iter = 0;
  for (; iter < cap; ++iter) {
    double q = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q += obj[i] * B[i][j] * obj[j];
    const double U = dot(obj, c) + std::sqrt(std::max(0.0, q));
    if (U < umin) umin = U;
    gap = umin - fbest;
    if (gap <= accuracy) break;

    // keep the halfspace a . v >= b: a violated constraint when the center is
    // infeasible, the incumbent level set otherwise. Cutting at b rather than
    // through the center (a "deep" cut) is what lets the certified gap close
    // when the optimum sits on the boundary.
    Vec10 a{};
    double b = 0.0;
    bool objective_cut = false;
    if (auto cut = separate(c, system, tol)) {
      a = cut->normal;
      b = cut->offset;
    } else {
      const double f = dot(obj, c);
      if (f > fbest) {
        fbest = f;
        vbest = c;
        gap = umin - fbest;
        if (gap <= accuracy) break;
      }
      if (onorm == 0.0) break;  // constant objective, incumbent is exact
      a = obj;
      b = fbest;
      objective_cut = true;
    }

    Vec10 Ba{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Ba[i] += B[i][j] * a[j];
    const double aBa = dot(a, Ba);
    if (!(aBa > 1e-28)) break;  // collapsed; the final gap test decides
    const double sq = std::sqrt(aBa);
    double alpha = (b - dot(a, c)) / sq;
    if (alpha >= 1.0) {
      if (objective_cut) {
        // nothing above the incumbent is left inside the ellipsoid
        umin = std::min(umin, fbest);
        gap = 0.0;
        break;
      }
      alpha = 0.98;  // numerically absurd for a valid constraint; stay safe
    }
    alpha = std::max(alpha, 0.0);

    const double tau = (1.0 + n * alpha) / (n + 1.0);
    const double sigma = 2.0 * (1.0 + n * alpha) / ((n + 1.0) * (1.0 + alpha));
    const double delta = (double(n * n) / (n * n - 1.0)) * (1.0 - alpha * alpha);
    for (int i = 0; i < n; ++i) c[i] += tau * Ba[i] / sq;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        B[i][j] = delta * (B[i][j] - sigma * Ba[i] * Ba[j] / aBa);
        B[j][i] = B[i][j];
      }
  }

  if (!(gap <= accuracy)) {
    char msg[256];
    std::snprintf(msg, sizeof msg,
                  "support(%s): gap %.3e above accuracy %.3e after %d "
                  "iterations (best %.17g, bound %.17g)",
                  system_name(system), gap, accuracy, iter, fbest, umin);
    throw NonConvergenceError(msg);
  }

  SolveResult res;
  res.value = fbest;
  res.iterations = iter;
  res.certified_gap = gap;
  res.argmax = from_vector(vbest);
  if (system == System::disjunctive)
    res.argmax = with_minimal_beta(res.argmax, tol);
  return res;
}

}  // namespace swh
