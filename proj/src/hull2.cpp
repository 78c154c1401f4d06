#include "swh/hull2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "swh/errors.hpp"
#include "swh/hull1.hpp"

namespace swh {

const char* system_name(System s) {
  switch (s) {
    case System::disjunctive: return "disjunctive";
    case System::nobeta: return "nobeta";
    case System::minimal: return "minimal";
    case System::conjecture: return "conjecture";
  }
  return "?";
}

std::optional<System> system_from_name(std::string_view name) {
  if (name == "disj" || name == "disjunctive") return System::disjunctive;
  if (name == "nobeta") return System::nobeta;
  if (name == "minimal") return System::minimal;
  if (name == "conjecture") return System::conjecture;
  return std::nullopt;
}

LiftedPoint atom_lift(const Atom& a) {
  const double y1 = (a.ybits == YBits::first || a.ybits == YBits::both) ? 1.0 : 0.0;
  const double y2 = (a.ybits == YBits::second || a.ybits == YBits::both) ? 1.0 : 0.0;
  if (a.x1 < 0.0 || a.x1 > y1 || a.x2 < 0.0 || a.x2 > y2)
    throw std::invalid_argument("atom_lift: x outside the box [0, y]");

  LiftedPoint z;
  z.p = {a.x1, a.x2, a.x1 * a.x1, a.x1 * a.x2, a.x2 * a.x2, y1, y2, y1 * y2};
  z.has_beta = true;
  if (a.ybits == YBits::first) {
    z.alpha1 = a.x1;
    z.beta1 = a.x1 * a.x1;
  } else if (a.ybits == YBits::second) {
    z.alpha2 = a.x2;
    z.beta2 = a.x2 * a.x2;
  }
  // both-on and all-off patterns take (alpha, beta) = (0, 0)
  return z;
}

LiftedPoint convex_mix(const std::vector<std::pair<double, LiftedPoint>>& parts) {
  double wsum = 0.0;
  bool all_beta = true;
  for (const auto& [w, z] : parts) {
    if (w < 0.0) throw std::invalid_argument("convex_mix: negative weight");
    wsum += w;
    all_beta = all_beta && z.has_beta;
  }
  if (std::fabs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("convex_mix: weights must sum to 1");

  LiftedPoint out;
  out.has_beta = all_beta;
  for (const auto& [w, z] : parts) {
    out.p.x1 += w * z.p.x1;
    out.p.x2 += w * z.p.x2;
    out.p.X11 += w * z.p.X11;
    out.p.X12 += w * z.p.X12;
    out.p.X22 += w * z.p.X22;
    out.p.y1 += w * z.p.y1;
    out.p.y2 += w * z.p.y2;
    out.p.Y12 += w * z.p.Y12;
    out.alpha1 += w * z.alpha1;
    out.alpha2 += w * z.alpha2;
    if (all_beta) {
      out.beta1 += w * z.beta1;
      out.beta2 += w * z.beta2;
    }
  }
  return out;
}

SymMat build_M(const LiftedPoint& z, double beta1, double beta2) {
  const HullPoint& p = z.p;
  SymMat m(3);
  m.set(0, 0, p.Y12);
  m.set(0, 1, p.x1 - z.alpha1);
  m.set(0, 2, p.x2 - z.alpha2);
  m.set(1, 1, p.X11 - beta1);
  m.set(1, 2, p.X12);
  m.set(2, 2, p.X22 - beta2);
  return m;
}

std::array<double, 2> beta_pq(const LiftedPoint& z, int p, int q, const TolerancePolicy& tol) {
  if ((p != 1 && p != 2) || (q != 1 && q != 2))
    throw std::invalid_argument("beta_pq: indices must be 1 or 2");

  const auto component = [&](int j, int mode) -> double {
    const double xj = (j == 1) ? z.p.x1 : z.p.x2;
    const double Xjj = (j == 1) ? z.p.X11 : z.p.X22;
    const double yj = (j == 1) ? z.p.y1 : z.p.y2;
    const double aj = (j == 1) ? z.alpha1 : z.alpha2;
    if (mode == 1) return Xjj - xj + aj;
    const double denom = yj - z.p.Y12;
    if (std::fabs(denom) <= tol.eq_tol) {
      if (std::fabs(aj) <= tol.eq_tol) return 0.0;  // 0/0 := 0
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "beta_pq: y%d - Y12 = %.3e but alpha%d = %.3e", j, denom, j, aj);
      throw DegenerateLiftError(msg);
    }
    return aj * aj / denom;
  };

  return {component(1, p), component(2, q)};
}

// ---- Schur-form PSD blocks ------------------------------------------------

SymMat psd3_matrix(const LiftedPoint& z) {
  const double s1 = z.p.x1 - z.alpha1, s2 = z.p.x2 - z.alpha2;
  SymMat m(3);
  m.set(0, 0, z.p.Y12);
  m.set(0, 1, s1);
  m.set(0, 2, s2);
  m.set(1, 1, s1);
  m.set(1, 2, z.p.X12);
  m.set(2, 2, s2);
  return m;
}

SymMat psd4_first_matrix(const LiftedPoint& z) {
  const double s1 = z.p.x1 - z.alpha1, s2 = z.p.x2 - z.alpha2;
  SymMat m(4);
  m.set(0, 0, z.p.y1 - z.p.Y12);
  m.set(0, 2, z.alpha1);
  m.set(1, 1, z.p.Y12);
  m.set(1, 2, s1);
  m.set(1, 3, s2);
  m.set(2, 2, z.p.X11);
  m.set(2, 3, z.p.X12);
  m.set(3, 3, s2);
  return m;
}

SymMat psd4_second_matrix(const LiftedPoint& z) {
  const double s1 = z.p.x1 - z.alpha1, s2 = z.p.x2 - z.alpha2;
  SymMat m(4);
  m.set(0, 0, z.p.y2 - z.p.Y12);
  m.set(0, 3, z.alpha2);
  m.set(1, 1, z.p.Y12);
  m.set(1, 2, s1);
  m.set(1, 3, s2);
  m.set(2, 2, s1);
  m.set(2, 3, z.p.X12);
  m.set(3, 3, z.p.X22);
  return m;
}

SymMat psd5_matrix(const LiftedPoint& z) {
  const double s1 = z.p.x1 - z.alpha1, s2 = z.p.x2 - z.alpha2;
  SymMat m(5);
  m.set(0, 0, z.p.y1 - z.p.Y12);
  m.set(0, 3, z.alpha1);
  m.set(1, 1, z.p.y2 - z.p.Y12);
  m.set(1, 4, z.alpha2);
  m.set(2, 2, z.p.Y12);
  m.set(2, 3, s1);
  m.set(2, 4, s2);
  m.set(3, 3, z.p.X11);
  m.set(3, 4, z.p.X12);
  m.set(4, 4, z.p.X22);
  return m;
}

// ---- complement-variable matrices -----------------------------------------

// Sign agreement helpers for the redundant PSD routes. "Hard" margins sit far
// outside the tolerance band, so a trip here is a bug, not rounding.
namespace {

bool hard_neg(double eigmin, double scale) { return eigmin < -1e-6 * (1.0 + scale); }
bool hard_pos(double eigmin, double scale) { return eigmin > -1e-10 * (1.0 + scale); }

void require_same_verdict(const SymMat& a, const char* aname, const SymMat& b,
                          const char* bname) {
  const double ea = eig_min(a).value, eb = eig_min(b).value;
  const double sa = a.max_abs(), sb = b.max_abs();
  if ((hard_neg(ea, sa) && hard_pos(eb, sb)) || (hard_neg(eb, sb) && hard_pos(ea, sa))) {
    char msg[192];
    std::snprintf(msg, sizeof msg,
                  "PSD routes disagree: %s eig_min=%.6e (scale %.3e) vs %s eig_min=%.6e "
                  "(scale %.3e)",
                  aname, ea, sa, bname, eb, sb);
    throw InternalCheckError(msg);
  }
}

}  // namespace

SymMat t_weak_matrix(const LiftedPoint& z) {
  const HullPoint& p = z.p;
  const double t1 = 1.0 - p.y1, t2 = 1.0 - p.y2;
  const double T12 = 1.0 + p.Y12 - p.y1 - p.y2;

  SymMat o(5);  // rows (unit, x1, x2, t1, t2)
  o.set(0, 0, 1.0);
  o.set(0, 1, p.x1);
  o.set(0, 2, p.x2);
  o.set(0, 3, t1);
  o.set(0, 4, t2);
  o.set(1, 1, p.X11);
  o.set(1, 2, p.X12);
  o.set(1, 3, 0.0);
  o.set(1, 4, z.alpha1);
  o.set(2, 2, p.X22);
  o.set(2, 3, z.alpha2);
  o.set(2, 4, 0.0);
  o.set(3, 3, t1);
  o.set(3, 4, T12);
  o.set(4, 4, t2);
  return o;
}

TMatrices t_matrices(const LiftedPoint& z) {
  const HullPoint& p = z.p;
  const double T12 = 1.0 + p.Y12 - p.y1 - p.y2;

  TMatrices tm;
  tm.original = t_weak_matrix(z);
  const SymMat& o = tm.original;

  SymMat& s = tm.strengthened;  // the same minus T12 * u u^T, u = (1,0,0,1,1)
  s = o;
  const int usup[3] = {0, 3, 4};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s.add(usup[i], usup[j], -T12);

  // (t_j - T12) telescopes to the opposite switch margin; cheap exactness check
  const double scale = 1.0 + o.max_abs();
  if (std::fabs(s(0, 3) - (p.y2 - p.Y12)) > 1e-12 * scale ||
      std::fabs(s(0, 4) - (p.y1 - p.Y12)) > 1e-12 * scale ||
      std::fabs(s(0, 0) - (p.y1 + p.y2 - p.Y12)) > 1e-12 * scale)
    throw InternalCheckError("t_matrices: subtraction identity violated");

  // strengthened = P * (5x5 block) * P^T for a fixed invertible P, so the PSD
  // verdicts must agree.
  require_same_verdict(tm.strengthened, "strengthened", psd5_matrix(z), "psd_5x5");
  return tm;
}

// ---- system checkers -------------------------------------------------------

namespace {

void add_psd(Report& r, std::string name, const SymMat& m, const TolerancePolicy& tol) {
  r.add(std::move(name), eig_min(m).value, psd_floor(m, tol));
}

// shared linear block: diag bounds, off-diagonal RLT on X in the shifted
// variables s = x - alpha, alpha box, RLT on (y, Y12)
void add_linear(Report& r, const LiftedPoint& z, const TolerancePolicy& tol) {
  const HullPoint& p = z.p;
  const double f = -tol.eq_tol;
  const double s1 = p.x1 - z.alpha1, s2 = p.x2 - z.alpha2;
  r.add("lin_X11_le_x1", p.x1 - p.X11, f);
  r.add("lin_X22_le_x2", p.x2 - p.X22, f);
  r.add("lin_x1_le_y1", p.y1 - p.x1, f);
  r.add("lin_x2_le_y2", p.y2 - p.x2, f);
  r.add("lin_X12_nonneg", p.X12, f);
  r.add("lin_X12_lb", p.X12 - (s1 + s2 - p.Y12), f);
  r.add("lin_X12_le_s1", s1 - p.X12, f);
  r.add("lin_X12_le_s2", s2 - p.X12, f);
  r.add("lin_alpha1_nonneg", z.alpha1, f);
  r.add("lin_alpha1_ub", (p.y1 - p.Y12) - z.alpha1, f);
  r.add("lin_alpha2_nonneg", z.alpha2, f);
  r.add("lin_alpha2_ub", (p.y2 - p.Y12) - z.alpha2, f);
  Report ry = rlty_report({{p.y1, p.y2}, p.Y12}, tol);
  for (auto& c : ry.conditions) r.conditions.push_back(std::move(c));
}

bool all_ok(const Report& r, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const Condition* c = r.find(n);
    if (!c || !c->ok) return false;
  }
  return true;
}

}  // namespace

Report check(const LiftedPoint& z, System system, const TolerancePolicy& tol) {
  const HullPoint& p = z.p;
  Report r;
  r.label = system_name(system);

  if (system == System::disjunctive) {
    if (!z.has_beta)
      throw std::invalid_argument("check(disjunctive): beta is required");
    const double f = -tol.eq_tol;
    r.add("lin_x1_le_y1", p.y1 - p.x1, f);
    r.add("lin_x2_le_y2", p.y2 - p.x2, f);

    const SymMat m = build_M(z, z.beta1, z.beta2);
    RltxMat rx;
    rx.lambda = m(0, 0);
    rx.x = {m(0, 1), m(0, 2)};
    rx.X.set(0, 0, m(1, 1));
    rx.X.set(0, 1, m(1, 2));
    rx.X.set(1, 1, m(2, 2));
    Report sub = rltx_report(rx, tol, "m_rltx");
    for (auto& c : sub.conditions) r.conditions.push_back(std::move(c));
    add_psd(r, "m_psd", m, tol);

    sub = per_report({z.alpha1, z.beta1, p.y1 - p.Y12}, tol, "per1");
    for (auto& c : sub.conditions) r.conditions.push_back(std::move(c));
    sub = per_report({z.alpha2, z.beta2, p.y2 - p.Y12}, tol, "per2");
    for (auto& c : sub.conditions) r.conditions.push_back(std::move(c));
    sub = rlty_report({{p.y1, p.y2}, p.Y12}, tol);
    for (auto& c : sub.conditions) r.conditions.push_back(std::move(c));
    return r;
  }

  add_linear(r, z, tol);

  if (system == System::minimal) {
    add_psd(r, "psd_5x5", psd5_matrix(z), tol);
    return r;
  }

  if (system == System::conjecture) {
    add_psd(r, "psd_t_weak", t_matrices(z).original, tol);
    return r;
  }

  // nobeta: all four Schur-form blocks, cross-validated against the bordered
  // M(beta) route. The pairing is by Schur complement of the border entry:
  // the first 4x4 block reduces to M with the perspective form in coordinate 1
  // and the linear form in coordinate 2, and so on.
  const SymMat m3 = psd3_matrix(z);
  const SymMat m4a = psd4_first_matrix(z);
  const SymMat m4b = psd4_second_matrix(z);
  const SymMat m5 = psd5_matrix(z);
  add_psd(r, "psd_3x3", m3, tol);
  add_psd(r, "psd_4x4_first", m4a, tol);
  add_psd(r, "psd_4x4_second", m4b, tol);
  add_psd(r, "psd_5x5", m5, tol);

  const auto b11 = beta_pq(z, 1, 1, tol);
  const auto b21 = beta_pq(z, 2, 1, tol);
  const auto b12 = beta_pq(z, 1, 2, tol);
  const auto b22 = beta_pq(z, 2, 2, tol);

  const bool gates_ok = all_ok(r, {"lin_alpha1_nonneg", "lin_alpha1_ub", "lin_alpha2_nonneg",
                                   "lin_alpha2_ub", "rlty_Y12_nonneg", "rlty_Y12_lb",
                                   "rlty_Y12_le_y1", "rlty_Y12_le_y2"});
  if (gates_ok) {
    require_same_verdict(m3, "psd_3x3", build_M(z, b11[0], b11[1]), "M(lin,lin)");
    require_same_verdict(m4a, "psd_4x4_first", build_M(z, b21[0], b21[1]), "M(per,lin)");
    require_same_verdict(m4b, "psd_4x4_second", build_M(z, b12[0], b12[1]), "M(lin,per)");
    require_same_verdict(m5, "psd_5x5", build_M(z, b22[0], b22[1]), "M(per,per)");
  }
  return r;
}

// ---- decomposition ---------------------------------------------------------

Decomposition decompose(const LiftedPoint& z, const TolerancePolicy& tol) {
  if (!z.has_beta)
    throw std::invalid_argument("decompose: beta is required");
  const HullPoint& p = z.p;

  Decomposition d;
  d.lambda = {1.0 - p.y1 - p.y2 + p.Y12,  // all-off weight
              p.y1 - p.Y12,               // first-only
              p.y2 - p.Y12,               // second-only (NOT y1 - Y12: the
                                          // weights must sum to 1)
              p.Y12};                     // both-on

  const double sum = d.lambda[0] + d.lambda[1] + d.lambda[2] + d.lambda[3];
  char msg[160];
  if (std::fabs(sum - 1.0) > tol.eq_tol) {
    std::snprintf(msg, sizeof msg, "decompose: weights sum to %.12f", sum);
    throw InternalCheckError(msg);
  }
  for (int i = 0; i < 4; ++i) {
    if (d.lambda[i] < -tol.eq_tol) {
      std::snprintf(msg, sizeof msg, "decompose: lambda[%d] = %.3e < 0", i, d.lambda[i]);
      throw InternalCheckError(msg);
    }
  }

  const double cut = 1e-13;  // weights below this carry no reconstructible mass
  d.Z_none.set(0, 0, 1.0);

  // normalized one-switch blocks; division noise grows like 1/lambda, so the
  // membership tolerance is widened accordingly
  const auto one_switch = [&](double lam, double a, double b, int coord, SymMat& out) {
    if (lam <= cut) return;
    const double u = a / lam, uu = b / lam;
    out.set(0, 0, 1.0);
    out.set(0, coord, u);
    out.set(coord, coord, uu);
    TolerancePolicy wide = tol;
    wide.eq_tol = std::max(tol.eq_tol, 3e-15 / lam);
    if (!h1_contains({u, uu, 1.0}, wide)) {
      Report rep = h1_report({u, uu, 1.0}, wide);
      throw InternalCheckError("decompose: one-switch block not a member\n" + rep.summary());
    }
  };
  one_switch(d.lambda[1], z.alpha1, z.beta1, 1, d.Z_first);
  one_switch(d.lambda[2], z.alpha2, z.beta2, 2, d.Z_second);

  const SymMat m = build_M(z, z.beta1, z.beta2);
  if (d.lambda[3] > cut) {
    const double lam = d.lambda[3];
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) d.Z_both.set(i, j, m(i, j) / lam);
    d.Z_both.set(0, 0, 1.0);  // Y12 / lambda_both exactly
    TolerancePolicy wide = tol;
    wide.eq_tol = std::max(tol.eq_tol, 3e-15 / lam);
    wide.psd_tol = std::max(tol.psd_tol, 3e-15 / lam);
    RltxMat rx;
    rx.lambda = 1.0;
    rx.x = {d.Z_both(0, 1), d.Z_both(0, 2)};
    rx.X.set(0, 0, d.Z_both(1, 1));
    rx.X.set(0, 1, d.Z_both(1, 2));
    rx.X.set(1, 1, d.Z_both(2, 2));
    if (!is_psd(d.Z_both, wide) || !rltx_contains(rx, wide))
      throw InternalCheckError("decompose: both-on block fails PSD/RLT membership");
  }

  // reconstruction from the raw (unnormalized) block contributions
  SymMat rec(3);
  rec.set(0, 0, d.lambda[0] + d.lambda[1] + d.lambda[2] + d.lambda[3]);
  rec.set(0, 1, z.alpha1 + m(0, 1));
  rec.set(0, 2, z.alpha2 + m(0, 2));
  rec.set(1, 1, z.beta1 + m(1, 1));
  rec.set(1, 2, m(1, 2));
  rec.set(2, 2, z.beta2 + m(2, 2));

  const double target[3][3] = {{1.0, p.x1, p.x2}, {p.x1, p.X11, p.X12}, {p.x2, p.X12, p.X22}};
  double resid = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) resid = std::max(resid, std::fabs(rec(i, j) - target[i][j]));
  if (resid > 1e-10) {
    std::snprintf(msg, sizeof msg, "decompose: reconstruction residual %.3e", resid);
    throw InternalCheckError(msg);
  }
  return d;
}

LiftedPoint swap_coords(const LiftedPoint& z) {
  LiftedPoint s = z;
  std::swap(s.p.x1, s.p.x2);
  std::swap(s.p.X11, s.p.X22);
  std::swap(s.p.y1, s.p.y2);
  std::swap(s.alpha1, s.alpha2);
  std::swap(s.beta1, s.beta2);
  return s;
}

LiftedPoint sample_linear_feasible(Rng& rng) {
  LiftedPoint z;
  HullPoint& p = z.p;
  p.y1 = rng.uniform();
  p.y2 = rng.uniform();
  p.Y12 = rng.uniform(std::max(0.0, p.y1 + p.y2 - 1.0), std::min(p.y1, p.y2));
  z.alpha1 = rng.uniform(0.0, p.y1 - p.Y12);
  z.alpha2 = rng.uniform(0.0, p.y2 - p.Y12);
  // s_j = x_j - alpha_j needs max(s1, s2) <= Y12 for the X12 window to open
  const double s1 = rng.uniform(0.0, std::min(p.Y12, p.y1 - z.alpha1));
  const double s2 = rng.uniform(0.0, std::min(p.Y12, p.y2 - z.alpha2));
  p.x1 = z.alpha1 + s1;
  p.x2 = z.alpha2 + s2;
  p.X11 = rng.uniform(0.0, p.x1);
  p.X22 = rng.uniform(0.0, p.x2);
  p.X12 = rng.uniform(std::max(0.0, s1 + s2 - p.Y12), std::min(s1, s2));
  return z;
}

LiftedPoint with_minimal_beta(const LiftedPoint& z, const TolerancePolicy& tol) {
  auto component = [&](double alpha, double Xjj, double xj, double denom) {
    double quad = denom > tol.eq_tol ? alpha * alpha / denom : 0.0;
    return std::max({quad, Xjj - xj + alpha, 0.0});
  };
  LiftedPoint out = z;
  out.beta1 = component(z.alpha1, z.p.X11, z.p.x1, z.p.y1 - z.p.Y12);
  out.beta2 = component(z.alpha2, z.p.X22, z.p.x2, z.p.y2 - z.p.Y12);
  out.has_beta = true;
  return out;
}

}  // namespace swh
