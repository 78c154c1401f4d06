#include "swh/cones.hpp"

#include <algorithm>
#include <stdexcept>

namespace swh {

Report per_report(const PerPoint& p, const TolerancePolicy& tol, const std::string& prefix) {
  Report r;
  r.label = prefix;
  const double f = -tol.eq_tol;
  r.add(prefix + "_conic", p.beta * p.gamma - p.alpha * p.alpha, f);
  r.add(prefix + "_beta_nonneg", p.beta, f);
  r.add(prefix + "_alpha_ge_beta", p.alpha - p.beta, f);
  r.add(prefix + "_gamma_ge_alpha", p.gamma - p.alpha, f);
  return r;
}

bool per_contains(const PerPoint& p, const TolerancePolicy& tol) {
  return per_report(p, tol).pass();
}

Report rltx_report(const RltxMat& m, const TolerancePolicy& tol, const std::string& prefix) {
  if (m.X.dim() != 2) throw std::invalid_argument("rltx: X must be 2x2");
  Report r;
  r.label = prefix;
  const double f = -tol.eq_tol;
  const double X11 = m.X(0, 0), X12 = m.X(0, 1), X22 = m.X(1, 1);
  r.add(prefix + "_lambda_nonneg", m.lambda, f);
  r.add(prefix + "_X11_nonneg", X11, f);
  r.add(prefix + "_X22_nonneg", X22, f);
  r.add(prefix + "_X11_le_x1", m.x[0] - X11, f);
  r.add(prefix + "_X22_le_x2", m.x[1] - X22, f);
  r.add(prefix + "_X12_nonneg", X12, f);
  r.add(prefix + "_X12_lb", X12 - (m.x[0] + m.x[1] - m.lambda), f);
  r.add(prefix + "_X12_le_x1", m.x[0] - X12, f);
  r.add(prefix + "_X12_le_x2", m.x[1] - X12, f);
  return r;
}

bool rltx_contains(const RltxMat& m, const TolerancePolicy& tol) {
  return rltx_report(m, tol).pass();
}

Report rlty_report(const RltyPoint& p, const TolerancePolicy& tol, const std::string& prefix) {
  Report r;
  r.label = prefix;
  const double f = -tol.eq_tol;
  r.add(prefix + "_Y12_nonneg", p.Y12, f);
  r.add(prefix + "_Y12_lb", p.Y12 - (p.y[0] + p.y[1] - 1.0), f);
  r.add(prefix + "_Y12_le_y1", p.y[0] - p.Y12, f);
  r.add(prefix + "_Y12_le_y2", p.y[1] - p.Y12, f);
  return r;
}

bool rlty_contains(const RltyPoint& p, const TolerancePolicy& tol) {
  return rlty_report(p, tol).pass();
}

Report dnn4_report(const SymMat& w, const TolerancePolicy& tol) {
  if (w.dim() != 4) throw std::invalid_argument("dnn4: matrix must be 4x4");
  Report r;
  r.label = "dnn4";
  double min_entry = w(0, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) min_entry = std::min(min_entry, w(i, j));
  r.add("dnn4_entries_nonneg", min_entry, -tol.eq_tol);
  r.add("dnn4_psd", eig_min(w).value, psd_floor(w, tol));
  return r;
}

bool dnn4_contains(const SymMat& w, const TolerancePolicy& tol) {
  return dnn4_report(w, tol).pass();
}

}  // namespace swh
