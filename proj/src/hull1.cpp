#include "swh/hull1.hpp"

#include <stdexcept>

namespace swh {

Report h1_report(const H1Point& p, const TolerancePolicy& tol) {
  Report r = per_report({p.x1, p.X11, p.y1}, tol, "h1");
  r.label = "h1";
  r.add("h1_y1_le_one", 1.0 - p.y1, -tol.eq_tol);
  return r;
}

bool h1_contains(const H1Point& p, const TolerancePolicy& tol) {
  return h1_report(p, tol).pass();
}

H1Witness h1_witness_raw(const H1Point& p) {
  H1Witness w;
  w.t1 = 1.0 - p.y1;
  w.s1 = p.y1 - p.x1;
  w.Z11 = p.x1 - p.X11;
  w.S11 = p.y1 + p.X11 - 2.0 * p.x1;

  // (unit, x1, s1, t1) block form; the t1 row carries t1^2 = t1 and
  // x1*t1 = s1*t1 = 0, which is what forces y1 binary in the rank-1 case.
  SymMat& W = w.W;
  W.set(0, 0, 1.0);
  W.set(0, 1, p.x1);
  W.set(0, 2, w.s1);
  W.set(0, 3, w.t1);
  W.set(1, 1, p.X11);
  W.set(1, 2, w.Z11);
  W.set(1, 3, 0.0);
  W.set(2, 2, w.S11);
  W.set(2, 3, 0.0);
  W.set(3, 3, w.t1);
  return w;
}

H1Witness h1_witness(const H1Point& p, const TolerancePolicy& tol) {
  const Report r = h1_report(p, tol);
  if (!r.pass()) {
    const Condition* c = r.worst();
    throw std::invalid_argument("h1_witness: point is not a member, violated " +
                                (c ? c->name : std::string("unknown")));
  }
  return h1_witness_raw(p);
}

}  // namespace swh
