#include "swh/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace swh {

double eval(const Objective& o, const HullPoint& p) {
  return o.cx1 * p.x1 + o.cx2 * p.x2 + o.Q11 * p.X11 + 2.0 * o.Q12 * p.X12 +
         o.Q22 * p.X22 + o.cy1 * p.y1 + o.cy2 * p.y2 + o.cY * p.Y12;
}

namespace {

double qval(double c1, double c2, double Q11, double Q12, double Q22,
            double x1, double x2) {
  return c1 * x1 + c2 * x2 + Q11 * x1 * x1 + 2.0 * Q12 * x1 * x2 +
         Q22 * x2 * x2;
}

}  // namespace

BoxMax max_quad_box(double c1, double c2, double Q11, double Q12, double Q22,
                    double ub1, double ub2) {
  if (!(ub1 >= 0.0) || !(ub2 >= 0.0))
    throw std::invalid_argument("max_quad_box: negative box bound");

  BoxMax best;
  best.value = qval(c1, c2, Q11, Q12, Q22, 0.0, 0.0);
  best.x1 = 0.0;
  best.x2 = 0.0;
  auto consider = [&](double x1, double x2) {
    // Reject NaN candidates from 0/0 in a degenerate stationary formula;
    // such edges are affine and their endpoints are already in the list.
    if (!(x1 >= 0.0 && x1 <= ub1 && x2 >= 0.0 && x2 <= ub2)) return;
    double v = qval(c1, c2, Q11, Q12, Q22, x1, x2);
    if (v > best.value) {
      best.value = v;
      best.x1 = x1;
      best.x2 = x2;
    }
  };

  consider(ub1, 0.0);
  consider(0.0, ub2);
  consider(ub1, ub2);

  // Edge interiors: restrict to one coordinate, stationary point of the
  // resulting univariate quadratic. Division by a zero curvature yields
  // inf/NaN and is filtered by the box test above.
  consider(-c1 / (2.0 * Q11), 0.0);
  consider(-(c1 + 2.0 * Q12 * ub2) / (2.0 * Q11), ub2);
  consider(0.0, -c2 / (2.0 * Q22));
  consider(ub1, -(c2 + 2.0 * Q12 * ub1) / (2.0 * Q22));

  // Interior stationary point 2Q x = -c. Skipped when 2Q is near singular:
  // then a flat direction exists and a boundary maximizer already covers it.
  double a = 2.0 * Q11, b = 2.0 * Q12, d = 2.0 * Q22;
  double det = a * d - b * b;
  double scale = 1.0 + std::max(std::abs(a), std::max(std::abs(b), std::abs(d)));
  if (std::abs(det) > 1e-12 * scale * scale) {
    double x1 = (b * c2 - d * c1) / det;
    double x2 = (b * c1 - a * c2) / det;
    consider(x1, x2);
  }
  return best;
}

AtomMax support_atoms(const Objective& o, bool restrict_Y) {
  if (restrict_Y && o.cY != 0.0)
    throw std::invalid_argument(
        "support_atoms: restrict_Y requires a zero Y12 coefficient");

  AtomMax best;
  bool have = false;
  for (int bits = 0; bits < 4; ++bits) {
    double y1 = (bits & 1) ? 1.0 : 0.0;
    double y2 = (bits & 2) ? 1.0 : 0.0;
    double base = o.cy1 * y1 + o.cy2 * y2 + o.cY * y1 * y2;
    BoxMax bm = max_quad_box(o.cx1, o.cx2, o.Q11, o.Q12, o.Q22, y1, y2);
    double v = base + bm.value;
    if (!have || v > best.value) {
      have = true;
      best.value = v;
      best.argmax.ybits = static_cast<YBits>(bits);
      best.argmax.x1 = bm.x1;
      best.argmax.x2 = bm.x2;
    }
  }
  return best;
}

}  // namespace swh
