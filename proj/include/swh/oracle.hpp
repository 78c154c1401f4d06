#pragma once

#include "swh/hull2.hpp"

namespace swh {

// Linear functional on HullPoint space. Q acts through x^T Q x, so X12 is
// weighted by 2*Q12; the lift variables alpha, beta always carry weight zero.
struct Objective {
  double cx1 = 0.0, cx2 = 0.0;
  double Q11 = 0.0, Q12 = 0.0, Q22 = 0.0;
  double cy1 = 0.0, cy2 = 0.0;
  double cY = 0.0;
};

double eval(const Objective& o, const HullPoint& p);

// Exact global maximum of c^T x + x^T Q x over [0, ub1] x [0, ub2] by face
// enumeration: 4 vertices, 4 edge stationary points, and the interior
// stationary point when 2Q is comfortably nonsingular. When 2Q is singular
// the objective is affine along a null direction, so some maximizer lies on
// the boundary and the vertex/edge candidates already cover it.
struct BoxMax {
  double value = 0.0;
  double x1 = 0.0, x2 = 0.0;
};
BoxMax max_quad_box(double c1, double c2, double Q11, double Q12, double Q22,
                    double ub1, double ub2);

// Support of the objective over the four rank-1 generator families: best of
// c_y^T y + c_Y y1 y2 + max_quad_box(c_x, Q, y) over y in {0,1}^2. Exact.
// restrict_Y = true is the product-free oracle and rejects c_Y != 0.
struct AtomMax {
  double value = 0.0;
  Atom argmax;
};
AtomMax support_atoms(const Objective& o, bool restrict_Y);

}  // namespace swh
