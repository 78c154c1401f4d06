#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "swh/hull2.hpp"
#include "swh/repair.hpp"
#include "swh/rng.hpp"

using namespace swh;

namespace {

double det4(const SymMat& m) {
  double a[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);
  auto d3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return a[r0][c0] * (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) -
           a[r0][c1] * (a[r1][c0] * a[r2][c2] - a[r1][c2] * a[r2][c0]) +
           a[r0][c2] * (a[r1][c0] * a[r2][c1] - a[r1][c1] * a[r2][c0]);
  };
  return a[0][0] * d3(1, 2, 3, 1, 2, 3) - a[0][1] * d3(1, 2, 3, 0, 2, 3) +
         a[0][2] * d3(1, 2, 3, 0, 1, 3) - a[0][3] * d3(1, 2, 3, 0, 1, 2);
}

bool same_point(const LiftedPoint& a, const LiftedPoint& b) {
  return a.p.x1 == b.p.x1 && a.p.x2 == b.p.x2 && a.p.X11 == b.p.X11 &&
         a.p.X12 == b.p.X12 && a.p.X22 == b.p.X22 && a.p.y1 == b.p.y1 &&
         a.p.y2 == b.p.y2 && a.p.Y12 == b.p.Y12 && a.alpha1 == b.alpha1 &&
         a.alpha2 == b.alpha2;
}

}  // namespace

TEST_SUITE("repair") {

TEST_CASE("classification of clean and broken points") {
  auto f = classify(atom_lift({YBits::first, 0.7, 0.0}));
  CHECK(f.clean());
  CHECK_FALSE(f.lacks_only_first());

  // rank-1 point with both switches on and a trivial certificate
  LiftedPoint r1;
  r1.p = {0.6, 0.8, 0.36, 0.48, 0.64, 1.0, 1.0, 1.0};
  CHECK(classify(r1).clean());

  // precondition guards: one point breaking a linear row, one breaking the
  // five-block; classify refuses both
  LiftedPoint bad;
  bad.p = {1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0};
  bad.alpha1 = 0.5;
  CHECK_THROWS_AS((void)classify(bad), std::invalid_argument);
  bad.alpha1 = 1.5;
  CHECK_THROWS_AS((void)classify(bad), std::invalid_argument);
}

TEST_CASE("sampled broken points miss exactly the first block") {
  auto pts = sample_lacking(1, 100);
  REQUIRE(pts.size() > 50);
  int a_zero = 0, a_pos = 0;
  for (const auto& z : pts) {
    auto f = classify(z);
    CHECK(f.lacks_only_first());
    CHECK_FALSE(f.fails_3x3);
    CHECK_FALSE(f.fails_4x4second);
    CHECK_FALSE(f.fails_5x5);
    (z.alpha1 > 1e-9 ? a_pos : a_zero) += 1;
  }
  // the generator alternates between the two entry cases of the completion
  CHECK(a_zero > 20);
  CHECK(a_pos > 20);

  auto again = sample_lacking(1, 100);
  REQUIRE(again.size() == pts.size());
  for (size_t i = 0; i < pts.size(); ++i) CHECK(same_point(pts[i], again[i]));
}

TEST_CASE("shifting out the first certificate component") {
  auto pts = sample_lacking(2, 80);
  int reduced = 0;
  for (const auto& z : pts) {
    if (z.alpha1 <= 1e-9) continue;
    ++reduced;
    LiftedPoint w = reduce_alpha1(z);
    CHECK(w.p.x1 == doctest::Approx(z.p.x1 - z.alpha1).epsilon(1e-14));
    const double drop = z.alpha1 * z.alpha1 / (z.p.y1 - z.p.Y12);
    CHECK(w.p.X11 == doctest::Approx(z.p.X11 - drop).epsilon(1e-12));
    CHECK(w.alpha1 == 0.0);
    CHECK(w.alpha2 == z.alpha2);
    CHECK(w.p.x2 == z.p.x2);
    CHECK(w.p.X12 == z.p.X12);
    CHECK(w.p.X22 == z.p.X22);
    CHECK(w.p.y1 == z.p.y1);
    CHECK(w.p.Y12 == z.p.Y12);
    // output is again in the domain of the completion, with nothing to shift
    CHECK(classify(w).lacks_only_first());
    CHECK_THROWS_AS((void)reduce_alpha1(w), std::invalid_argument);
  }
  CHECK(reduced > 20);

  // spot-check the arithmetic of the two changed fields on fixed numbers:
  // alpha1 = 0.2 and y1 - Y12 = 0.5 send x1 = 0.6 to 0.4 and X11 = 0.5 to 0.42
  CHECK(0.6 - 0.2 == doctest::Approx(0.4));
  CHECK(0.5 - 0.2 * 0.2 / 0.5 == doctest::Approx(0.42));
}

TEST_CASE("admissible interval for the second component") {
  // vanishing discriminant: both roots coincide at x2 - X12*x1/X11
  LiftedPoint z;
  z.p = {0.5, 0.5, 0.5, 0.25, 0.3, 1.0, 0.8, 0.5};
  auto iv = alpha2_interval(z);
  CHECK(iv.theta == doctest::Approx(0.0));
  CHECK(iv.lo == doctest::Approx(0.25));
  CHECK(iv.hi == doctest::Approx(0.25));

  // zero cross term: roots collapse to x2 - theta/X11 and x2
  LiftedPoint w;
  w.p = {0.4, 0.5, 0.5, 0.0, 0.3, 1.0, 0.8, 0.5};
  auto jv = alpha2_interval(w);
  CHECK(jv.theta == doctest::Approx(0.09));
  CHECK(jv.lo == doctest::Approx(0.32));
  CHECK(jv.hi == doctest::Approx(0.5));

  LiftedPoint b = z;
  b.alpha1 = 0.1;
  CHECK_THROWS_AS((void)alpha2_interval(b), std::invalid_argument);
  b = z;
  b.p.X11 = 0.0;
  CHECK_THROWS_AS((void)alpha2_interval(b), std::invalid_argument);
}

TEST_CASE("interval endpoints gate the first block") {
  auto pts = sample_lacking(3, 80);
  int tested = 0;
  for (const auto& z : pts) {
    if (z.alpha1 > 1e-9) continue;
    auto iv = alpha2_interval(z);
    if (iv.hi - iv.lo < 1e-3) continue;
    ++tested;
    auto block_at = [&](double a2) {
      LiftedPoint m = z;
      m.alpha2 = a2;
      return eig_min(psd4_first_matrix(m)).value;
    };
    for (int g = 0; g <= 10; ++g) {
      const double a2 = iv.lo + (iv.hi - iv.lo) * g / 10.0;
      CHECK(block_at(a2) >= -1e-9);
    }
    CHECK(block_at(iv.lo - 1e-3) < 0.0);
    CHECK(block_at(iv.hi + 1e-3) < 0.0);

    // the interior midpoint maximizes the block determinant
    const double mid = 0.5 * (iv.lo + iv.hi);
    auto d = [&](double a2) {
      LiftedPoint m = z;
      m.alpha2 = a2;
      return det4(psd4_first_matrix(m));
    };
    CHECK(d(mid) >= d(mid - 1e-4) - 1e-15);
    CHECK(d(mid) >= d(mid + 1e-4) - 1e-15);
    CHECK(d(mid) >= d(iv.lo) - 1e-15);
    CHECK(d(mid) >= d(iv.hi) - 1e-15);
  }
  CHECK(tested > 10);
}

TEST_CASE("perspective-vs-linear crossover roots") {
  LiftedPoint a;
  a.p = {0.3, 0.5, 0.2, 0.1, 0.3, 1.0, 0.8, 0.0};  // x2 - X22 = (y2-Y12)/4
  auto lv = lambda_interval(a);
  CHECK(lv.rho == doctest::Approx(0.0));
  CHECK(lv.lo == doctest::Approx(0.4));
  CHECK(lv.hi == doctest::Approx(0.4));

  LiftedPoint b;
  b.p = {0.3, 0.5, 0.2, 0.1, 0.5, 1.0, 0.8, 0.0};  // x2 == X22
  auto mv = lambda_interval(b);
  CHECK(mv.rho == doctest::Approx(1.0));
  CHECK(mv.lo == doctest::Approx(0.0));
  CHECK(mv.hi == doctest::Approx(0.8));

  LiftedPoint c = a;
  c.p.X22 = 0.2;  // x2 - X22 = 0.3 > (y2 - Y12)/4
  CHECK_THROWS_AS((void)lambda_interval(c), std::invalid_argument);

  // both roots satisfy the defining balance on random valid points
  Rng rng(2601);
  int checked = 0;
  for (int t = 0; t < 5000 && checked < 500; ++t) {
    LiftedPoint z = sample_linear_feasible(rng);
    z.alpha1 = 0.0;
    const double d2 = z.p.y2 - z.p.Y12, gap = z.p.x2 - z.p.X22;
    if (d2 < 1e-6 || gap < 0.0 || gap > 0.25 * d2) continue;
    ++checked;
    auto iv = lambda_interval(z);
    for (double root : {iv.lo, iv.hi}) {
      const double lhs = z.p.x2 - root;
      const double rhs = z.p.X22 - root * root / d2;
      CHECK(std::fabs(lhs - rhs) <= 1e-10);
    }
    CHECK(iv.lo >= -1e-12);
    CHECK(iv.hi <= d2 + 1e-12);
  }
  CHECK(checked == 500);
}

TEST_CASE("crossover window separates the two block verdicts") {
  Rng rng(2602);
  int inside = 0, outside = 0;
  for (int t = 0; t < 30000; ++t) {
    LiftedPoint z = sample_linear_feasible(rng);
    z.alpha1 = 0.0;
    const double d2 = z.p.y2 - z.p.Y12, gap = z.p.x2 - z.p.X22;
    if (d2 < 1e-6 || gap < 0.0 || gap > 0.25 * d2) continue;
    auto iv = lambda_interval(z);
    const double e4 = eig_min(psd4_first_matrix(z)).value;
    const double e5 = eig_min(psd5_matrix(z)).value;
    const bool in_window = z.alpha2 >= iv.lo - 1e-12 && z.alpha2 <= iv.hi + 1e-12;
    if (in_window) {
      // perspective form dominates: the four-block implies the five-block
      if (e4 >= 1e-8) {
        CHECK(e5 >= -1e-9);
        ++inside;
      }
    } else {
      // linear form dominates: the five-block implies the four-block
      if (e5 >= 1e-8) {
        CHECK(e4 >= -1e-9);
        ++outside;
      }
    }
  }
  CHECK(inside > 200);
  CHECK(outside > 200);
}

TEST_CASE("three-block feasibility is implied by the linear rows" *
          doctest::timeout(120)) {
  Rng rng(2603);
  for (int t = 0; t < 100000; ++t) {
    LiftedPoint z = sample_linear_feasible(rng);
    SymMat m = psd3_matrix(z);
    CHECK(is_psd(m, {1e-8, 1e-9}));
  }
}

TEST_CASE("completion fixes every sampled point") {
  auto pts = sample_lacking(4, 120);
  REQUIRE(pts.size() > 60);
  const TolerancePolicy strict{1e-8, 1e-9};
  for (const auto& z : pts) {
    LiftedPoint r = repair(z);
    auto rep = check(r, System::nobeta, strict);
    CHECK_MESSAGE(rep.pass(), rep.summary());
    // everything but the second certificate component is preserved
    CHECK(r.p.x1 == z.p.x1);
    CHECK(r.p.x2 == z.p.x2);
    CHECK(r.p.X11 == z.p.X11);
    CHECK(r.p.X12 == z.p.X12);
    CHECK(r.p.X22 == z.p.X22);
    CHECK(r.p.y1 == z.p.y1);
    CHECK(r.p.y2 == z.p.y2);
    CHECK(r.p.Y12 == z.p.Y12);
    CHECK(r.alpha1 == z.alpha1);

    if (z.alpha1 <= 1e-9) {
      // the new component lands on the nearer interval endpoint
      auto iv = alpha2_interval(z);
      if (z.alpha2 < iv.lo)
        CHECK(r.alpha2 == doctest::Approx(iv.lo).epsilon(1e-12));
      else
        CHECK(r.alpha2 == doctest::Approx(iv.hi).epsilon(1e-12));
    }
  }
}

TEST_CASE("feasible points pass through the completion untouched") {
  Rng rng(2604);
  for (int t = 0; t < 200; ++t) {
    const int k = rng.uniform_int(1, 4);
    std::vector<std::pair<double, LiftedPoint>> parts;
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      const auto b = static_cast<YBits>(rng.uniform_int(0, 3));
      const double u1 = (b == YBits::first || b == YBits::both) ? 1.0 : 0.0;
      const double u2 = (b == YBits::second || b == YBits::both) ? 1.0 : 0.0;
      parts.push_back({rng.uniform(0.1, 1.0),
                       atom_lift({b, rng.uniform(0, u1), rng.uniform(0, u2)})});
      total += parts.back().first;
    }
    for (auto& pr : parts) pr.first /= total;
    LiftedPoint z = convex_mix(parts);
    z.has_beta = false;
    CHECK(same_point(repair(z), z));
  }
}

}  // TEST_SUITE
