#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "swh/cones.hpp"
#include "swh/rng.hpp"

using namespace swh;

TEST_SUITE("cones") {

TEST_CASE("perspective cone membership") {
  CHECK(per_contains({0.5, 0.25, 1.0}));   // rank-1: 0.25 = 0.5^2/1
  CHECK_FALSE(per_contains({0.5, 0.2, 1.0}));  // 0.25 > 0.2 * 1
  CHECK(per_contains({0.0, 0.0, 0.0}));    // apex

  // membership is invariant under positive scaling
  Rng rng(2301);
  int members = 0;
  for (int t = 0; t < 2000; ++t) {
    PerPoint p{rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
    const bool base = per_contains(p);
    members += base;
    for (double s : {0.125, 3.0, 40.0}) {
      PerPoint q{s * p.alpha, s * p.beta, s * p.gamma};
      CHECK(per_contains(q) == base);
    }
  }
  CHECK(members > 100);  // the sampler reaches both verdicts
  CHECK(members < 1900);
}

TEST_CASE("box RLT membership") {
  RltxMat ones;
  ones.lambda = 1.0;
  ones.x = {1.0, 1.0};
  ones.X.set(0, 0, 1.0); ones.X.set(0, 1, 1.0); ones.X.set(1, 1, 1.0);
  CHECK(rltx_contains(ones));

  RltxMat off = ones;
  off.x = {0.5, 0.5};
  off.X.set(0, 0, 0.5); off.X.set(1, 1, 0.5);
  off.X.set(0, 1, 0.6);  // exceeds min{x1, x2}
  CHECK_FALSE(rltx_contains(off));

  RltxMat origin;
  CHECK(rltx_contains(origin));
}

TEST_CASE("switch-product polytope membership and vertices") {
  CHECK(rlty_contains({{1.0, 1.0}, 1.0}));
  CHECK(rlty_contains({{1.0, 0.0}, 0.0}));
  CHECK(rlty_contains({{0.5, 0.5}, 0.4}));
  CHECK_FALSE(rlty_contains({{0.5, 0.5}, 0.6}));

  // vertex enumeration over the four facets
  //   Y12 >= 0, Y12 >= y1 + y2 - 1, Y12 <= y1, Y12 <= y2
  // every triple of active facets pins one point; the feasible ones must be
  // exactly the four exact-product points
  struct Plane { double a1, a2, aY, b; };  // a1 y1 + a2 y2 + aY Y = b
  const std::array<Plane, 4> planes{{{0, 0, 1, 0},
                                     {-1, -1, 1, -1},
                                     {1, 0, -1, 0},
                                     {0, 1, -1, 0}}};
  std::vector<std::array<double, 3>> verts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        const Plane rows[3] = {planes[i], planes[j], planes[k]};
        double A[3][4];
        for (int r = 0; r < 3; ++r) {
          A[r][0] = rows[r].a1; A[r][1] = rows[r].a2;
          A[r][2] = rows[r].aY; A[r][3] = rows[r].b;
        }
        // gaussian elimination, 3x3
        bool singular = false;
        for (int c = 0; c < 3; ++c) {
          int piv = c;
          for (int r = c + 1; r < 3; ++r)
            if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
          if (std::fabs(A[piv][c]) < 1e-12) { singular = true; break; }
          std::swap(A[c], A[piv]);
          for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double f = A[r][c] / A[c][c];
            for (int cc = c; cc < 4; ++cc) A[r][cc] -= f * A[c][cc];
          }
        }
        if (singular) continue;
        std::array<double, 3> v{A[0][3] / A[0][0], A[1][3] / A[1][1],
                                A[2][3] / A[2][2]};
        if (rlty_contains({{v[0], v[1]}, v[2]}))
          verts.push_back(v);
      }
  REQUIRE(verts.size() == 4);
  for (const auto& v : verts) {
    CHECK(v[2] == doctest::Approx(v[0] * v[1]).epsilon(1e-12));
    CHECK((v[0] == 0.0 || v[0] == 1.0));
    CHECK((v[1] == 0.0 || v[1] == 1.0));
  }
}

TEST_CASE("doubly nonnegative four by four") {
  SymMat zero(4);
  CHECK(dnn4_contains(zero));

  const double v[4] = {1.0, 0.5, 0.5, 0.0};
  SymMat gram(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) gram.set(i, j, v[i] * v[j]);
  CHECK(dnn4_contains(gram));

  SymMat neg(4);
  for (int i = 0; i < 4; ++i) neg.set(i, i, 1.0);
  neg.set(0, 1, -0.1);  // PSD but one negative entry
  CHECK_FALSE(dnn4_contains(neg));

  // monotone under adding nonnegative gram matrices
  Rng rng(2302);
  for (int t = 0; t < 500; ++t) {
    double w[4], u[4];
    for (int i = 0; i < 4; ++i) {
      w[i] = rng.uniform(0, 1);
      u[i] = rng.uniform(0, 1);
    }
    SymMat base(4), bumped(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        base.set(i, j, w[i] * w[j]);
        bumped.set(i, j, w[i] * w[j] + u[i] * u[j]);
      }
    CHECK(dnn4_contains(base));
    CHECK(dnn4_contains(bumped));
  }
}

}  // TEST_SUITE
