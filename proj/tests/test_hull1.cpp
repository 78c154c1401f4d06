#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "swh/hull1.hpp"
#include "swh/rng.hpp"

using namespace swh;

TEST_SUITE("hull1") {

TEST_CASE("membership basics") {
  CHECK(h1_contains({0.5, 0.25, 1.0}));       // rank-1 point
  CHECK_FALSE(h1_contains({0.5, 0.25, 0.5})); // 0.25 > 0.125
  CHECK(h1_contains({0.5, 0.5, 0.5}));        // half of (1,1,1)
  CHECK_FALSE(h1_contains({0.5, 0.25, 1.5})); // switch bound
}

TEST_CASE("witness construction on known points") {
  auto w = h1_witness({0.5, 0.25, 1.0});
  CHECK(w.t1 == doctest::Approx(0.0));
  CHECK(w.s1 == doctest::Approx(0.5));
  CHECK(w.Z11 == doctest::Approx(0.25));
  CHECK(w.S11 == doctest::Approx(0.25));
  CHECK(dnn4_contains(w.W));

  // the origin: the switch is off, so the slack row carries all the mass and
  // the certificate is the rank-1 outer product of (1, 0, 0, 1)
  auto z = h1_witness({0.0, 0.0, 0.0});
  CHECK(z.t1 == doctest::Approx(1.0));
  CHECK(z.s1 == doctest::Approx(0.0));
  const double v[4] = {1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(z.W(i, j) == doctest::Approx(v[i] * v[j]));

  // the balanced midpoint: every slack variable splits evenly and the
  // certificate sits exactly on the boundary
  auto m = h1_witness({0.5, 0.5, 0.5});
  CHECK(m.t1 == doctest::Approx(0.5));
  CHECK(m.s1 == doctest::Approx(0.0));
  CHECK(m.Z11 == doctest::Approx(0.0));
  CHECK(m.S11 == doctest::Approx(0.0));
  CHECK(dnn4_contains(m.W));
  CHECK(eig_min(m.W).value == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)h1_witness({0.5, 0.25, 0.5}), std::invalid_argument);
}

TEST_CASE("witness identities hold for every member") {
  Rng rng(2401);
  int members = 0;
  for (int t = 0; t < 4000; ++t) {
    H1Point p{rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
    if (!h1_contains(p)) continue;
    ++members;
    auto w = h1_witness(p);
    CHECK(p.x1 + w.s1 + w.t1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.X11 + w.Z11 == doctest::Approx(p.x1).epsilon(1e-12));
    CHECK(w.S11 + w.Z11 == doctest::Approx(w.s1).epsilon(1e-12));
    CHECK(dnn4_contains(w.W));
  }
  CHECK(members > 200);
}

TEST_CASE("membership equals certificate feasibility both ways") {
  Rng rng(2402);
  int in = 0, out = 0;
  for (int t = 0; t < 10000; ++t) {
    H1Point p{rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
    const bool member = h1_contains(p);
    const bool cert = dnn4_contains(h1_witness_raw(p).W);
    CHECK(member == cert);
    (member ? in : out) += 1;
  }
  CHECK(in > 500);
  CHECK(out > 500);
}

TEST_CASE("atom segments stay inside") {
  Rng rng(2403);
  for (int t = 0; t < 2000; ++t) {
    const double x = rng.uniform(0, 1), w = rng.uniform(0, 1);
    // w * (x, x^2, 1) + (1-w) * (0, 0, 0)
    CHECK(h1_contains({w * x, w * x * x, w}));
  }
}

TEST_CASE("two by two reformulation matches the cone test on members") {
  // members additionally satisfy the ordering constraints, under which the
  // conic inequality is equivalent to y1 >= 0, X11 >= 0, y1*X11 >= x1^2
  Rng rng(2404);
  for (int t = 0; t < 4000; ++t) {
    H1Point p{rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
    if (!h1_contains(p)) continue;
    CHECK(p.y1 >= -1e-12);
    CHECK(p.X11 >= -1e-12);
    CHECK(p.y1 * p.X11 >= p.x1 * p.x1 - 1e-9);
  }
}

}  // TEST_SUITE
