#include "swh/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "swh/cones.hpp"
#include "swh/errors.hpp"
#include "swh/experiments.hpp"
#include "swh/hull1.hpp"
#include "swh/hull2.hpp"
#include "swh/oracle.hpp"
#include "swh/pointfile.hpp"
#include "swh/repair.hpp"
#include "swh/rng.hpp"
#include "swh/solver.hpp"
#include "swh/symmat.hpp"

namespace swh {
namespace {

struct Checker {
  bool ok = true;
  long checks = 0;
  std::string detail;

  void expect(bool cond, const char* what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void expectf(bool cond, const char* fmt, double a, double b) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      char buf[192];
      std::snprintf(buf, sizeof buf, fmt, a, b);
      detail = buf;
    }
  }
};

LiftedPoint random_mix(Rng& rng, int min_atoms, int max_atoms) {
  const int natoms = rng.uniform_int(min_atoms, max_atoms);
  std::vector<std::pair<double, LiftedPoint>> parts;
  double wsum = 0.0;
  for (int i = 0; i < natoms; ++i) {
    Atom a;
    a.ybits = static_cast<YBits>(rng.uniform_int(0, 3));
    const double y1 = (a.ybits == YBits::first || a.ybits == YBits::both) ? 1.0 : 0.0;
    const double y2 = (a.ybits == YBits::second || a.ybits == YBits::both) ? 1.0 : 0.0;
    a.x1 = rng.uniform() * y1;
    a.x2 = rng.uniform() * y2;
    const double w = 0.02 + rng.uniform();
    parts.emplace_back(w, atom_lift(a));
    wsum += w;
  }
  for (auto& pw : parts) pw.first /= wsum;
  return convex_mix(parts);
}

// ---- eigensolver ------------------------------------------------------------

void s_eigensolver(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 101);

  // known spectrum: diagonal input
  {
    SymMat d = SymMat::diag({3.0, -1.0, 2.0, 0.0, 5.0});
    EigSym e = eig_sym(d);
    const double want[5] = {-1.0, 0.0, 2.0, 3.0, 5.0};
    for (int k = 0; k < 5; ++k)
      c.expectf(std::fabs(e.values[k] - want[k]) < 1e-14, "diag spectrum off: %g vs %g",
                e.values[k], want[k]);
  }

  for (int trial = 0; trial < 800; ++trial) {
    const int n = rng.uniform_int(2, 6);
    SymMat s(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) s.set(i, j, rng.uniform(-2.0, 2.0));
    const double scale = 1.0 + s.max_abs();

    EigSym e = eig_sym(s);
    double trace_s = 0.0, trace_e = 0.0;
    for (int i = 0; i < n; ++i) {
      trace_s += s(i, i);
      trace_e += e.values[i];
      if (i + 1 < n) c.expect(e.values[i] <= e.values[i + 1] + 1e-15, "values not ascending");
    }
    c.expectf(std::fabs(trace_s - trace_e) < 1e-12 * n * scale, "trace drift %g vs %g",
              trace_s, trace_e);

    for (int k = 0; k < n; ++k) {
      double resid = 0.0, norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += s(i, j) * e.vectors[k][j];
        resid = std::max(resid, std::fabs(row - e.values[k] * e.vectors[k][i]));
        norm2 += e.vectors[k][i] * e.vectors[k][i];
      }
      c.expectf(resid <= 1e-12 * scale, "residual %g at scale %g", resid, scale);
      c.expectf(std::fabs(norm2 - 1.0) < 1e-12, "eigenvector norm %g vs %g", norm2, 1.0);
    }

    // shift invariance of the minimal eigenvalue
    SymMat sh = s;
    for (int i = 0; i < n; ++i) sh.add(i, i, 1.375);
    c.expectf(std::fabs(eig_min(sh).value - (eig_min(s).value + 1.375)) < 1e-11 * scale,
              "shift drift %g vs %g", eig_min(sh).value, eig_min(s).value + 1.375);

    // Gram matrices are PSD
    double B[6][6];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B[i][j] = rng.uniform(-1.0, 1.0);
    SymMat gram(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = 0.0;
        for (int k = 0; k < n; ++k) v += B[k][i] * B[k][j];
        gram.set(i, j, v);
      }
    c.expectf(eig_min(gram).value >= -1e-12 * (1.0 + gram.max_abs()),
              "Gram eig_min %g at scale %g", eig_min(gram).value, gram.max_abs());
    c.expect(is_psd(gram), "Gram not accepted as PSD");
  }
}

// ---- cone reports -----------------------------------------------------------

void s_cone_reports(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 102);

  for (int trial = 0; trial < 2000; ++trial) {
    const double g = rng.uniform(0.05, 2.0);
    const double a = rng.uniform(0.0, g);
    const double bmin = a * a / g;
    const double b = rng.uniform(bmin, a);
    c.expect(per_contains({a, b, g}), "perspective member rejected");
    c.expect(per_contains({a, bmin, g}), "perspective boundary rejected");
    const double t = rng.uniform(0.0, 3.0);
    c.expect(per_contains({t * a, t * b, t * g}), "cone not closed under scaling");
    if (a > 0.1) c.expect(!per_contains({a, 0.4 * bmin, g}), "conic violator accepted");
  }

  for (int y1 = 0; y1 <= 1; ++y1)
    for (int y2 = 0; y2 <= 1; ++y2) {
      RltyPoint v{{double(y1), double(y2)}, double(y1 * y2)};
      c.expect(rlty_contains(v), "binary vertex rejected");
    }
  c.expect(!rlty_contains({{1.0, 1.0}, 0.98}), "Y12 below product bound accepted");
  c.expect(!rlty_contains({{0.5, 0.4}, 0.42}), "Y12 above min accepted");
  c.expect(!rlty_contains({{0.5, 0.4}, -0.02}), "negative Y12 accepted");

  for (int trial = 0; trial < 1000; ++trial) {
    const double lam = rng.uniform(0.0, 2.0);
    const double x1 = rng.uniform(), x2 = rng.uniform();
    RltxMat m;
    m.lambda = lam;
    m.x = {lam * x1, lam * x2};
    SymMat X(2);
    X.set(0, 0, lam * rng.uniform(0.0, x1));
    X.set(1, 1, lam * rng.uniform(0.0, x2));
    X.set(0, 1, lam * rng.uniform(std::max(0.0, x1 + x2 - 1.0), std::min(x1, x2)));
    m.X = X;
    c.expect(rltx_contains(m), "homogenized box member rejected");
    RltxMat bad = m;
    bad.X.set(0, 0, m.x[0] + 0.01 * lam + 0.01);
    c.expect(!rltx_contains(bad), "X11 above x1 accepted");
  }

  for (int trial = 0; trial < 300; ++trial) {
    double B[4][4];
    for (auto& row : B)
      for (double& v : row) v = rng.uniform();
    SymMat w(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        double v = 0.0;
        for (int k = 0; k < 4; ++k) v += B[k][i] * B[k][j];
        w.set(i, j, v);
      }
    c.expect(dnn4_contains(w), "nonnegative Gram rejected");
    SymMat neg = w;
    neg.set(0, 1, -0.1);
    c.expect(!dnn4_contains(neg), "negative entry accepted");
  }
}

// ---- one-switch hull --------------------------------------------------------

void s_one_switch_hull(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 103);
  int members = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    H1Point p{rng.uniform(), rng.uniform(), rng.uniform()};
    const bool direct = h1_contains(p);
    const bool viaW = dnn4_contains(h1_witness_raw(p).W);
    members += direct;
    c.expect(direct == viaW, "membership and certificate feasibility disagree");
  }
  // random draws must probe both polarities with room to spare
  c.expect(members > 500 && members < 9500, "degenerate polarity split");

  for (int trial = 0; trial < 2000; ++trial) {
    const double y = rng.uniform() < 0.5 ? 1.0 : 0.0;
    const double x = rng.uniform() * y;
    const double X = y > 0.0 ? rng.uniform(x * x, x) : 0.0;
    H1Point p{x, X, y};
    c.expect(h1_contains(p), "exact member rejected");
    H1Witness w = h1_witness(p);
    c.expect(dnn4_contains(w.W), "member witness infeasible");
    c.expectf(std::fabs(w.W(1, 1) - X) < 1e-15, "witness X entry %g vs %g", w.W(1, 1), X);
  }
}

// ---- two-switch membership --------------------------------------------------

void s_membership_soundness(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 104);
  for (int trial = 0; trial < 10000; ++trial) {
    LiftedPoint z = random_mix(rng, 1, 5);
    c.expect(check(z, System::disjunctive).pass(), "mix fails disjunctive");
    c.expect(check(z, System::nobeta).pass(), "mix fails nobeta");
    c.expect(check(z, System::minimal).pass(), "mix fails minimal");
    c.expect(check(z, System::conjecture).pass(), "mix fails conjecture");
  }
}

// ---- Schur cross-check + the linear => 3x3 fact ------------------------------

void s_schur_crosscheck(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 105);
  int psd_count = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    LiftedPoint z = sample_linear_feasible(rng);
    Report r;
    try {
      r = check(z, System::nobeta);
    } catch (const InternalCheckError&) {
      c.expect(false, "PSD route disagreement on linear-feasible data");
      return;
    }
    psd_count += r.pass();
    const Condition* core = r.find("psd_3x3");
    c.expect(core != nullptr, "3x3 condition missing from report");
    if (core)
      c.expectf(core->value >= -1e-8 * (1.0 + std::fabs(core->value)),
                "3x3 core eig %g below floor %g on linear-feasible point",
                core->value, -1e-8);
  }
  c.expect(psd_count > 10, "sampler never reached the PSD region");
}

// ---- decomposition ----------------------------------------------------------

void s_decomposition(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 106);
  for (int trial = 0; trial < 5000; ++trial) {
    LiftedPoint z = random_mix(rng, 2, 5);
    Decomposition d = decompose(z);
    double sum = 0.0;
    for (double l : d.lambda) {
      sum += l;
      c.expect(l >= -1e-12, "negative weight");
    }
    c.expectf(std::fabs(sum - 1.0) < 1e-12, "weights sum to %g vs %g", sum, 1.0);

    // the second on-pattern weight must read the second switch margin; its
    // mirror breaks the sum exactly by y1 - y2
    const double wrong = z.p.y1 - z.p.Y12;
    const double mutated = sum - d.lambda[2] + wrong;
    if (std::fabs(z.p.y1 - z.p.y2) > 1e-6)
      c.expect(std::fabs(mutated - 1.0) > 1e-7, "mutated weight not detectable");
  }
}

// ---- complement-variable matrices -------------------------------------------

void s_complement_identity(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 107);
  for (int trial = 0; trial < 20000; ++trial) {
    LiftedPoint z =
        (trial % 2 == 0) ? random_mix(rng, 1, 4) : sample_linear_feasible(rng);
    TMatrices tm;
    try {
      tm = t_matrices(z);
    } catch (const InternalCheckError&) {
      c.expect(false, "complement identity or verdict agreement failed");
      return;
    }
    const double T12 = 1.0 + z.p.Y12 - z.p.y1 - z.p.y2;
    c.expectf(std::fabs(tm.original(3, 4) - T12) < 1e-15, "T12 entry %g vs %g",
              tm.original(3, 4), T12);
    if (T12 >= 0.0) {
      const double lo = eig_min(tm.strengthened).value;
      const double hi = eig_min(tm.original).value;
      c.expectf(hi >= lo - 1e-12 * (1.0 + tm.original.max_abs()),
                "weak matrix below strengthened: %g vs %g", hi, lo);
    }
  }
}

// ---- certificate repair -----------------------------------------------------

void s_repair_certificates(std::uint64_t seed, Checker& c) {
  const TolerancePolicy tol;
  std::vector<LiftedPoint> pts = sample_lacking(seed + 9, 80);
  c.expectf(static_cast<int>(pts.size()) == 80, "sampler yield %g of %g", double(pts.size()), 80.0);

  int with_alpha1 = 0, lam_cases = 0;
  for (const LiftedPoint& z : pts) {
    FailureProfile fp = classify(z);
    c.expect(fp.lacks_only_first(), "sampled point has the wrong profile");
    with_alpha1 += z.alpha1 > tol.eq_tol;

    LiftedPoint work = z.alpha1 > tol.eq_tol ? reduce_alpha1(z) : z;
    const Alpha2Interval iv = alpha2_interval(work);
    c.expect(iv.lo <= iv.hi, "empty admissible interval");

    // inside the interval (clipped to the linear box) the first 4x4 block is
    // PSD; the sampled alpha2 sits outside and fails by construction
    const double box_lo = std::max(0.0, work.p.x1 + work.p.x2 - work.p.X12 - work.p.Y12);
    const double box_hi = std::min(work.p.y2 - work.p.Y12, work.p.x2 - work.p.X12);
    const double glo = std::max(iv.lo, box_lo), ghi = std::min(iv.hi, box_hi);
    if (glo <= ghi)
      for (int k = 0; k <= 10; ++k) {
        LiftedPoint probe = work;
        probe.alpha2 = glo + (ghi - glo) * k / 10.0;
        const SymMat m = psd4_first_matrix(probe);
        c.expectf(eig_min(m).value >= -1e-9 * (1.0 + m.max_abs()),
                  "interior of interval not PSD: eig %g at t %g", eig_min(m).value,
                  k / 10.0);
      }
    {
      const SymMat m = psd4_first_matrix(work);
      c.expectf(eig_min(m).value < -1e-9 * (1.0 + m.max_abs()),
                "sampled alpha2 unexpectedly PSD: eig %g scale %g", eig_min(m).value,
                m.max_abs());
    }

    // perspective window: inside it the perspective beta2 is below the linear
    const double d2 = work.p.y2 - work.p.Y12;
    const double gap2 = work.p.x2 - work.p.X22;
    if (gap2 >= 0.0 && 4.0 * gap2 <= 0.98 * d2) {
      ++lam_cases;
      const LambdaInterval lam = lambda_interval(work);
      for (int k = 1; k < 5; ++k) {
        const double a2 = lam.lo + (lam.hi - lam.lo) * k / 5.0;
        const double persp = a2 * a2 / d2;
        const double lin = work.p.X22 - work.p.x2 + a2;
        c.expectf(persp <= lin + 1e-10, "perspective form above linear: %g vs %g", persp, lin);
      }
    }

    // the block determinant is a downward parabola in alpha2 whose roots are
    // the interval ends, so it peaks at the midpoint
    {
      const double mid = 0.5 * (iv.lo + iv.hi);
      auto det4 = [&](double a2) {
        LiftedPoint probe = work;
        probe.alpha2 = a2;
        EigSym e = eig_sym(psd4_first_matrix(probe));
        return e.values[0] * e.values[1] * e.values[2] * e.values[3];
      };
      const double d0 = det4(mid);
      c.expectf(d0 >= det4(mid - 1e-4) - 1e-11, "det not maximal at midpoint: %g vs %g",
                d0, det4(mid - 1e-4));
      c.expectf(d0 >= det4(mid + 1e-4) - 1e-11, "det not maximal at midpoint: %g vs %g",
                d0, det4(mid + 1e-4));
    }

    const LiftedPoint r = repair(z);
    c.expect(check(r, System::nobeta).pass(), "repair output fails the full system");
    c.expect(r.p.x1 == z.p.x1 && r.p.X11 == z.p.X11 && r.p.X12 == z.p.X12 &&
                 r.p.X22 == z.p.X22 && r.alpha1 == z.alpha1,
             "repair moved fields other than alpha2");

    // mirrored failures route through the swap involution
    const LiftedPoint zs = swap_coords(z);
    c.expect(classify(zs).lacks_only_second(), "swap does not mirror the profile");
    const LiftedPoint rs = repair(zs);
    c.expect(check(rs, System::nobeta).pass(), "mirrored repair fails");
  }
  c.expect(with_alpha1 > 10, "no positive-alpha1 cases sampled");
  c.expect(with_alpha1 < 70, "no zero-alpha1 cases sampled");
  c.expect(lam_cases > 10, "perspective window never testable");
}

// ---- box maximizer vs dense grid ---------------------------------------------

double grid_best(double c1, double c2, double Q11, double Q12, double Q22,
                 double ub1, double ub2) {
  auto f = [&](double x1, double x2) {
    return c1 * x1 + c2 * x2 + Q11 * x1 * x1 + 2.0 * Q12 * x1 * x2 + Q22 * x2 * x2;
  };
  const int n = 101;
  double best = f(0.0, 0.0), bx = 0.0, by = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x1 = ub1 * i / (n - 1), x2 = ub2 * j / (n - 1);
      const double v = f(x1, x2);
      if (v > best) {
        best = v;
        bx = x1;
        by = x2;
      }
    }
  double w1 = ub1 / (n - 1), w2 = ub2 / (n - 1);
  for (int round = 0; round < 3; ++round) {
    const double lo1 = std::max(0.0, bx - 2.0 * w1), hi1 = std::min(ub1, bx + 2.0 * w1);
    const double lo2 = std::max(0.0, by - 2.0 * w2), hi2 = std::min(ub2, by + 2.0 * w2);
    for (int i = 0; i < 41; ++i)
      for (int j = 0; j < 41; ++j) {
        const double x1 = lo1 + (hi1 - lo1) * i / 40.0;
        const double x2 = lo2 + (hi2 - lo2) * j / 40.0;
        const double v = f(x1, x2);
        if (v > best) {
          best = v;
          bx = x1;
          by = x2;
        }
      }
    w1 = (hi1 - lo1) / 40.0;
    w2 = (hi2 - lo2) / 40.0;
  }
  return best;
}

void s_box_oracle(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 108);
  for (int trial = 0; trial < 150; ++trial) {
    const double c1 = rng.uniform(-2.0, 2.0), c2 = rng.uniform(-2.0, 2.0);
    const double Q11 = rng.uniform(-2.0, 2.0), Q12 = rng.uniform(-2.0, 2.0),
                 Q22 = rng.uniform(-2.0, 2.0);
    double ub1 = rng.uniform(), ub2 = rng.uniform();
    if (trial % 3 == 0) ub1 = 1.0;
    if (trial % 4 == 0) ub2 = trial % 8 ? 1.0 : 0.0;

    const BoxMax bm = max_quad_box(c1, c2, Q11, Q12, Q22, ub1, ub2);
    c.expect(bm.x1 >= 0.0 && bm.x1 <= ub1 && bm.x2 >= 0.0 && bm.x2 <= ub2,
             "argmax escapes the box");
    const double fx = c1 * bm.x1 + c2 * bm.x2 + Q11 * bm.x1 * bm.x1 +
                      2.0 * Q12 * bm.x1 * bm.x2 + Q22 * bm.x2 * bm.x2;
    c.expectf(std::fabs(fx - bm.value) < 1e-13 * (1.0 + std::fabs(fx)),
              "reported value %g but argmax evaluates to %g", bm.value, fx);

    const double gb = grid_best(c1, c2, Q11, Q12, Q22, ub1, ub2);
    c.expectf(gb <= bm.value + 1e-12, "grid found %g above exact %g", gb, bm.value);
    c.expectf(bm.value <= gb + 1e-6, "exact %g not reached by grid %g", bm.value, gb);
  }
}

// ---- support solves ----------------------------------------------------------

void s_support_consistency(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 109);
  TolerancePolicy loose;
  loose.psd_tol *= 10.0;
  loose.eq_tol *= 10.0;

  for (int trial = 0; trial < 50; ++trial) {
    Objective o = draw_objective(rng);
    o.cY = 0.0;
    const double atoms = support_atoms(o, true).value;
    const SolveResult sr = support(System::minimal, o, 1e-6);
    c.expectf(std::fabs(sr.value - atoms) <= 2e-6, "support %.12g vs generators %.12g",
              sr.value, atoms);
    c.expect(check(sr.argmax, System::minimal, loose).pass(), "argmax infeasible");
    c.expectf(std::fabs(eval(o, sr.argmax.p) - sr.value) < 1e-9,
              "argmax value %g vs reported %g", eval(o, sr.argmax.p), sr.value);
    c.expect(sr.certified_gap <= 1e-6, "gap above requested accuracy");
  }

  for (int trial = 0; trial < 12; ++trial) {
    Objective o = draw_objective(rng);
    const SolveResult rd = support(System::disjunctive, o, 1e-6);
    const SolveResult rn = support(System::nobeta, o, 1e-6);
    const double sm = support(System::minimal, o, 1e-6).value;
    const double sc = support(System::conjecture, o, 1e-6).value;
    c.expectf(std::fabs(rd.value - rn.value) <= 3e-6,
              "beta elimination changed support: %.12g vs %.12g", rd.value, rn.value);
    c.expectf(std::fabs(rn.value - sm) <= 3e-6,
              "block pruning changed support: %.12g vs %.12g", rn.value, sm);
    c.expectf(sc >= sm - 3e-6, "weak system below the exact one: %.12g vs %.12g", sc, sm);

    c.expect(rd.argmax.has_beta, "disjunctive argmax missing beta");
    c.expect(check(rd.argmax, System::disjunctive, loose).pass(),
             "disjunctive argmax infeasible");
    c.expect(check(rn.argmax, System::nobeta, loose).pass(), "nobeta argmax infeasible");
  }
}

// ---- point file round trip -----------------------------------------------------

void s_io_roundtrip(std::uint64_t seed, Checker& c) {
  Rng rng = substream(seed, 110);
  for (int trial = 0; trial < 300; ++trial) {
    LiftedPoint z;
    auto draw = [&] {
      const double u = rng.uniform();
      if (u < 0.1) return 0.0;
      if (u < 0.15) return 1.0;
      if (u < 0.2) return 1e-17;
      if (u < 0.25) return -0.25;
      return rng.uniform(-1.0, 2.0);
    };
    z.p = {draw(), draw(), draw(), draw(), draw(), draw(), draw(), draw()};
    z.alpha1 = draw();
    z.alpha2 = draw();
    z.has_beta = rng.uniform() < 0.5;
    z.beta1 = draw();
    z.beta2 = draw();

    const ParsedPoint back = parse_point(format_point(z, true));
    c.expect(back.has_alpha && back.z.has_beta == z.has_beta, "flags drift");
    c.expect(back.z.p.x1 == z.p.x1 && back.z.p.x2 == z.p.x2 && back.z.p.X11 == z.p.X11 &&
                 back.z.p.X12 == z.p.X12 && back.z.p.X22 == z.p.X22 &&
                 back.z.p.y1 == z.p.y1 && back.z.p.y2 == z.p.y2 && back.z.p.Y12 == z.p.Y12,
             "moment fields drift");
    c.expect(back.z.alpha1 == z.alpha1 && back.z.alpha2 == z.alpha2, "alpha drift");
    if (z.has_beta)
      c.expect(back.z.beta1 == z.beta1 && back.z.beta2 == z.beta2, "beta drift");

    const ParsedPoint bare = parse_point(format_point(z, false));
    c.expect(!bare.has_alpha && bare.z.alpha1 == 0.0, "alpha not optional");
  }

  auto rejects = [&](const char* text) {
    try {
      parse_point(text);
      return false;
    } catch (const ParseError&) {
      return true;
    }
  };
  c.expect(rejects("{\"x\": [0, 0], \"y\": [0, 0], \"Y12\": 0}"), "missing X accepted");
  c.expect(rejects("{\"x\": [0, 0], \"X\": [0, 0, 0], \"y\": [0, 0], \"Y12\": 0, \"z\": 1}"),
           "unknown key accepted");
  c.expect(rejects("{\"x\": [0], \"X\": [0, 0, 0], \"y\": [0, 0], \"Y12\": 0}"),
           "short array accepted");
  c.expect(rejects("{\"x\": [0, \"a\"], \"X\": [0, 0, 0], \"y\": [0, 0], \"Y12\": 0}"),
           "string entry accepted");
  c.expect(rejects("{\"x\": [0, NaN], \"X\": [0, 0, 0], \"y\": [0, 0], \"Y12\": 0}"),
           "NaN accepted");
  c.expect(rejects("not json"), "garbage accepted");
}

// ---- experiment determinism ----------------------------------------------------

void s_report_determinism(std::uint64_t seed, Checker& c) {
  const std::vector<TrialRow> a = run_exactness(System::minimal, 15, seed, 1e-6, 1e-5);
  const std::vector<TrialRow> b = run_exactness(System::minimal, 15, seed, 1e-6, 1e-5);
  c.expect(format_csv(a) == format_csv(b), "re-run changed the report");

  const TrialTotals t = tally(a);
  c.expect(t.solver_errors == 0, "solver errors in the smoke batch");
  c.expect(t.counterexamples == 0, "counterexamples in the smoke batch");
  c.expectf(t.max_gap <= 1e-5, "max gap %g above %g", t.max_gap, 1e-5);

  const std::vector<TrialRow> w =
      run_conjecture(5, seed, 1e-6, 1e-5, std::nullopt);
  c.expect(tally(w).solver_errors == 0, "conjecture smoke batch had solver errors");
}

}  // namespace

std::vector<SuiteResult> run_selftests(std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::vector<SuiteResult> out;
  auto run = [&](const char* name, void (*fn)(std::uint64_t, Checker&)) {
    SuiteResult r;
    r.name = name;
    Checker ck;
    const auto t0 = clock::now();
    try {
      fn(seed, ck);
    } catch (const std::exception& e) {
      ck.ok = false;
      ck.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    r.pass = ck.ok;
    r.detail = ck.ok ? std::to_string(ck.checks) + " checks" : ck.detail;
    out.push_back(std::move(r));
  };

  run("eigensolver", s_eigensolver);
  run("cone_reports", s_cone_reports);
  run("one_switch_hull", s_one_switch_hull);
  run("membership_soundness", s_membership_soundness);
  run("schur_crosscheck", s_schur_crosscheck);
  run("decomposition", s_decomposition);
  run("complement_identity", s_complement_identity);
  run("repair_certificates", s_repair_certificates);
  run("box_oracle", s_box_oracle);
  run("support_consistency", s_support_consistency);
  run("io_roundtrip", s_io_roundtrip);
  run("report_determinism", s_report_determinism);
  return out;
}

}  // namespace swh
