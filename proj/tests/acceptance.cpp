// Acceptance harness: one line per criterion, nonzero exit when any fails.
// Every run is fully seeded and deterministic.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "swh/experiments.hpp"
#include "swh/hull1.hpp"
#include "swh/hull2.hpp"
#include "swh/oracle.hpp"
#include "swh/repair.hpp"
#include "swh/rng.hpp"
#include "swh/solver.hpp"
#include "test_oracles.hpp"

using namespace swh;

namespace {

int failures = 0;

void report(bool ok, const char* name, double seconds, const std::string& metrics) {
  std::printf("%s — %s: %s  [%.1f s]\n", ok ? "PASS" : "FAIL", name,
              metrics.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void criterion(const char* name, F body) {
  const auto start = std::chrono::steady_clock::now();
  std::string metrics;
  bool ok = false;
  try {
    ok = body(metrics);
  } catch (const std::exception& e) {
    metrics = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(ok, name, secs, metrics);
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, ap);
  va_end(ap);
  return buf;
}

LiftedPoint random_mix(Rng& rng) {
  const int k = rng.uniform_int(1, 6);
  std::vector<std::pair<double, LiftedPoint>> parts;
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const auto b = static_cast<YBits>(rng.uniform_int(0, 3));
    const double u1 = (b == YBits::first || b == YBits::both) ? 1.0 : 0.0;
    const double u2 = (b == YBits::second || b == YBits::both) ? 1.0 : 0.0;
    parts.push_back({rng.uniform(0.05, 1.0),
                     atom_lift({b, rng.uniform(0, u1), rng.uniform(0, u2)})});
    total += parts.back().first;
  }
  for (auto& pr : parts) pr.first /= total;
  return convex_mix(parts);
}

std::string describe(const TrialRow& r) {
  return fmt("trial=%d cx=(%.6f,%.6f) Q=(%.6f,%.6f,%.6f) cy=(%.6f,%.6f) "
             "cY=%.6f oracle=%.8f repr=%.8f gap=%.6e",
             r.trial_id, r.obj.cx1, r.obj.cx2, r.obj.Q11, r.obj.Q12, r.obj.Q22,
             r.obj.cy1, r.obj.cy2, r.obj.cY, r.oracle_value, r.repr_value,
             r.gap);
}

}  // namespace

int main() {
  std::printf("acceptance suite (all runs seeded)\n");

  criterion("single-block support matches the generator oracle", [](std::string& m) {
    auto rows = run_exactness(System::minimal, 500, 1, 1e-6, 1e-5);
    auto t = tally(rows);
    m = fmt("trials=500 max|gap|=%.3e counterexamples=%d solver_errors=%d",
            t.max_gap, t.counterexamples, t.solver_errors);
    for (const auto& r : rows)
      if (r.status != "ok") std::printf("  offending %s\n", describe(r).c_str());
    return t.max_gap <= 1e-5 && t.counterexamples == 0 && t.solver_errors == 0;
  });

  criterion("all three exact systems price objectives identically", [](std::string& m) {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      Rng rng = substream(2, static_cast<std::uint64_t>(t));
      const Objective o = draw_objective(rng);
      const double vd = support(System::disjunctive, o, 1e-6).value;
      const double vn = support(System::nobeta, o, 1e-6).value;
      const double vm = support(System::minimal, o, 1e-6).value;
      worst = std::max({worst, std::fabs(vd - vn), std::fabs(vn - vm),
                        std::fabs(vd - vm)});
    }
    m = fmt("objectives=200 max pairwise diff=%.3e (limit 2e-6)", worst);
    return worst <= 2e-6;
  });

  criterion("linear rows alone imply the three-block condition", [](std::string& m) {
    Rng rng(3);
    double worst = 1e300;
    for (int t = 0; t < 100000; ++t) {
      const LiftedPoint z = sample_linear_feasible(rng);
      const SymMat s = psd3_matrix(z);
      const double floor = -1e-8 * (1.0 + s.max_abs());
      worst = std::min(worst, eig_min(s).value - floor);
      if (worst < 0.0) break;
    }
    m = fmt("samples=100000 worst slack above floor=%.3e", worst);
    return worst >= 0.0;
  });

  criterion("certificate completion fixes every sampled point", [](std::string& m) {
    auto pts = sample_lacking(4, 1000);
    const TolerancePolicy strict{1e-8, 1e-9};
    int fixed = 0, a0 = 0, apos = 0;
    for (const auto& z : pts) {
      (z.alpha1 > 1e-9 ? apos : a0) += 1;
      try {
        if (check(repair(z), System::nobeta, strict).pass()) ++fixed;
      } catch (const std::exception&) {
      }
    }
    m = fmt("points=%zu repaired=%d zero-entry=%d shifted-entry=%d", pts.size(),
            fixed, a0, apos);
    return pts.size() >= 900 && fixed == static_cast<int>(pts.size()) &&
           a0 >= 100 && apos >= 100;
  });

  criterion("one-switch membership equals certificate feasibility", [](std::string& m) {
    Rng rng(5);
    int inside = 0, outside = 0, agree = 0;
    for (int t = 0; t < 10000; ++t) {
      const H1Point p{rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
      const bool member = h1_contains(p);
      const bool cert = dnn4_contains(h1_witness_raw(p).W);
      agree += (member == cert);
      (member ? inside : outside) += 1;
    }
    m = fmt("samples=10000 agree=%d inside=%d outside=%d", agree, inside, outside);
    return agree == 10000 && inside >= 500 && outside >= 500;
  });

  criterion("four-way split reconstructs every feasible point", [](std::string& m) {
    Rng rng(6);
    double worst_residual = 0.0;
    int asym = 0, mirrored_breaks = 0;
    for (int t = 0; t < 10000; ++t) {
      const LiftedPoint z = random_mix(rng);
      const auto d = decompose(z);  // membership and identity verified inside
      double sum = 0.0;
      for (double l : d.lambda) {
        if (l < -1e-12) return false;
        sum += l;
      }
      if (std::fabs(sum - 1.0) > 1e-10) return false;
      // hand-check the reconstruction residual on the moment block
      const SymMat* zs[4] = {&d.Z_none, &d.Z_first, &d.Z_second, &d.Z_both};
      const double want[3][3] = {{1.0, z.p.x1, z.p.x2},
                                 {z.p.x1, z.p.X11, z.p.X12},
                                 {z.p.x2, z.p.X12, z.p.X22}};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double s = 0.0;
          for (int k = 0; k < 4; ++k) s += d.lambda[k] * (*zs[k])(i, j);
          worst_residual = std::max(worst_residual, std::fabs(s - want[i][j]));
        }
      // mutation check: mirroring the first-only weight into the second slot
      // must break the sum on every asymmetric point
      if (std::fabs(z.p.y1 - z.p.y2) > 1e-6) {
        ++asym;
        const double wrong_sum = (1.0 - z.p.y1 - z.p.y2 + z.p.Y12) +
                                 2.0 * (z.p.y1 - z.p.Y12) + z.p.Y12;
        if (std::fabs(wrong_sum - 1.0) > 1e-7) ++mirrored_breaks;
      }
    }
    m = fmt("samples=10000 worst residual=%.3e (limit 1e-10), mutated weights "
            "break %d/%d asymmetric points",
            worst_residual, mirrored_breaks, asym);
    return worst_residual <= 1e-10 && asym > 1000 && mirrored_breaks == asym;
  });

  criterion("product-free objectives show no gap on the weak system", [](std::string& m) {
    auto rows = run_conjecture(10000, 1, 1e-6, 1e-5, std::nullopt);
    auto t = tally(rows);
    m = fmt("trials=10000 max|gap|=%.3e counterexamples=%d solver_errors=%d",
            t.max_gap, t.counterexamples, t.solver_errors);
    for (const auto& r : rows)
      if (r.status == "counterexample")
        std::printf("  counterexample %s\n", describe(r).c_str());
    return t.counterexamples == 0 && t.solver_errors == 0;
  });

  criterion("weak system strictly overshoots with a product coefficient", [](std::string& m) {
    auto rows = run_conjecture(500, 15, 1e-6, 1e-5, 0.1);
    const TrialRow* witness = nullptr;
    for (const auto& r : rows)
      if (r.status == "counterexample" && r.gap > 1e-4 && r.obj.cY != 0.0 &&
          (!witness || r.gap > witness->gap))
        witness = &r;
    if (witness) {
      m = fmt("witness found over 500 trials: gap=%.3e > 1e-4", witness->gap);
      std::printf("  witness %s\n", describe(*witness).c_str());
    } else {
      m = "no objective with a certified gap above 1e-4 in 500 trials";
    }
    return witness != nullptr;
  });

  criterion("box maximizer agrees with the grid referee", [](std::string& m) {
    Rng rng(9);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const double c1 = rng.uniform(-1, 1), c2 = rng.uniform(-1, 1);
      const double q11 = rng.uniform(-1, 1), q12 = rng.uniform(-1, 1),
                   q22 = rng.uniform(-1, 1);
      const double fast = max_quad_box(c1, c2, q11, q12, q22, 1.0, 1.0).value;
      const double slow = testref::grid_max_quad(c1, c2, q11, q12, q22, 1.0, 1.0);
      worst = std::max(worst, std::fabs(fast - slow));
    }
    m = fmt("objectives=1000 max deviation=%.3e (limit 1e-6)", worst);
    return worst <= 1e-6;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
