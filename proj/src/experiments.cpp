#include "swh/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "swh/errors.hpp"

namespace swh {

Objective draw_objective(Rng& rng) {
  Objective o;
  o.cx1 = rng.uniform(-1.0, 1.0);
  o.cx2 = rng.uniform(-1.0, 1.0);
  o.Q11 = rng.uniform(-1.0, 1.0);
  o.Q12 = rng.uniform(-1.0, 1.0);
  o.Q22 = rng.uniform(-1.0, 1.0);
  o.cy1 = rng.uniform(-1.0, 1.0);
  o.cy2 = rng.uniform(-1.0, 1.0);
  o.cY = rng.uniform(-1.0, 1.0);
  return o;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_id) {
  return Rng::mix(master_seed ^ Rng::mix(trial_id));
}

namespace {

TrialRow run_one(System system, int trial_id, std::uint64_t master_seed,
                 double accuracy, double gap_tol, bool restrict_Y,
                 std::optional<double> force_cY) {
  TrialRow row;
  row.trial_id = trial_id;
  row.seed = trial_seed(master_seed, static_cast<std::uint64_t>(trial_id));
  Rng rng(row.seed);
  row.obj = draw_objective(rng);
  if (restrict_Y) row.obj.cY = 0.0;
  if (force_cY) row.obj.cY = *force_cY;

  row.oracle_value = support_atoms(row.obj, restrict_Y).value;
  try {
    SolveResult sr = support(system, row.obj, accuracy);
    row.repr_value = sr.value;
    row.solve_iterations = sr.iterations;
    row.gap = row.repr_value - row.oracle_value;
    row.status = row.gap > gap_tol ? "counterexample" : "ok";
  } catch (const NonConvergenceError&) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.repr_value = nan;
    row.gap = nan;
    row.solve_iterations = 0;
    row.status = "solver_error";
  }
  return row;
}

}  // namespace

std::vector<TrialRow> run_exactness(System system, int trials,
                                    std::uint64_t master_seed, double accuracy,
                                    double gap_tol) {
  if (trials <= 0) throw std::invalid_argument("run_exactness: trials must be positive");
  std::vector<TrialRow> rows;
  rows.reserve(trials);
  for (int k = 0; k < trials; ++k)
    rows.push_back(run_one(system, k, master_seed, accuracy, gap_tol,
                           /*restrict_Y=*/true, std::nullopt));
  return rows;
}

std::vector<TrialRow> run_conjecture(int trials, std::uint64_t master_seed,
                                     double accuracy, double gap_tol,
                                     std::optional<double> force_cY) {
  if (trials <= 0) throw std::invalid_argument("run_conjecture: trials must be positive");
  std::vector<TrialRow> rows;
  rows.reserve(trials);
  // product-free oracle unless a nonzero Y-coefficient is forced in; then the
  // oracle has to price the product term too
  for (int k = 0; k < trials; ++k)
    rows.push_back(run_one(System::conjecture, k, master_seed, accuracy,
                           gap_tol, /*restrict_Y=*/!force_cY, force_cY));
  return rows;
}

std::string format_csv(std::vector<TrialRow> rows) {
  std::sort(rows.begin(), rows.end(),
            [](const TrialRow& a, const TrialRow& b) { return a.trial_id < b.trial_id; });
  std::string out =
      "trial_id,seed,cx1,cx2,q11,q12,q22,cy1,cy2,cY,"
      "oracle_value,repr_value,gap,solve_iterations,status\n";
  char buf[512];
  for (const TrialRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%d,%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%d,%s\n",
                  r.trial_id, static_cast<unsigned long long>(r.seed),
                  r.obj.cx1, r.obj.cx2, r.obj.Q11, r.obj.Q12, r.obj.Q22,
                  r.obj.cy1, r.obj.cy2, r.obj.cY, r.oracle_value, r.repr_value,
                  r.gap, r.solve_iterations, r.status.c_str());
    out += buf;
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<TrialRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  out << format_csv(rows);
}

TrialTotals tally(const std::vector<TrialRow>& rows) {
  TrialTotals t;
  for (const TrialRow& r : rows) {
    if (r.status == "solver_error") {
      ++t.solver_errors;
      continue;
    }
    if (r.status == "counterexample")
      ++t.counterexamples;
    else
      ++t.ok;
    if (std::isfinite(r.gap)) t.max_gap = std::max(t.max_gap, std::fabs(r.gap));
  }
  return t;
}

}  // namespace swh
