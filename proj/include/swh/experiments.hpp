#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swh/oracle.hpp"
#include "swh/rng.hpp"
#include "swh/solver.hpp"

namespace swh {

// One solved objective. status is "ok", "counterexample" (gap above the
// threshold), or "solver_error" (the solve threw; values are NaN).
struct TrialRow {
  int trial_id = 0;
  std::uint64_t seed = 0;
  Objective obj;
  double oracle_value = 0.0;
  double repr_value = 0.0;
  double gap = 0.0;
  int solve_iterations = 0;
  std::string status;
};

// All eight coefficients uniform on [-1, 1], in the fixed order
// cx1, cx2, Q11, Q12, Q22, cy1, cy2, cY.
Objective draw_objective(Rng& rng);

// Per-trial stream seed: trial k of a run always consumes the same draws no
// matter which trials surround it.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_id);

// Random objectives restricted to cY = 0, solved over one representation and
// compared with the generator-family oracle. gap = repr - oracle; rows with
// gap above gap_tol are flagged, solver failures are recorded, never thrown.
std::vector<TrialRow> run_exactness(System system, int trials,
                                    std::uint64_t master_seed, double accuracy,
                                    double gap_tol);

// Same harness over the weak complement-variable system with cY free (or
// pinned to force_cY when given). Flagged rows here are candidate witnesses
// that the weak system overshoots the hull.
std::vector<TrialRow> run_conjecture(int trials, std::uint64_t master_seed,
                                     double accuracy, double gap_tol,
                                     std::optional<double> force_cY);

// CSV with a fixed header, rows ordered by trial_id, doubles at 17
// significant digits.
std::string format_csv(std::vector<TrialRow> rows);
void write_csv(const std::string& path, const std::vector<TrialRow>& rows);

struct TrialTotals {
  int ok = 0;
  int counterexamples = 0;
  int solver_errors = 0;
  double max_gap = 0.0;  // largest |gap| over rows that solved
};
TrialTotals tally(const std::vector<TrialRow>& rows);

}  // namespace swh
