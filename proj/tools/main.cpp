#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swh/errors.hpp"
#include "swh/experiments.hpp"
#include "swh/pointfile.hpp"
#include "swh/repair.hpp"
#include "swh/selftest.hpp"
#include "swh/solver.hpp"

namespace {

// exit codes for point-centric commands: 0 member / repaired,
// 1 membership or solver failure, 2 unusable input
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

swh::System parse_system(const std::string& name) {
  auto s = swh::system_from_name(name);
  if (!s) throw CLI::ValidationError("--system", "unknown system '" + name + "'");
  return *s;
}

int do_check(const std::string& path, const std::string& system_name) {
  swh::ParsedPoint pp;
  try {
    pp = swh::load_point(path);
  } catch (const swh::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  }
  if (!pp.has_alpha) {
    std::fprintf(stderr, "point file: alpha is required for membership checks\n");
    return kBadInput;
  }
  const swh::System system = parse_system(system_name);
  if (system == swh::System::disjunctive && !pp.z.has_beta) {
    std::fprintf(stderr, "point file: beta is required for the disjunctive system\n");
    return kBadInput;
  }
  try {
    const swh::Report r = swh::check(pp.z, system);
    std::fputs(r.summary().c_str(), stdout);
    return r.pass() ? kOk : kFail;
  } catch (const swh::DegenerateLiftError& e) {
    std::fprintf(stderr, "degenerate lift: %s\n", e.what());
    return kFail;
  }
}

int do_repair(const std::string& path, const std::string& out_path) {
  swh::ParsedPoint pp;
  try {
    pp = swh::load_point(path);
  } catch (const swh::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  }
  if (!pp.has_alpha) {
    std::fprintf(stderr, "point file: alpha is required for repair\n");
    return kBadInput;
  }
  const swh::Report pre = swh::check(pp.z, swh::System::minimal);
  if (!pre.pass()) {
    std::fputs(pre.summary().c_str(), stderr);
    std::fprintf(stderr, "repair: input must satisfy the linear conditions and the 5x5 block\n");
    return kFail;
  }
  swh::LiftedPoint fixed;
  try {
    fixed = swh::repair(pp.z);
  } catch (const swh::InternalCheckError& e) {
    std::fprintf(stderr, "repair failed: %s\n", e.what());
    return kFail;
  }
  const std::string text = swh::format_point(fixed, /*with_alpha=*/true);
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "cannot write '%s'\n", out_path.c_str());
      return kBadInput;
    }
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
  return kOk;
}

int do_support(const swh::Objective& o, const std::string& system_name,
               double accuracy) {
  const swh::System system = parse_system(system_name);
  try {
    const swh::SolveResult r = swh::support(system, o, accuracy);
    std::printf("value = %.17g\n", r.value);
    std::printf("iterations = %d\n", r.iterations);
    std::printf("certified_gap = %.17g\n", r.certified_gap);
    std::fputs(swh::format_point(r.argmax, /*with_alpha=*/true).c_str(), stdout);
    return kOk;
  } catch (const swh::NonConvergenceError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kFail;
  }
}

int emit_rows(const std::vector<swh::TrialRow>& rows, const std::string& out_path) {
  const swh::TrialTotals t = swh::tally(rows);
  if (out_path.empty()) {
    std::fputs(swh::format_csv(rows).c_str(), stdout);
    std::fprintf(stderr, "trials=%zu ok=%d counterexamples=%d solver_errors=%d max_gap=%.3e\n",
                 rows.size(), t.ok, t.counterexamples, t.solver_errors, t.max_gap);
  } else {
    swh::write_csv(out_path, rows);
    std::printf("trials=%zu ok=%d counterexamples=%d solver_errors=%d max_gap=%.3e\n",
                rows.size(), t.ok, t.counterexamples, t.solver_errors, t.max_gap);
    std::printf("wrote %s\n", out_path.c_str());
  }
  return kOk;
}

int do_selftest(std::uint64_t seed) {
  const std::vector<swh::SuiteResult> results = swh::run_selftests(seed);
  bool all = true;
  double total = 0.0;
  for (const swh::SuiteResult& r : results) {
    std::printf("%-24s %-4s %8.2f s   %s\n", r.name.c_str(), r.pass ? "ok" : "FAIL",
                r.seconds, r.detail.c_str());
    all = all && r.pass;
    total += r.seconds;
  }
  std::printf("%-24s %-4s %8.2f s\n", "total", all ? "ok" : "FAIL", total);
  return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hull representations for on/off quadratic variables"};
  app.require_subcommand(1);

  std::string point_path, out_path, system_name = "minimal";
  double accuracy = 1e-6, gap_tol = 1e-5;
  int trials = 1000;
  std::uint64_t seed = 1;
  swh::Objective obj;
  double force_cy = 0.0;

  CLI::App* c_check = app.add_subcommand("check", "membership report for a point file");
  c_check->add_option("file", point_path, "point JSON")->required();
  c_check->add_option("--system", system_name, "disj|nobeta|minimal|conjecture");

  CLI::App* c_repair =
      app.add_subcommand("repair", "complete a certificate that lacks one 4x4 block");
  c_repair->add_option("file", point_path, "point JSON")->required();
  c_repair->add_option("--out", out_path, "write the repaired point here");

  CLI::App* c_support = app.add_subcommand("support", "maximize one objective");
  c_support->add_option("--system", system_name, "disj|nobeta|minimal|conjecture");
  c_support->add_option("--accuracy", accuracy, "additive optimality gap");
  c_support->add_option("--cx1", obj.cx1);
  c_support->add_option("--cx2", obj.cx2);
  c_support->add_option("--q11", obj.Q11);
  c_support->add_option("--q12", obj.Q12);
  c_support->add_option("--q22", obj.Q22);
  c_support->add_option("--cy1", obj.cy1);
  c_support->add_option("--cy2", obj.cy2);
  c_support->add_option("--cY", obj.cY);

  CLI::App* c_exact =
      app.add_subcommand("exactness", "random objectives (cY = 0) vs the generator oracle");
  c_exact->add_option("--system", system_name, "disj|nobeta|minimal|conjecture");
  c_exact->add_option("--trials", trials, "number of objectives");
  c_exact->add_option("--seed", seed, "master seed");
  c_exact->add_option("--accuracy", accuracy, "solver gap per trial");
  c_exact->add_option("--gap-tol", gap_tol, "counterexample threshold");
  c_exact->add_option("--out", out_path, "write the CSV here");

  CLI::App* c_conj =
      app.add_subcommand("conjecture", "weak-system support vs the generator oracle");
  c_conj->add_option("--trials", trials, "number of objectives");
  c_conj->add_option("--seed", seed, "master seed");
  c_conj->add_option("--accuracy", accuracy, "solver gap per trial");
  c_conj->add_option("--gap-tol", gap_tol, "flagging threshold");
  c_conj->add_option("--out", out_path, "write the CSV here");
  CLI::Option* opt_force = c_conj->add_option("--force-cy", force_cy, "pin cY to this value");

  CLI::App* c_self = app.add_subcommand("selftest", "randomized internal cross-checks");
  c_self->add_option("--seed", seed, "master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_check) return do_check(point_path, system_name);
    if (*c_repair) return do_repair(point_path, out_path);
    if (*c_support) return do_support(obj, system_name, accuracy);
    if (*c_exact)
      return emit_rows(
          swh::run_exactness(parse_system(system_name), trials, seed, accuracy, gap_tol),
          out_path);
    if (*c_conj) {
      std::optional<double> fc;
      if (opt_force->count() > 0) fc = force_cy;
      return emit_rows(swh::run_conjecture(trials, seed, accuracy, gap_tol, fc), out_path);
    }
    if (*c_self) return do_selftest(seed);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFail;
  }
  return kBadInput;
}
