#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

void add_problem_flags(CLI::App* cmd, nscraig::cli::RunFlags& f) {
  cmd->add_option("--problem", f.problem, "Problem source")
      ->check(CLI::IsMember({"synthetic", "oseen", "file"}))
      ->capture_default_str();
  cmd->add_option("--m", f.m, "Leading-block dimension (synthetic)")->capture_default_str();
  cmd->add_option("--n", f.n, "Coupling-block columns (synthetic)")->capture_default_str();
  cmd->add_option("--grid", f.grid, "Fine grid cells per side (oseen)")->capture_default_str();
  cmd->add_option("--nu", f.nu, "Viscosity (oseen)")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--wind-x", f.wind_x, "Convection field, x component (oseen)")
      ->capture_default_str();
  cmd->add_option("--wind-y", f.wind_y, "Convection field, y component (oseen)")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Generator seed")->capture_default_str();
  cmd->add_option("--path", f.path, "System directory (--problem file)");
}

void add_solver_flags(CLI::App* cmd, nscraig::cli::RunFlags& f, bool with_solver) {
  if (with_solver) {
    cmd->add_option("--solver", f.solver, "Solver to run")
        ->check(CLI::IsMember({"nscraig", "fom", "gmres"}))
        ->capture_default_str();
    cmd->add_option("--restart", f.restart,
                    "GMRES restart: none, auto (memory-matched) or a positive integer")
        ->capture_default_str();
  }
  cmd->add_option("--tol", f.tol, "Relative stopping tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--maxit", f.maxit, "Iteration cap")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--stop", f.stop, "Stopping criterion")
      ->check(CLI::IsMember({"residual", "error"}))
      ->capture_default_str();
  cmd->add_option("--delay", f.delay, "Error-estimate delay d")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--validate", f.validate,
                "Also recompute the explicit residual per iteration (costs one solution "
                "recovery per step)");
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saddle-point Krylov solvers: nsCRAIG with FOM and memory-matched GMRES baselines"};
  app.require_subcommand(1);

  nscraig::cli::RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run one solver and write history.csv/summary.json");
  add_problem_flags(run, run_flags);
  add_solver_flags(run, run_flags, /*with_solver=*/true);

  nscraig::cli::RunFlags cmp_flags;
  CLI::App* cmp = app.add_subcommand(
      "compare", "Run nscraig, fom and both gmres variants on one system");
  add_problem_flags(cmp, cmp_flags);
  add_solver_flags(cmp, cmp_flags, /*with_solver=*/false);

  nscraig::cli::RunFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "Write a generated system as M.mtx/A.mtx/b.mtx");
  add_problem_flags(gen, gen_flags);
  gen->add_option("--out", gen_flags.out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nscraig::cli::exit_usage;
  }

  if (run->parsed()) return nscraig::cli::cmd_run(run_flags);
  if (cmp->parsed()) return nscraig::cli::cmd_compare(cmp_flags);
  if (gen->parsed()) return nscraig::cli::cmd_gen(gen_flags);
  return nscraig::cli::exit_usage;
}
