#include "cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nscraig/fom.hpp"
#include "nscraig/generators.hpp"
#include "nscraig/gmres.hpp"
#include "nscraig/memory_model.hpp"
#include "nscraig/schur.hpp"
#include "nscraig/solver.hpp"
#include "nscraig/system_io.hpp"
#include "nscraig/validate.hpp"
#include "nscraig/vector_ops.hpp"

namespace nscraig::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class FlagError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProblemSpec spec_from_flags(const RunFlags& f) {
  ProblemSpec spec;
  spec.kind = problem_kind_from_string(f.problem);
  spec.m = f.m;
  spec.n = f.n;
  spec.grid = f.grid;
  spec.seed = f.seed;
  spec.nu = f.nu;
  spec.wind_x = f.wind_x;
  spec.wind_y = f.wind_y;
  spec.path = f.path;
  return spec;
}

SaddleSystem resolve_system(const ProblemSpec& spec) {
  switch (spec.kind) {
    case ProblemKind::synthetic: return gen_synthetic(spec);
    case ProblemKind::oseen_fd: return gen_oseen_fd(spec);
    case ProblemKind::file:
      if (spec.path.empty()) throw FlagError("--problem file requires --path");
      return load_system(spec.path);
  }
  throw FlagError("unknown problem kind");
}

void check_common_flags(const RunFlags& f) {
  if (!(f.tol > 0.0)) throw FlagError("--tol must be > 0");
  if (f.maxit < 1) throw FlagError("--maxit must be >= 1");
  if (f.delay < 1) throw FlagError("--delay must be >= 1");
  if (f.stop != "residual" && f.stop != "error")
    throw FlagError("--stop must be residual or error");
}

struct SolverOutcome {
  std::string solver;
  std::size_t iterations = 0;
  std::string termination;  // converged | maxit_reached | breakdown | stagnated
  std::vector<double> rel_residual;
  std::vector<double> error_estimate;          // nscraig only
  std::vector<double> rel_residual_explicit;   // nscraig --validate only
  std::size_t delay = 0;
  std::size_t memory_units = 0;
  double wall_seconds = 0.0;
  double final_block1_rel = 0.0;  // ||M u + A p|| / ||b||
  double final_block2_rel = 0.0;  // ||A^T u - b|| / ||b||
  int exit_code = exit_ok;
};

void fill_final_residuals(SolverOutcome& oc, const SaddleSystem& sys, const Vec& u, const Vec& p) {
  const double bnorm = norm2(sys.b);
  Vec block1 = spmv(sys.M, u);
  axpy(1.0, spmv(sys.A, p), block1);
  Vec block2 = subtract(spmv_t(sys.A, u), sys.b);
  oc.final_block1_rel = norm2(block1) / bnorm;
  oc.final_block2_rel = norm2(block2) / bnorm;
}

SolverOutcome run_nscraig(const SaddleSystem& sys, const SparseFactorization& fact,
                          const RunFlags& f) {
  SolverConfig cfg;
  cfg.tol = f.tol;
  cfg.maxit = f.maxit;
  cfg.delay_d = f.delay;
  cfg.criterion =
      f.stop == "error" ? StoppingCriterion::error_estimate : StoppingCriterion::residual;

  SolverOutcome oc;
  oc.solver = "nscraig";
  oc.delay = f.delay;
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport report;
  ValidationTrace trace;
  if (f.validate)
    report = nscraig_solve_validated(fact, sys.A, sys.b, cfg, trace);
  else
    report = nscraig_solve(fact, sys.A, sys.b, cfg);
  oc.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const double bnorm = norm2(sys.b);
  oc.iterations = report.iterations;
  oc.termination = to_string(report.termination);
  for (double r : report.residual_history) oc.rel_residual.push_back(r / bnorm);
  oc.error_estimate = report.error_estimate_history;
  if (f.validate)
    for (double r : trace.explicit_residuals) oc.rel_residual_explicit.push_back(r / bnorm);
  oc.memory_units = report.memory_estimate;
  fill_final_residuals(oc, sys, report.u, report.p);
  oc.exit_code = report.termination == Termination::converged  ? exit_ok
                 : report.termination == Termination::breakdown ? exit_breakdown
                                                                : exit_not_converged;
  return oc;
}

SolverOutcome run_fom(const SaddleSystem& sys, const SparseFactorization& fact,
                      const RunFlags& f) {
  SolverOutcome oc;
  oc.solver = "fom";
  const SchurOperator op{&sys.A, &fact};
  const Vec rhs = scaled(sys.b, -1.0);  // FOM on the Schur complement starts from -b
  const auto t0 = std::chrono::steady_clock::now();
  const FomResult result = fom_solve(op, rhs, f.tol, f.maxit);
  oc.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const double bnorm = norm2(sys.b);
  oc.iterations = result.iterations;
  oc.termination = result.converged ? "converged" : "maxit_reached";
  for (double r : result.residual_history) oc.rel_residual.push_back(r / bnorm);
  oc.memory_units = result.peak_basis_scalars + sys.m_dim();
  Vec u = apply_inverse(fact, spmv(sys.A, result.p));
  scal(-1.0, u);
  fill_final_residuals(oc, sys, u, result.p);
  oc.exit_code = result.converged ? exit_ok : exit_not_converged;
  return oc;
}

SolverOutcome run_gmres(const SaddleSystem& sys, const SparseFactorization& fact,
                        const RunFlags& f, std::optional<std::size_t> restart,
                        const std::string& label) {
  SolverOutcome oc;
  oc.solver = label;
  const BlockPreconditionedSystem blocksys{&sys.M, &sys.A, &fact, sys.b};
  const auto t0 = std::chrono::steady_clock::now();
  const GmresResult result = gmres_solve(blocksys, f.tol, f.maxit, restart);
  oc.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const double bnorm = norm2(sys.b);
  oc.iterations = result.iterations;
  oc.termination = result.converged   ? "converged"
                   : result.stagnated ? "stagnated"
                                      : "maxit_reached";
  for (double r : result.residual_history) oc.rel_residual.push_back(r / bnorm);
  const std::size_t kmax = restart ? *restart : result.iterations;
  oc.memory_units = memory_estimate(SolverKind::gmres, kmax, sys.m_dim(), sys.n_dim());
  fill_final_residuals(oc, sys, result.u, result.p);
  oc.exit_code = result.converged ? exit_ok : exit_not_converged;
  return oc;
}

void write_history_csv(const std::string& path, const SolverOutcome& oc) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out) throw std::runtime_error("cannot write " + path);
  std::fprintf(out, "iter,rel_residual");
  if (!oc.rel_residual_explicit.empty()) std::fprintf(out, ",rel_residual_explicit");
  if (!oc.error_estimate.empty()) std::fprintf(out, ",error_estimate");
  std::fprintf(out, "\n");
  for (std::size_t i = 0; i < oc.rel_residual.size(); ++i) {
    std::fprintf(out, "%zu,%.17g", i + 1, oc.rel_residual[i]);
    if (!oc.rel_residual_explicit.empty()) std::fprintf(out, ",%.17g", oc.rel_residual_explicit[i]);
    if (!oc.error_estimate.empty()) {
      if (i + 1 >= oc.delay && i + 1 - oc.delay < oc.error_estimate.size())
        std::fprintf(out, ",%.17g", oc.error_estimate[i + 1 - oc.delay]);
      else
        std::fprintf(out, ",");
    }
    std::fprintf(out, "\n");
  }
  std::fclose(out);
}

json outcome_json(const SolverOutcome& oc) {
  json j;
  j["termination"] = oc.termination;
  j["iterations"] = oc.iterations;
  j["memory_estimate"] = oc.memory_units;
  j["final_rel_residual_block1"] = oc.final_block1_rel;
  j["final_rel_residual_block2"] = oc.final_block2_rel;
  return j;
}

json config_json(const RunFlags& f) {
  json j;
  j["tol"] = f.tol;
  j["maxit"] = f.maxit;
  j["stop"] = f.stop;
  j["delay"] = f.delay;
  j["restart"] = f.restart;
  j["validate"] = f.validate;
  return j;
}

}  // namespace

int cmd_run(const RunFlags& flags) {
  try {
    check_common_flags(flags);
    if (flags.solver != "nscraig" && flags.solver != "fom" && flags.solver != "gmres")
      throw FlagError("--solver must be nscraig, fom or gmres");

    const ProblemSpec spec = spec_from_flags(flags);
    const SaddleSystem sys = resolve_system(spec);
    const SparseFactorization fact = factorize(sys.M);

    SolverOutcome oc;
    if (flags.solver == "nscraig") {
      oc = run_nscraig(sys, fact, flags);
    } else if (flags.solver == "fom") {
      oc = run_fom(sys, fact, flags);
    } else {
      std::optional<std::size_t> restart;
      if (flags.restart == "auto") {
        // size the restart from a paired reference run, as the protocol does
        const SolverOutcome ref = run_nscraig(sys, fact, flags);
        restart = compute_restart_kmax(ref.iterations, sys.m_dim(), sys.n_dim());
      } else if (flags.restart != "none") {
        long v = 0;
        try {
          v = std::stol(flags.restart);
        } catch (...) {
          throw FlagError("--restart must be none, auto or a positive integer");
        }
        if (v < 1) throw FlagError("--restart must be >= 1");
        restart = static_cast<std::size_t>(v);
      }
      oc = run_gmres(sys, fact, flags, restart, "gmres");
    }

    fs::create_directories(flags.out);
    write_history_csv((fs::path(flags.out) / "history.csv").string(), oc);

    json summary;
    summary["solver"] = flags.solver;
    summary["problem_digest"] = problem_digest(spec);
    summary["config"] = config_json(flags);
    summary["report"] = outcome_json(oc);
    summary["wall_time_seconds"] = oc.wall_seconds;
    std::ofstream jout(fs::path(flags.out) / "summary.json");
    jout << summary.dump(2) << "\n";

    std::cout << flags.solver << ": " << oc.termination << " in " << oc.iterations
              << " iterations, final rel residual " << oc.final_block2_rel << "\n";
    return oc.exit_code;
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const MatrixMarketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  }
}

int cmd_compare(const RunFlags& flags) {
  try {
    check_common_flags(flags);
    const ProblemSpec spec = spec_from_flags(flags);
    const SaddleSystem sys = resolve_system(spec);
    const SparseFactorization fact = factorize(sys.M);

    std::vector<SolverOutcome> outcomes;
    json failures = json::object();

    const SolverOutcome craig = run_nscraig(sys, fact, flags);
    outcomes.push_back(craig);
    outcomes.push_back(run_fom(sys, fact, flags));
    outcomes.push_back(run_gmres(sys, fact, flags, std::nullopt, "gmres"));

    std::optional<std::size_t> kmax;
    try {
      kmax = compute_restart_kmax(craig.iterations, sys.m_dim(), sys.n_dim());
      outcomes.push_back(run_gmres(sys, fact, flags, kmax,
                                   "gmres(k=" + std::to_string(*kmax) + ")"));
    } catch (const std::exception& e) {
      failures["gmres_restarted"] = e.what();
    }

    const double craig_mem = static_cast<double>(craig.memory_units);
    std::printf("%-14s %8s  %-13s %10s %10s %10s\n", "solver", "iters", "termination", "memory",
                "mem_ratio", "wall_s");
    json table = json::array();
    for (const auto& oc : outcomes) {
      const bool is_gmres = oc.solver.rfind("gmres", 0) == 0;
      const double ratio = static_cast<double>(oc.memory_units) / craig_mem;
      std::printf("%-14s %8zu  %-13s %10zu %10s %10.4f\n", oc.solver.c_str(), oc.iterations,
                  oc.termination.c_str(), oc.memory_units,
                  is_gmres ? (std::to_string(ratio).substr(0, 8)).c_str() : "-", oc.wall_seconds);
      json row = outcome_json(oc);
      row["solver"] = oc.solver;
      row["wall_time_seconds"] = oc.wall_seconds;
      if (is_gmres) row["memory_ratio_vs_nscraig"] = ratio;
      table.push_back(row);
    }

    fs::create_directories(flags.out);
    json summary;
    summary["problem_digest"] = problem_digest(spec);
    summary["config"] = config_json(flags);
    summary["solvers"] = table;
    if (kmax) summary["restart_kmax"] = *kmax;
    if (!failures.empty()) summary["failures"] = failures;
    std::ofstream jout(fs::path(flags.out) / "compare.json");
    jout << summary.dump(2) << "\n";

    std::FILE* csv = std::fopen((fs::path(flags.out) / "histories.csv").string().c_str(), "w");
    if (!csv) throw std::runtime_error("cannot write histories.csv");
    std::fprintf(csv, "solver,iter,rel_residual,error_estimate\n");
    for (const auto& oc : outcomes) {
      for (std::size_t i = 0; i < oc.rel_residual.size(); ++i) {
        std::fprintf(csv, "%s,%zu,%.17g,", oc.solver.c_str(), i + 1, oc.rel_residual[i]);
        if (!oc.error_estimate.empty() && i + 1 >= oc.delay &&
            i + 1 - oc.delay < oc.error_estimate.size())
          std::fprintf(csv, "%.17g", oc.error_estimate[i + 1 - oc.delay]);
        std::fprintf(csv, "\n");
      }
    }
    std::fclose(csv);

    return craig.exit_code;  // sub-run failures are recorded, not fatal
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  }
}

int cmd_gen(const RunFlags& flags) {
  try {
    const ProblemSpec spec = spec_from_flags(flags);
    if (spec.kind == ProblemKind::file) throw FlagError("gen requires synthetic or oseen");
    const SaddleSystem sys = resolve_system(spec);
    const ValidationReport report = validate_system(sys, 100);
    save_system(flags.out, sys, spec);
    std::cout << "wrote " << flags.out << " (m=" << sys.m_dim() << ", n=" << sys.n_dim()
              << ", min quadratic form " << report.min_quadratic_form << ", sigma_min "
              << report.min_singular_value << ")\n";
    return exit_ok;
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  }
}

}  // namespace nscraig::cli
