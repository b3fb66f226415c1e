#pragma once

// Run driver, error norms, convergence studies and CSV output.

#include "afdweno/problems.hpp"
#include "afdweno/scheme.hpp"
#include "afdweno/time_integration.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace afdweno {

struct RunConfig {
  SchemeConfig scheme;
  TimeIntegratorConfig integrator;
  int nx = 0;  // 0: problem default
  int ny = 0;
  std::optional<double> t_end;  // overrides the problem stop time
};

/// Run configuration with the problem's own defaults (order, solver, CFL,
/// flattener) filled in; `order` = 0 keeps the problem's default order.
RunConfig default_run_config(const ProblemSpec& spec, int order = 0);

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct RunResult {
  StateArray state;
  double t = 0.0;
  long steps = 0;
  RhsDiagnostics diagnostics;
  Metadata metadata;
};

Grid make_grid(const ProblemSpec& spec, const RunConfig& config);
/// Conserved initial data sampled at zone centres (ghosts filled).
StateArray initial_state(const ProblemSpec& spec, const SystemModel& sys, const Grid& grid);

/// Integrates to t_end, clipping the final step so the stop time is hit
/// exactly. Domain errors are rethrown with the simulation time attached.
RunResult run_problem(const ProblemSpec& spec, const RunConfig& config);

/// Keeps the two-by-two block of zones at the re-entrant step corner on the
/// isentrope and Bernoulli value of the upstream zone.
void apply_corner_fix(StateArray& u, const SystemModel& sys);

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// L1 = sum|a - b| / N, Linf = max|a - b|.
ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> reference);
/// Norms of one primitive component against the exact solution at time t.
ErrorNorms solution_error(const StateArray& u, const SystemModel& sys, const ExactField& exact,
                          double t, int component = 0);

struct ConvergenceRow {
  int nx = 0;
  int ny = 1;
  double l1_error = 0.0;
  std::optional<double> l1_order;
  double linf_error = 0.0;
  std::optional<double> linf_order;
};

double observed_order(double e_coarse, double e_fine);

/// Integrator pairing for accuracy studies: order 3 uses RK3 with the CFL
/// step; higher orders use RK4 with dt scaled by (1/2)^(order/4) per doubling.
void accuracy_study_integrator(int order, TimeIntegratorConfig& integrator);

/// Runs each mesh (n, or n x n in 2D) with the refinement rule of
/// `base.integrator` and tabulates density errors against the exact solution.
std::vector<ConvergenceRow> convergence_study(const ProblemSpec& spec, const RunConfig& base,
                                              std::span<const int> meshes,
                                              Metadata* metadata = nullptr);

void write_solution_csv(std::ostream& os, const StateArray& u, const SystemModel& sys);
void write_solution_csv(const std::string& path, const StateArray& u, const SystemModel& sys);
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows);
void write_convergence_csv(const std::string& path, std::span<const ConvergenceRow> rows);
void write_metadata(std::ostream& os, const Metadata& metadata);

/// <problem>_<order>_<mesh>.csv, mesh as NX or NXxNY.
std::string snapshot_name(const std::string& problem, int order, int nx, int ny);

}  // namespace afdweno
