#include "afdweno/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace afdweno {

namespace {

std::string variant_name(const WenoConfig& w) {
  switch (w.center_variant()) {
    case CenterVariant::ao3: return "AO(3)";
    case CenterVariant::ao53: return "AO(5,3)";
    case CenterVariant::ao73: return "AO(7,3)";
    case CenterVariant::ao753: return "AO(7,5,3)";
    case CenterVariant::ao93: return "AO(9,3)";
  }
  return "";
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string mesh_label(int nx, int ny) {
  return ny > 1 ? std::to_string(nx) + "x" + std::to_string(ny) : std::to_string(nx);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

}  // namespace

RunConfig default_run_config(const ProblemSpec& spec, int order) {
  RunConfig c;
  c.scheme.weno.order = order ? order : spec.default_order;
  c.scheme.riemann = spec.riemann;
  c.scheme.flattener = spec.flattener;
  c.scheme.kappa = spec.kappa;
  c.integrator.scheme = spec.rk;
  c.integrator.cfl = spec.cfl;
  return c;
}

Grid make_grid(const ProblemSpec& spec, const RunConfig& config) {
  const int ghost = required_ghost(config.scheme.order());
  const int nx = config.nx > 0 ? config.nx : spec.default_nx;
  Grid g;
  if (spec.two_d) {
    const int ny = config.ny > 0 ? config.ny : (config.nx > 0 ? config.nx : spec.default_ny);
    g = Grid(nx, ny, spec.x_min, spec.x_max, spec.y_min, spec.y_max, ghost);
  } else {
    g = Grid(nx, spec.x_min, spec.x_max, ghost);
  }
  if (spec.obstacle) g.set_obstacle(*spec.obstacle);
  return g;
}

StateArray initial_state(const ProblemSpec& spec, const SystemModel& sys, const Grid& grid) {
  StateArray u(grid, sys.n_components());
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i)
      u.set(i, j, sys.prim_to_cons(spec.initial(grid.xc(i), grid.yc(j))));
  fill_ghosts(u, spec.boundary_conditions(sys), sys, 0.0);
  return u;
}

void apply_corner_fix(StateArray& u, const SystemModel& sys) {
  const Grid& g = u.grid();
  if (!g.obstacle() || sys.kind() != SystemKind::euler) return;
  int ic = 0, jc = 0;
  while (ic < g.nx() && !(g.xc(ic) > g.obstacle()->x_corner)) ++ic;
  while (jc < g.ny() && !(g.yc(jc) > g.obstacle()->y_corner)) ++jc;
  if (ic < 1 || ic + 1 >= g.nx() || jc + 1 >= g.ny()) return;
  const double gam = sys.gamma();
  const StateVector ref = sys.cons_to_prim(u.get(ic - 1, jc));
  const double entropy = ref[3] / std::pow(ref[0], gam);
  const double enthalpy =
      0.5 * (ref[1] * ref[1] + ref[2] * ref[2]) + gam / (gam - 1.0) * ref[3] / ref[0];
  StateVector w;
  for (int j = jc; j <= jc + 1; ++j) {
    for (int i = ic; i <= ic + 1; ++i) {
      if (!sys.try_cons_to_prim(u.get(i, j), w)) continue;
      const double rho = std::pow(w[3] / entropy, 1.0 / gam);
      const double q2 = 2.0 * (enthalpy - gam / (gam - 1.0) * w[3] / rho);
      const double speed = std::sqrt(std::max(q2, 0.0));
      const double now = std::hypot(w[1], w[2]);
      w[0] = rho;
      if (now > 0.0) {
        w[1] *= speed / now;
        w[2] *= speed / now;
      }
      u.set(i, j, sys.prim_to_cons(w));
    }
  }
}

RunResult run_problem(const ProblemSpec& spec, const RunConfig& config) {
  config.scheme.validate();
  config.integrator.validate();
  const SystemModel sys = spec.make_system();
  const Grid grid = make_grid(spec, config);
  const BoundaryConditions bc = spec.boundary_conditions(sys);
  bc.validate(grid);

  RunResult res;
  res.state = initial_state(spec, sys, grid);
  AfdScheme scheme(sys, config.scheme, grid);
  const RhsOperator rhs = [&](StateArray& u, double t, StateArray& out) {
    fill_ghosts(u, bc, sys, t);
    scheme.rhs(u, out, &res.diagnostics);
  };
  StageHook hook;
  if (spec.corner_fix) hook = [&](StateArray& u) { apply_corner_fix(u, sys); };

  const double t_end = config.t_end.value_or(spec.t_end);
  RkStepper stepper(grid, sys.n_components());
  double t = 0.0;
  try {
    while (t < t_end) {
      double dt = config.integrator.dt_override ? *config.integrator.dt_override
                                                : compute_dt(res.state, sys, config.integrator.cfl);
      if (t + dt >= t_end) dt = t_end - t;
      stepper.step(config.integrator.scheme, rhs, res.state, t, dt, hook);
      ++res.steps;
      t = (t + dt >= t_end) ? t_end : t + dt;
    }
  } catch (const DomainError& e) {
    throw DomainError(spec.name + " at t = " + num(t) + " (step " + std::to_string(res.steps) +
                      "): " + e.what());
  }
  fill_ghosts(res.state, bc, sys, t);
  res.t = t;

  auto& m = res.metadata;
  m = {{"problem", spec.name},
       {"system", std::string(sys.name())},
       {"gamma", num(sys.gamma())},
       {"order", std::to_string(config.scheme.order())},
       {"center_variant", variant_name(config.scheme.weno)},
       {"riemann", std::string(riemann_solver_name(config.scheme.riemann))},
       {"characteristic_center", config.scheme.characteristic_center ? "on" : "off"},
       {"characteristic_boundary", config.scheme.characteristic_boundary ? "on" : "off"},
       {"flattener", config.scheme.flattener ? "on" : "off"},
       {"kappa", num(config.scheme.kappa)},
       {"rk", std::string(rk_scheme_name(config.integrator.scheme))},
       {"cfl", num(config.integrator.cfl)},
       {"dt", config.integrator.dt_override ? num(*config.integrator.dt_override) : "cfl"},
       {"mesh", mesh_label(grid.nx(), grid.ny())},
       {"t_end", num(t)},
       {"steps", std::to_string(res.steps)},
       {"fallback_states", std::to_string(res.diagnostics.fallback_states)},
       {"componentwise_zones", std::to_string(res.diagnostics.componentwise_zones)},
       {"max_eta", num(res.diagnostics.max_eta)}};
  if (config.integrator.dt_refinement_exponent > 0.0)
    m.emplace_back("dt_refinement_exponent", num(config.integrator.dt_refinement_exponent));
  return res;
}

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> reference) {
  if (numeric.size() != reference.size() || numeric.empty())
    throw UsageError("error norms need two non-empty fields of equal size");
  ErrorNorms e;
  for (std::size_t k = 0; k < numeric.size(); ++k) {
    const double d = std::abs(numeric[k] - reference[k]);
    e.l1 += d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 /= double(numeric.size());
  return e;
}

ErrorNorms solution_error(const StateArray& u, const SystemModel& sys, const ExactField& exact,
                          double t, int component) {
  if (!exact) throw UsageError("problem has no exact solution");
  const Grid& g = u.grid();
  std::vector<double> a, b;
  a.reserve(g.zones());
  b.reserve(g.zones());
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      a.push_back(sys.cons_to_prim(u.get(i, j))[component]);
      b.push_back(exact(g.xc(i), g.yc(j), t)[component]);
    }
  }
  return error_norms(a, b);
}

double observed_order(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

void accuracy_study_integrator(int order, TimeIntegratorConfig& integrator) {
  if (order <= 3) {
    integrator.scheme = RkScheme::ssp_rk3;
    integrator.dt_refinement_exponent = 1.0;
  } else {
    integrator.scheme = RkScheme::ssp_rk4;
    integrator.dt_refinement_exponent = order / 4.0;
  }
}

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& spec, const RunConfig& base,
                                              std::span<const int> meshes, Metadata* metadata) {
  if (!spec.exact) throw UsageError(spec.name + " has no exact solution");
  if (meshes.empty()) throw UsageError("convergence study needs at least one mesh");
  std::vector<ConvergenceRow> rows;
  double dt0 = 0.0;
  const SystemModel sys = spec.make_system();
  for (std::size_t k = 0; k < meshes.size(); ++k) {
    RunConfig c = base;
    c.nx = meshes[k];
    c.ny = spec.two_d ? meshes[k] : 1;
    const double expo = base.integrator.dt_refinement_exponent;
    if (expo > 0.0) {
      if (k == 0) {
        const Grid g0 = make_grid(spec, c);
        dt0 = base.integrator.dt_override.value_or(
            compute_dt(initial_state(spec, sys, g0), sys, base.integrator.cfl));
      }
      // Mesh ratio relative to the coarsest, so non-doubling lists still scale.
      const double levels = std::log2(double(meshes[k]) / meshes[0]);
      c.integrator.dt_override = dt0 * std::pow(0.5, levels * expo);
    }
    const RunResult r = run_problem(spec, c);
    const ErrorNorms e = solution_error(r.state, sys, spec.exact, r.t, 0);
    ConvergenceRow row;
    row.nx = r.state.grid().nx();
    row.ny = r.state.grid().ny();
    row.l1_error = e.l1;
    row.linf_error = e.linf;
    if (!rows.empty()) {
      const double ratio = std::log2(double(row.nx) / rows.back().nx);
      row.l1_order = observed_order(rows.back().l1_error, e.l1) / ratio;
      row.linf_order = observed_order(rows.back().linf_error, e.linf) / ratio;
    }
    rows.push_back(row);
    if (metadata && k == 0) *metadata = r.metadata;
  }
  return rows;
}

void write_solution_csv(std::ostream& os, const StateArray& u, const SystemModel& sys) {
  const Grid& g = u.grid();
  os << "x";
  if (g.is_2d()) os << ",y";
  for (auto name : sys.primitive_names()) os << ',' << name;
  os << '\n' << std::setprecision(15);
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      os << g.xc(i);
      if (g.is_2d()) os << ',' << g.yc(j);
      StateVector w;
      if (g.solid(i, j)) w = StateVector::Constant(sys.n_components(), std::nan(""));
      else w = sys.cons_to_prim(u.get(i, j));
      for (Eigen::Index k = 0; k < w.size(); ++k) os << ',' << w[k];
      os << '\n';
    }
  }
}

void write_solution_csv(const std::string& path, const StateArray& u, const SystemModel& sys) {
  auto os = open_out(path);
  write_solution_csv(os, u, sys);
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows) {
  os << "mesh,l1_error,l1_order,linf_error,linf_order\n";
  for (const auto& r : rows) {
    os << mesh_label(r.nx, r.ny) << ',' << std::scientific << std::setprecision(5) << r.l1_error
       << ',' << std::fixed << std::setprecision(2);
    if (r.l1_order) os << *r.l1_order;
    os << ',' << std::scientific << std::setprecision(5) << r.linf_error << ',' << std::fixed
       << std::setprecision(2);
    if (r.linf_order) os << *r.linf_order;
    os << '\n' << std::defaultfloat;
  }
}

void write_convergence_csv(const std::string& path, std::span<const ConvergenceRow> rows) {
  auto os = open_out(path);
  write_convergence_csv(os, rows);
}

void write_metadata(std::ostream& os, const Metadata& metadata) {
  for (const auto& [k, v] : metadata) os << k << " = " << v << '\n';
}

std::string snapshot_name(const std::string& problem, int order, int nx, int ny) {
  return problem + "_" + std::to_string(order) + "_" + mesh_label(nx, ny) + ".csv";
}

}  // namespace afdweno
