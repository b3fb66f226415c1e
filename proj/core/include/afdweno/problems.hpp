#pragma once

// Registry of the test problems: initial data, boundary conditions, stop
// times and, where one exists, the exact solution.

#include "afdweno/mesh.hpp"
#include "afdweno/riemann.hpp"
#include "afdweno/systems.hpp"
#include "afdweno/time_integration.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace afdweno {

/// Primitive state as a function of position (and time for exact solutions).
using PrimitiveField = std::function<StateVector(double x, double y)>;
using ExactField = std::function<StateVector(double x, double y, double t)>;

/// Boundary edge described with a primitive state; converted at run time.
struct EdgeSpec {
  BcKind kind = BcKind::outflow;
  StateVector state;      // primitive (dirichlet, DMR post-shock)
  StateVector state_alt;  // primitive (DMR pre-shock)
  double x0 = 0.0;
  double speed = 0.0;
};

struct ProblemSpec {
  std::string name;
  std::string description;
  SystemKind system = SystemKind::euler;
  double gamma = 1.4;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  bool two_d = false;
  PrimitiveField initial;
  ExactField exact;  // empty when no exact solution exists
  EdgeSpec left, right, bottom, top;
  double t_end = 0.0;
  int default_nx = 200;
  int default_ny = 1;
  int default_order = 5;
  RiemannSolver riemann = RiemannSolver::llf;
  double cfl = 0.8;
  RkScheme rk = RkScheme::ssp_rk3;
  bool flattener = false;
  double kappa = 0.3;
  std::optional<StepObstacle> obstacle;
  bool corner_fix = false;

  SystemModel make_system() const;
  BoundaryConditions boundary_conditions(const SystemModel& sys) const;
};

const std::vector<ProblemSpec>& problem_registry();
/// Throws UsageError listing the known names if `name` is not registered.
const ProblemSpec& find_problem(const std::string& name);

}  // namespace afdweno
