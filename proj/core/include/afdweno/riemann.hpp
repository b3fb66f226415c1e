#pragma once

#include "afdweno/systems.hpp"

#include <string_view>

namespace afdweno {

enum class RiemannSolver { llf, hll };

RiemannSolver parse_riemann_solver(std::string_view name);
std::string_view riemann_solver_name(RiemannSolver s);

struct RiemannResult {
  StateVector flux;
  double s_left = 0.0;
  double s_right = 0.0;
  StateVector u_star;  // HLL intermediate state; the mean for LLF
};

RiemannResult llf_flux(const SystemModel& sys, const StateVector& u_left,
                       const StateVector& u_right, Direction d);
RiemannResult hll_flux(const SystemModel& sys, const StateVector& u_left,
                       const StateVector& u_right, Direction d);

/// Same fluxes from precomputed (primitive, conserved) pairs.
RiemannResult riemann_flux(RiemannSolver solver, const SystemModel& sys,
                           const StateVector& w_left, const StateVector& u_left,
                           const StateVector& w_right, const StateVector& u_right, Direction d);

}  // namespace afdweno
