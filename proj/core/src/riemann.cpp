#include "afdweno/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace afdweno {

RiemannSolver parse_riemann_solver(std::string_view name) {
  if (name == "llf") return RiemannSolver::llf;
  if (name == "hll") return RiemannSolver::hll;
  throw UsageError("unknown Riemann solver '" + std::string(name) + "' (expected llf or hll)");
}

std::string_view riemann_solver_name(RiemannSolver s) {
  return s == RiemannSolver::llf ? "llf" : "hll";
}

namespace {

RiemannResult llf_impl(const StateVector& ul, const StateVector& ur, const StateVector& fl,
                       const StateVector& fr, double sl, double sr) {
  const double smax = std::max(std::abs(sl), std::abs(sr));
  RiemannResult r;
  r.flux = 0.5 * (fl + fr) - 0.5 * smax * (ur - ul);
  r.s_left = sl;
  r.s_right = sr;
  r.u_star = 0.5 * (ul + ur);
  return r;
}

RiemannResult hll_impl(const StateVector& ul, const StateVector& ur, const StateVector& fl,
                       const StateVector& fr, double sl, double sr) {
  if (sr - sl < 1e-12) return llf_impl(ul, ur, fl, fr, sl, sr);
  RiemannResult r;
  r.s_left = sl;
  r.s_right = sr;
  const double inv = 1.0 / (sr - sl);
  r.u_star = (sr * ur - sl * ul - (fr - fl)) * inv;
  if (sl >= 0.0) r.flux = fl;
  else if (sr <= 0.0) r.flux = fr;
  else r.flux = (sr * fl - sl * fr + sl * sr * (ur - ul)) * inv;
  return r;
}

}  // namespace

RiemannResult riemann_flux(RiemannSolver solver, const SystemModel& sys,
                           const StateVector& w_left, const StateVector& u_left,
                           const StateVector& w_right, const StateVector& u_right, Direction d) {
  const auto [l0, l1] = sys.eigen_range_prim(w_left, d);
  const auto [r0, r1] = sys.eigen_range_prim(w_right, d);
  const double sl = std::min(l0, r0), sr = std::max(l1, r1);
  const StateVector fl = sys.flux_prim(w_left, u_left, d);
  const StateVector fr = sys.flux_prim(w_right, u_right, d);
  return solver == RiemannSolver::llf ? llf_impl(u_left, u_right, fl, fr, sl, sr)
                                      : hll_impl(u_left, u_right, fl, fr, sl, sr);
}

RiemannResult llf_flux(const SystemModel& sys, const StateVector& u_left,
                       const StateVector& u_right, Direction d) {
  return riemann_flux(RiemannSolver::llf, sys, sys.cons_to_prim(u_left), u_left,
                      sys.cons_to_prim(u_right), u_right, d);
}

RiemannResult hll_flux(const SystemModel& sys, const StateVector& u_left,
                       const StateVector& u_right, Direction d) {
  return riemann_flux(RiemannSolver::hll, sys, sys.cons_to_prim(u_left), u_left,
                      sys.cons_to_prim(u_right), u_right, d);
}

}  // namespace afdweno
