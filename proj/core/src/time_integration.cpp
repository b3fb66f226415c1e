#include "afdweno/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace afdweno {

RkScheme parse_rk_scheme(std::string_view name) {
  if (name == "rk3" || name == "ssp_rk3") return RkScheme::ssp_rk3;
  if (name == "rk4" || name == "ssp_rk4") return RkScheme::ssp_rk4;
  throw UsageError("unknown time integrator '" + std::string(name) + "' (expected rk3 or rk4)");
}

std::string_view rk_scheme_name(RkScheme s) { return s == RkScheme::ssp_rk3 ? "rk3" : "rk4"; }

void TimeIntegratorConfig::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw UsageError("cfl must lie in (0,1)");
  if (dt_override && !(*dt_override > 0.0)) throw UsageError("dt override must be positive");
}

RkStepper::RkStepper(const Grid& grid, int nc)
    : u1_(grid, nc), u2_(grid, nc), u3_(grid, nc), u4_(grid, nc), l_(grid, nc), l3_(grid, nc) {}

namespace {

// dst = sum_k coef_k * src_k over the whole storage.
template <std::size_t N>
void combine(StateArray& dst, const std::array<double, N>& coef,
             const std::array<const StateArray*, N>& src) {
  auto& d = dst.raw();
  for (std::size_t i = 0; i < d.size(); ++i) {
    double v = 0.0;
    for (std::size_t k = 0; k < N; ++k) v += coef[k] * src[k]->raw()[i];
    d[i] = v;
  }
}

}  // namespace

void RkStepper::step(RkScheme scheme, const RhsOperator& rhs, StateArray& u, double t, double dt,
                     const StageHook& hook) {
  if (!(dt > 0.0)) throw UsageError("timestep must be positive");
  auto post = [&](StateArray& s) {
    if (hook) hook(s);
  };
  if (scheme == RkScheme::ssp_rk3) {
    rhs(u, t, l_);
    combine<2>(u1_, {1.0, dt}, {&u, &l_});
    post(u1_);
    rhs(u1_, t + dt, l_);
    combine<3>(u2_, {0.75, 0.25, 0.25 * dt}, {&u, &u1_, &l_});
    post(u2_);
    rhs(u2_, t + 0.5 * dt, l_);
    combine<3>(u, {1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0 * dt}, {&u, &u2_, &l_});
    post(u);
    return;
  }
  // Stage times follow from applying the same combinations to t' = 1.
  rhs(u, t, l_);
  combine<2>(u1_, {1.0, 0.391752226571890 * dt}, {&u, &l_});
  post(u1_);
  const double t1 = t + 0.391752226571890 * dt;
  rhs(u1_, t1, l_);
  combine<3>(u2_, {0.444370493651235, 0.555629506348765, 0.368410593050371 * dt},
             {&u, &u1_, &l_});
  post(u2_);
  const double t2 = 0.444370493651235 * t + 0.555629506348765 * t1 + 0.368410593050371 * dt;
  rhs(u2_, t2, l_);
  combine<3>(u3_, {0.620101851488403, 0.379898148511597, 0.251891774271694 * dt},
             {&u, &u2_, &l_});
  post(u3_);
  const double t3 = 0.620101851488403 * t + 0.379898148511597 * t2 + 0.251891774271694 * dt;
  rhs(u3_, t3, l3_);
  combine<3>(u4_, {0.178079954393132, 0.821920045606868, 0.544974750228521 * dt},
             {&u, &u3_, &l3_});
  post(u4_);
  const double t4 = 0.178079954393132 * t + 0.821920045606868 * t3 + 0.544974750228521 * dt;
  rhs(u4_, t4, l_);
  combine<5>(u,
             {0.517231671970585, 0.096059710526147, 0.063692468666290 * dt, 0.386708617503269,
              0.226007483236906 * dt},
             {&u2_, &u3_, &l3_, &u4_, &l_});
  post(u);
}

void ssp_rk_step(RkScheme scheme, const RhsOperator& rhs, StateArray& u, double t, double dt,
                 const StageHook& hook) {
  RkStepper stepper(u.grid(), u.n_components());
  stepper.step(scheme, rhs, u, t, dt, hook);
}

std::pair<double, double> max_wave_speeds(const StateArray& u, const SystemModel& sys) {
  const Grid& g = u.grid();
  double sx = 0.0, sy = 0.0;
  StateVector w;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      if (g.solid(i, j)) continue;
      if (!sys.try_cons_to_prim(u.get(i, j), w))
        throw DomainError(std::string(sys.name()) + ": inadmissible state at zone (" +
                          std::to_string(i) + ", " + std::to_string(j) +
                          ") while computing the timestep");
      const auto [a, b] = sys.eigen_range_prim(w, Direction::x);
      sx = std::max({sx, std::abs(a), std::abs(b)});
      if (g.is_2d()) {
        const auto [c, d] = sys.eigen_range_prim(w, Direction::y);
        sy = std::max({sy, std::abs(c), std::abs(d)});
      }
    }
  }
  return {sx, sy};
}

double compute_dt(const StateArray& u, const SystemModel& sys, double cfl) {
  const Grid& g = u.grid();
  const auto [sx, sy] = max_wave_speeds(u, sys);
  const double rate = sx / g.dx() + (g.is_2d() ? sy / g.dy() : 0.0);
  if (!(rate > 0.0)) throw DomainError("maximum signal speed is zero; timestep undefined");
  return cfl / rate;
}

}  // namespace afdweno
