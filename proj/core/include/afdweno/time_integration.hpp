#pragma once

// SSP Runge-Kutta drivers and CFL timestep control.

#include "afdweno/mesh.hpp"
#include "afdweno/systems.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace afdweno {

enum class RkScheme { ssp_rk3, ssp_rk4 };

RkScheme parse_rk_scheme(std::string_view name);
std::string_view rk_scheme_name(RkScheme s);

struct TimeIntegratorConfig {
  RkScheme scheme = RkScheme::ssp_rk3;
  double cfl = 0.8;
  std::optional<double> dt_override;
  /// Accuracy-study mode: dt on refinement level k is dt0 * (1/2)^(k * exponent).
  double dt_refinement_exponent = 0.0;

  void validate() const;
};

/// Fills the ghosts of `u` for time t and writes dU/dt into `out`.
using RhsOperator = std::function<void(StateArray& u, double t, StateArray& out)>;
/// Applied to the state after every stage.
using StageHook = std::function<void(StateArray& u)>;

/// Shu-Osher SSP-RK3 or Spiteri-Ruuth SSP-RK(5,4), keeping stage buffers.
class RkStepper {
 public:
  RkStepper(const Grid& grid, int n_components);
  void step(RkScheme scheme, const RhsOperator& rhs, StateArray& u, double t, double dt,
            const StageHook& hook = {});

 private:
  StateArray u1_, u2_, u3_, u4_, l_, l3_;
};

void ssp_rk_step(RkScheme scheme, const RhsOperator& rhs, StateArray& u, double t, double dt,
                 const StageHook& hook = {});

/// Largest |lambda| over interior fluid zones, per direction.
std::pair<double, double> max_wave_speeds(const StateArray& u, const SystemModel& sys);

/// 1D: cfl dx / max|lambda|; 2D: cfl / (max|lambda_x|/dx + max|lambda_y|/dy).
double compute_dt(const StateArray& u, const SystemModel& sys, double cfl);

}  // namespace afdweno
