#pragma once

// AFD-WENO semidiscrete operator.

#include "afdweno/flattener.hpp"
#include "afdweno/mesh.hpp"
#include "afdweno/riemann.hpp"
#include "afdweno/systems.hpp"
#include "afdweno/weno_center.hpp"

#include <vector>

namespace afdweno {

struct SchemeConfig {
  WenoConfig weno;
  RiemannSolver riemann = RiemannSolver::llf;
  /// Interpolate interface states in characteristic variables of the zone.
  bool characteristic_center = true;
  /// Interpolate w in the eigenspace of the resolved interface state instead
  /// of component by component.
  bool characteristic_boundary = false;
  bool flattener = false;
  double kappa = 0.3;
  /// Replace an inadmissible interpolated interface state by its zone value.
  bool positivity_fallback = true;

  int order() const { return weno.order; }
  void validate() const;
};

/// Ghost zones per side needed by the scheme: 4, 4, 6, 8 for orders 3/5/7/9.
int required_ghost(int order);

struct RhsDiagnostics {
  long fallback_states = 0;        // interface states replaced by zone values
  long componentwise_zones = 0;    // zones whose eigensystem was singular
  double max_eta = 0.0;
};

/// Reusable operator holding scratch storage for one grid and system.
class AfdScheme {
 public:
  AfdScheme(const SystemModel& sys, const SchemeConfig& config, const Grid& grid);

  const SchemeConfig& config() const { return config_; }
  const SystemModel& system() const { return sys_; }

  /// dU/dt for interior zones of `u`, whose ghosts must be filled. Solid zones
  /// get zero. Throws DomainError naming the zone on inadmissible data.
  void rhs(const StateArray& u, StateArray& out, RhsDiagnostics* diag = nullptr);

  /// Flattener field of the most recent rhs call (empty if disabled).
  const FlattenerField& last_eta() const { return eta_; }

 private:
  void compute_primitives(const StateArray& u);
  void sweep(Direction d, int line, StateArray& out, RhsDiagnostics* diag);

  SystemModel sys_;
  SchemeConfig config_;
  Grid grid_;
  StateArray prim_;
  FlattenerField eta_;
  const StateArray* current_ = nullptr;
  // Pencil scratch.
  std::vector<StateVector> pu_, pw_, ul_, ur_, wv_, fnum_;
  std::vector<double> peta_;
  std::vector<char> psolid_;
};

/// Convenience wrapper around AfdScheme.
void semidiscrete_rhs(const StateArray& u, const SystemModel& sys, const SchemeConfig& config,
                      StateArray& out);

}  // namespace afdweno
