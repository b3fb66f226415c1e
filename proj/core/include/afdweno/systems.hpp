#pragma once

// Euler, special-relativistic hydrodynamics and the ten-moment Gaussian
// closure behind one value-type interface.
//
// Conserved variables:
//   euler       (rho, rho vx, rho vy, E)
//   rhd         (D, Mx, My, E), c = 1
//   ten_moment  (rho, rho vx, rho vy, Exx, Exy, Eyy)
// Primitive variables:
//   euler, rhd  (rho, vx, vy, p)
//   ten_moment  (rho, vx, vy, pxx, pxy, pyy)

#include "afdweno/types.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace afdweno {

enum class SystemKind { euler, rhd, ten_moment };

struct Eigensystem {
  StateVector lambda;  // ascending
  StateMatrix right;   // columns are right eigenvectors
  StateMatrix left;    // rows are left eigenvectors, left * right = I
};

class SystemModel {
 public:
  static SystemModel euler(double gamma = 1.4);
  static SystemModel rhd(double gamma = 5.0 / 3.0);
  static SystemModel ten_moment();

  SystemKind kind() const { return kind_; }
  int n_components() const { return kind_ == SystemKind::ten_moment ? 6 : 4; }
  /// Adiabatic index; unused by the ten-moment closure.
  double gamma() const { return gamma_; }
  std::string_view name() const;
  std::span<const std::string_view> primitive_names() const;

  StateVector prim_to_cons(const StateVector& w) const;
  /// Throws DomainError for an inadmissible state.
  StateVector cons_to_prim(const StateVector& u) const;
  /// Non-throwing variant. `p_guess` seeds the RHD pressure iteration when
  /// positive. Returns false if u is inadmissible.
  bool try_cons_to_prim(const StateVector& u, StateVector& w, double p_guess = -1.0) const;
  bool admissible_prim(const StateVector& w) const;

  StateVector flux(const StateVector& u, Direction d) const;
  /// Flux from a matching (w, u) pair; avoids a second primitive recovery.
  StateVector flux_prim(const StateVector& w, const StateVector& u, Direction d) const;

  /// (dF/dU) v. Euler is analytic, RHD and ten-moment use exact forward-mode
  /// differentiation of the primitive maps.
  StateVector jacobian_vector(const StateVector& u, const StateVector& v, Direction d) const;
  StateVector jacobian_vector_prim(const StateVector& w, const StateVector& v, Direction d) const;

  /// (lambda_min, lambda_max) of the flux Jacobian at primitive state w.
  std::pair<double, double> eigen_range_prim(const StateVector& w, Direction d) const;
  /// Davis estimate: min/max of the extreme eigenvalues over both states.
  std::pair<double, double> signal_speeds(const StateVector& u_left, const StateVector& u_right,
                                          Direction d) const;

  Eigensystem eigensystem(const StateVector& u, Direction d) const;
  Eigensystem eigensystem_prim(const StateVector& w, Direction d) const;

  /// Sound-like speed used by the flattener.
  double sound_speed_prim(const StateVector& w) const;
  /// Scalar pressure used by the flattener spread rule.
  double pressure_scalar_prim(const StateVector& w) const;

  /// Mirror state across a wall normal to `normal`.
  StateVector reflect(const StateVector& u, Direction normal) const;

  /// Swap x and y roles of a state or flux vector (an involution).
  void permute_xy(StateVector& v) const;

 private:
  SystemModel(SystemKind kind, double gamma) : kind_(kind), gamma_(gamma) {}
  Eigensystem eigensystem_x(const StateVector& w) const;
  StateVector flux_prim_x(const StateVector& w, const StateVector& u) const;

  SystemKind kind_;
  double gamma_;
};

std::string describe_state(const StateVector& v);

}  // namespace afdweno
