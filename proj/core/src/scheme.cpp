#include "afdweno/scheme.hpp"

#include "afdweno/correction.hpp"
#include "afdweno/weno_boundary.hpp"

#include <algorithm>
#include <string>

namespace afdweno {

void SchemeConfig::validate() const {
  weno.validate();
  if (!(kappa > 0.0)) throw UsageError("flattener kappa must be positive");
}

int required_ghost(int order) {
  switch (order) {
    case 3:
    case 5: return 4;
    case 7: return 6;
    case 9: return 8;
    default: throw UsageError("unsupported scheme order " + std::to_string(order));
  }
}

namespace {

std::string zone_label(const Grid& g, int i, int j) {
  return g.is_2d() ? "zone (" + std::to_string(i) + ", " + std::to_string(j) + ")"
                   : "zone " + std::to_string(i);
}

// Odd-derivative stack of the boundary interpolant for one scalar window.
BoundaryDerivativeStack boundary_stack(const WenoConfig& cfg, const double* window, int size) {
  return boundary_derivatives(interp_boundary(cfg, {window, std::size_t(size)}), cfg.order);
}

}  // namespace

AfdScheme::AfdScheme(const SystemModel& sys, const SchemeConfig& config, const Grid& grid)
    : sys_(sys), config_(config), grid_(grid), prim_(grid, sys.n_components()) {
  config_.validate();
  const int need = required_ghost(config_.order());
  if (grid.ghost() < need)
    throw UsageError("order " + std::to_string(config_.order()) + " needs " +
                     std::to_string(need) + " ghost zones, grid has " +
                     std::to_string(grid.ghost()));
  const int len = std::max(grid.sx(), grid.sy());
  for (auto* v : {&pu_, &pw_, &ul_, &ur_, &wv_, &fnum_})
    v->assign(len, StateVector::Zero(sys.n_components()));
  peta_.assign(len, 0.0);
  psolid_.assign(len, 0);
}

void AfdScheme::compute_primitives(const StateArray& u) {
  const int g = grid_.ghost();
  const int j_lo = grid_.is_2d() ? -g : 0, j_hi = grid_.is_2d() ? grid_.ny() + g : 1;
  StateVector w;
  for (int j = j_lo; j < j_hi; ++j) {
    for (int i = -g; i < grid_.nx() + g; ++i) {
      if (!sys_.try_cons_to_prim(u.get(i, j), w))
        throw DomainError(std::string(sys_.name()) + ": inadmissible state in " +
                          zone_label(grid_, i, j) + ": " + describe_state(u.get(i, j)));
      prim_.set(i, j, w);
    }
  }
}

void AfdScheme::rhs(const StateArray& u, StateArray& out, RhsDiagnostics* diag) {
  if (u.n_components() != sys_.n_components() || out.n_components() != sys_.n_components())
    throw UsageError("state arrays do not match the system");
  compute_primitives(u);
  if (config_.flattener) {
    eta_ = flattener_eta(prim_, sys_, config_.kappa);
    flattener_spread(eta_, prim_, sys_);
    if (diag) diag->max_eta = std::max(diag->max_eta, eta_.max());
  }
  out.fill(0.0);
  // Pencils read `u` through pu_; keep a pointer for the sweep.
  current_ = &u;
  for (int j = 0; j < grid_.ny(); ++j) sweep(Direction::x, j, out, diag);
  if (grid_.is_2d())
    for (int i = 0; i < grid_.nx(); ++i) sweep(Direction::y, i, out, diag);
  current_ = nullptr;
}

void AfdScheme::sweep(Direction d, int line, StateArray& out, RhsDiagnostics* diag) {
  const StateArray& u = *current_;
  const bool dx = d == Direction::x;
  const int n = dx ? grid_.nx() : grid_.ny();
  const int g = grid_.ghost();
  const int len = n + 2 * g;
  const int nc = sys_.n_components();
  const double h = dx ? grid_.dx() : grid_.dy();
  auto zone = [&](int p) { return dx ? std::pair{p - g, line} : std::pair{line, p - g}; };

  bool any_solid = false, any_fluid = false;
  for (int p = 0; p < len; ++p) {
    const auto [i, j] = zone(p);
    pu_[p] = u.get(i, j);
    pw_[p] = prim_.get(i, j);
    psolid_[p] = grid_.solid(i, j);
    any_solid |= bool(psolid_[p]);
    if (p >= g && p < g + n) any_fluid |= !psolid_[p];
    peta_[p] = (config_.flattener && p >= g - 1 && p <= g + n) ? eta_(i, j) : 0.0;
  }
  if (!any_fluid) return;
  if (any_solid) {
    // Solid zones mirror the adjacent fluid across the wall face.
    for (int a = 0; a < len;) {
      if (!psolid_[a]) {
        ++a;
        continue;
      }
      int b = a;
      while (b + 1 < len && psolid_[b + 1]) ++b;
      const bool left_fluid = a > 0, right_fluid = b + 1 < len;
      for (int k = a; k <= b; ++k) {
        int src;
        if (left_fluid && (!right_fluid || k - a <= b - k)) {
          src = 2 * a - 1 - k;
          if (src < 0 || psolid_[src]) src = a - 1;
        } else {
          src = 2 * b + 1 - k;
          if (src >= len || psolid_[src]) src = b + 1;
        }
        if (!left_fluid && !right_fluid) continue;
        pu_[k] = sys_.reflect(pu_[src], d);
        pw_[k] = sys_.reflect(pw_[src], d);
        peta_[k] = 0.0;
      }
      a = b + 1;
    }
  }

  const WenoConfig& wc = config_.weno;
  const int hw = center_half_width(wc.order);
  const BoundaryWindow bw = boundary_window(wc.order);
  const int zlo = g - 1 + bw.lo, zhi = g + n - 1 + bw.hi;

  double win[9];
  StateVector left(nc), right(nc), du(nc);
  Eigen::Matrix<double, kMaxComponents, 9> proj(nc, 2 * hw + 1);
  for (int z = zlo; z <= zhi; ++z) {
    bool characteristic = config_.characteristic_center;
    Eigensystem es;
    if (characteristic) {
      try {
        es = sys_.eigensystem_prim(pw_[z], d);
      } catch (const DomainError&) {
        characteristic = false;
        if (diag) ++diag->componentwise_zones;
      }
    }
    for (int j = 0; j < 2 * hw + 1; ++j)
      proj.col(j) = characteristic ? StateVector(es.left * pu_[z - hw + j]) : pu_[z - hw + j];
    for (int k = 0; k < nc; ++k) {
      for (int j = 0; j < 2 * hw + 1; ++j) win[j] = proj(k, j);
      const CenterInterpolation ci = interp_center(wc, {win, std::size_t(2 * hw + 1)});
      left[k] = ci.u_left;
      right[k] = ci.u_right;
      du[k] = ci.du_center;
    }
    if (characteristic) {
      ul_[z] = es.right * left;
      ur_[z] = es.right * right;
      wv_[z] = es.right * es.lambda.cwiseProduct(du);
    } else {
      ul_[z] = left;
      ur_[z] = right;
      wv_[z] = sys_.jacobian_vector_prim(pw_[z], du, d);
    }
  }

  const CorrectionCoefficients cc = correction_coefficients(wc.order);
  double coef[4];
  for (int k = 0; k < 4; ++k) coef[k] = cc.c[k].value();
  const int bsize = bw.size();
  StateVector wl, wr;
  StateVector d1(nc), d3(nc), d5(nc), d7(nc);
  for (int f = g - 1; f <= g + n - 1; ++f) {
    const int a = f, b = f + 1;
    if (psolid_[a] && psolid_[b]) {
      fnum_[f].setZero();
      continue;
    }
    const double eta = std::max(peta_[a], peta_[b]);
    StateVector u_l = ur_[a], u_r = ul_[b];
    if (eta > 0.0) {
      u_l = (1.0 - eta) * u_l + eta * pu_[a];
      u_r = (1.0 - eta) * u_r + eta * pu_[b];
    }
    auto recover = [&](StateVector& us, StateVector& ws, int cell) {
      if (sys_.try_cons_to_prim(us, ws, pw_[cell][3])) return;
      if (!config_.positivity_fallback) {
        const auto [i, j] = zone(cell);
        throw DomainError(std::string(sys_.name()) + ": inadmissible interface state next to " +
                          zone_label(grid_, i, j) + ": " + describe_state(us));
      }
      us = pu_[cell];
      ws = pw_[cell];
      if (diag) ++diag->fallback_states;
    };
    recover(u_l, wl, a);
    recover(u_r, wr, b);
    const RiemannResult rr = riemann_flux(config_.riemann, sys_, wl, u_l, wr, u_r, d);

    bool characteristic = config_.characteristic_boundary;
    Eigensystem es;
    if (characteristic) {
      StateVector ws;
      characteristic = sys_.try_cons_to_prim(rr.u_star, ws);
      if (characteristic) {
        try {
          es = sys_.eigensystem_prim(ws, d);
        } catch (const DomainError&) {
          characteristic = false;
        }
      }
    }
    for (int k = 0; k < nc; ++k) {
      for (int j = 0; j < bsize; ++j)
        win[j] = characteristic ? es.left.row(k).dot(wv_[f + bw.lo + j]) : wv_[f + bw.lo + j][k];
      const BoundaryDerivativeStack s = boundary_stack(wc, win, bsize);
      d1[k] = s.d1;
      d3[k] = s.d3;
      d5[k] = s.d5;
      d7[k] = s.d7;
    }
    StateVector corr = coef[0] * d1 + coef[1] * d3 + coef[2] * d5 + coef[3] * d7;
    if (characteristic) corr = es.right * corr;
    fnum_[f] = rr.flux + (1.0 - eta) * corr;
  }

  const double inv_h = 1.0 / h;
  for (int p = g; p < g + n; ++p) {
    if (psolid_[p]) continue;
    const auto [i, j] = zone(p);
    Eigen::Map<StateVector> o(out.at(i, j), nc);
    o -= (fnum_[p] - fnum_[p - 1]) * inv_h;
  }
}

void semidiscrete_rhs(const StateArray& u, const SystemModel& sys, const SchemeConfig& config,
                      StateArray& out) {
  AfdScheme scheme(sys, config, u.grid());
  scheme.rhs(u, out);
}

}  // namespace afdweno
