#include "afdweno/systems.hpp"

#include "system_impl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace afdweno {

namespace {

constexpr std::array<std::string_view, 4> kHydroNames = {"rho", "vx", "vy", "p"};
constexpr std::array<std::string_view, 6> kTenMomentNames = {"rho", "vx",  "vy",
                                                             "pxx", "pxy", "pyy"};

}  // namespace

std::string describe_state(const StateVector& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ")";
  return os.str();
}

SystemModel SystemModel::euler(double gamma) {
  if (!(gamma > 1.0)) throw UsageError("Euler adiabatic index must exceed 1");
  return SystemModel(SystemKind::euler, gamma);
}

SystemModel SystemModel::rhd(double gamma) {
  if (!(gamma > 1.0 && gamma <= 2.0)) throw UsageError("RHD adiabatic index must lie in (1,2]");
  return SystemModel(SystemKind::rhd, gamma);
}

SystemModel SystemModel::ten_moment() { return SystemModel(SystemKind::ten_moment, 3.0); }

std::string_view SystemModel::name() const {
  switch (kind_) {
    case SystemKind::euler: return "euler";
    case SystemKind::rhd: return "rhd";
    case SystemKind::ten_moment: return "ten_moment";
  }
  return "";
}

std::span<const std::string_view> SystemModel::primitive_names() const {
  if (kind_ == SystemKind::ten_moment) return kTenMomentNames;
  return kHydroNames;
}

void SystemModel::permute_xy(StateVector& v) const {
  std::swap(v[1], v[2]);
  if (kind_ == SystemKind::ten_moment) std::swap(v[3], v[5]);
}

StateVector SystemModel::prim_to_cons(const StateVector& w) const {
  if (w.size() != n_components()) throw UsageError("primitive vector has wrong size");
  if (!admissible_prim(w))
    throw DomainError(std::string(name()) + ": inadmissible primitive state " + describe_state(w));
  switch (kind_) {
    case SystemKind::euler: return detail::euler::prim_to_cons(w, gamma_);
    case SystemKind::rhd: return detail::rhd::prim_to_cons(w, gamma_);
    case SystemKind::ten_moment: return detail::ten_moment::prim_to_cons(w);
  }
  return {};
}

bool SystemModel::admissible_prim(const StateVector& w) const {
  switch (kind_) {
    case SystemKind::euler: return detail::euler::admissible(w);
    case SystemKind::rhd: return detail::rhd::admissible(w);
    case SystemKind::ten_moment: return detail::ten_moment::admissible(w);
  }
  return false;
}

bool SystemModel::try_cons_to_prim(const StateVector& u, StateVector& w, double p_guess) const {
  switch (kind_) {
    case SystemKind::euler: return detail::euler::cons_to_prim(u, gamma_, w);
    case SystemKind::rhd: return detail::rhd::cons_to_prim(u, gamma_, w, p_guess);
    case SystemKind::ten_moment: return detail::ten_moment::cons_to_prim(u, w);
  }
  return false;
}

StateVector SystemModel::cons_to_prim(const StateVector& u) const {
  if (u.size() != n_components()) throw UsageError("conserved vector has wrong size");
  StateVector w;
  if (!try_cons_to_prim(u, w))
    throw DomainError(std::string(name()) + ": inadmissible conserved state " + describe_state(u));
  return w;
}

StateVector SystemModel::flux_prim_x(const StateVector& w, const StateVector& u) const {
  switch (kind_) {
    case SystemKind::euler: return detail::euler::flux_x(w, u);
    case SystemKind::rhd: return detail::rhd::flux_x(w, u);
    case SystemKind::ten_moment: return detail::ten_moment::flux_x(w, u);
  }
  return {};
}

StateVector SystemModel::flux_prim(const StateVector& w, const StateVector& u,
                                   Direction d) const {
  if (d == Direction::x) return flux_prim_x(w, u);
  StateVector wp = w, up = u;
  permute_xy(wp);
  permute_xy(up);
  StateVector f = flux_prim_x(wp, up);
  permute_xy(f);
  return f;
}

StateVector SystemModel::flux(const StateVector& u, Direction d) const {
  return flux_prim(cons_to_prim(u), u, d);
}

StateVector SystemModel::jacobian_vector(const StateVector& u, const StateVector& v,
                                         Direction d) const {
  return jacobian_vector_prim(cons_to_prim(u), v, d);
}

StateVector SystemModel::jacobian_vector_prim(const StateVector& w_in, const StateVector& v,
                                              Direction d) const {
  if (v.size() != n_components()) throw UsageError("direction vector has wrong size");
  StateVector w = w_in;
  StateVector vp = v;
  if (d == Direction::y) {
    permute_xy(w);
    permute_xy(vp);
  }
  StateVector r;
  switch (kind_) {
    case SystemKind::euler: r = detail::euler::jacobian_vector_x(w, vp, gamma_); break;
    case SystemKind::rhd: r = detail::rhd::jacobian_vector_x(w, vp, gamma_); break;
    case SystemKind::ten_moment: r = detail::ten_moment::jacobian_vector_x(w, vp); break;
  }
  if (d == Direction::y) permute_xy(r);
  return r;
}

std::pair<double, double> SystemModel::eigen_range_prim(const StateVector& w,
                                                        Direction d) const {
  StateVector wp = w;
  if (d == Direction::y) permute_xy(wp);
  switch (kind_) {
    case SystemKind::euler: return detail::euler::eigen_range_x(wp, gamma_);
    case SystemKind::rhd: return detail::rhd::eigen_range_x(wp, gamma_);
    case SystemKind::ten_moment: return detail::ten_moment::eigen_range_x(wp);
  }
  return {0.0, 0.0};
}

std::pair<double, double> SystemModel::signal_speeds(const StateVector& u_left,
                                                     const StateVector& u_right,
                                                     Direction d) const {
  const auto [l0, l1] = eigen_range_prim(cons_to_prim(u_left), d);
  const auto [r0, r1] = eigen_range_prim(cons_to_prim(u_right), d);
  return {std::min(l0, r0), std::max(l1, r1)};
}

Eigensystem SystemModel::eigensystem_x(const StateVector& w) const {
  switch (kind_) {
    case SystemKind::euler: return detail::euler::eigensystem_x(w, gamma_);
    case SystemKind::rhd: return detail::rhd::eigensystem_x(w, gamma_);
    case SystemKind::ten_moment: return detail::ten_moment::eigensystem_x(w);
  }
  return {};
}

Eigensystem SystemModel::eigensystem_prim(const StateVector& w, Direction d) const {
  if (d == Direction::x) return eigensystem_x(w);
  StateVector wp = w;
  permute_xy(wp);
  Eigensystem es = eigensystem_x(wp);
  // R_y = P R_x, L_y = L_x P.
  std::swap_ranges(es.right.row(1).begin(), es.right.row(1).end(), es.right.row(2).begin());
  std::swap_ranges(es.left.col(1).begin(), es.left.col(1).end(), es.left.col(2).begin());
  if (kind_ == SystemKind::ten_moment) {
    std::swap_ranges(es.right.row(3).begin(), es.right.row(3).end(), es.right.row(5).begin());
    std::swap_ranges(es.left.col(3).begin(), es.left.col(3).end(), es.left.col(5).begin());
  }
  return es;
}

Eigensystem SystemModel::eigensystem(const StateVector& u, Direction d) const {
  return eigensystem_prim(cons_to_prim(u), d);
}

double SystemModel::sound_speed_prim(const StateVector& w) const {
  switch (kind_) {
    case SystemKind::euler: return detail::euler::sound_speed(w, gamma_);
    case SystemKind::rhd: return detail::rhd::sound_speed(w, gamma_);
    case SystemKind::ten_moment: return detail::ten_moment::sound_speed(w);
  }
  return 0.0;
}

double SystemModel::pressure_scalar_prim(const StateVector& w) const {
  if (kind_ == SystemKind::ten_moment) return detail::ten_moment::pressure_scalar(w);
  return w[3];
}

StateVector SystemModel::reflect(const StateVector& u, Direction normal) const {
  StateVector r = u;
  r[normal == Direction::x ? 1 : 2] = -r[normal == Direction::x ? 1 : 2];
  // The off-diagonal energy E_xy = rho vx vy + pxy is odd under either mirror.
  if (kind_ == SystemKind::ten_moment) r[4] = -r[4];
  return r;
}

}  // namespace afdweno
