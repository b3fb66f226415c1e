#pragma once

// Uniform 1D/2D grids with ghost zones, state storage, and boundary filling.

#include "afdweno/systems.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace afdweno {

/// Solid block occupying x >= x_corner, y <= y_corner (the forward-facing step).
struct StepObstacle {
  double x_corner = 0.0;
  double y_corner = 0.0;
};

class Grid {
 public:
  Grid() = default;
  /// 1D grid (ny = 1).
  Grid(int nx, double x_min, double x_max, int ghost);
  Grid(int nx, int ny, double x_min, double x_max, double y_min, double y_max, int ghost);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghost() const { return ghost_; }
  bool is_2d() const { return ny_ > 1; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double y_min() const { return y_min_; }
  double y_max() const { return y_max_; }
  double dx() const { return (x_max_ - x_min_) / nx_; }
  double dy() const { return is_2d() ? (y_max_ - y_min_) / ny_ : 1.0; }
  /// Zone centres; i, j may address ghost zones (negative or >= n).
  double xc(int i) const { return x_min_ + (i + 0.5) * dx(); }
  double yc(int j) const { return is_2d() ? y_min_ + (j + 0.5) * dy() : 0.0; }
  int zones() const { return nx_ * ny_; }
  /// Storage extents including ghosts.
  int sx() const { return nx_ + 2 * ghost_; }
  int sy() const { return is_2d() ? ny_ + 2 * ghost_ : 1; }

  void set_obstacle(const StepObstacle& step) { obstacle_ = step; }
  const std::optional<StepObstacle>& obstacle() const { return obstacle_; }
  bool solid(int i, int j) const {
    return obstacle_ && xc(i) > obstacle_->x_corner && yc(j) < obstacle_->y_corner;
  }

 private:
  int nx_ = 0, ny_ = 1, ghost_ = 0;
  double x_min_ = 0.0, x_max_ = 1.0, y_min_ = 0.0, y_max_ = 1.0;
  std::optional<StepObstacle> obstacle_;
};

/// Conserved (or any per-zone vector) field stored zone-major with ghosts.
class StateArray {
 public:
  StateArray() = default;
  StateArray(const Grid& grid, int n_components);

  const Grid& grid() const { return grid_; }
  int n_components() const { return nc_; }

  double* at(int i, int j = 0) { return data_.data() + offset(i, j); }
  const double* at(int i, int j = 0) const { return data_.data() + offset(i, j); }
  StateVector get(int i, int j = 0) const {
    return Eigen::Map<const StateVector>(at(i, j), nc_);
  }
  void set(int i, int j, const StateVector& v) {
    Eigen::Map<StateVector>(at(i, j), nc_) = v;
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }
  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  /// Sum of each component over interior zones.
  StateVector interior_sum() const;

 private:
  std::size_t offset(int i, int j) const {
    const int g = grid_.ghost();
    const int jj = grid_.is_2d() ? j + g : 0;
    return (std::size_t(jj) * grid_.sx() + std::size_t(i + g)) * nc_;
  }
  Grid grid_;
  int nc_ = 0;
  std::vector<double> data_;
};

enum class BcKind { periodic, outflow, reflective, dirichlet, dmr_bottom, dmr_top };

/// One domain edge. `state` is the Dirichlet (or DMR post-shock) conserved
/// state; `state_alt` is the DMR pre-shock state. The DMR shock trace sits at
/// x_s(y, t) = x0 + y / sqrt(3) + speed * t.
struct EdgeBc {
  BcKind kind = BcKind::outflow;
  StateVector state;
  StateVector state_alt;
  double x0 = 0.0;
  double speed = 0.0;
};

struct BoundaryConditions {
  EdgeBc left, right, bottom, top;

  static BoundaryConditions all(BcKind kind);
  void validate(const Grid& grid) const;
};

/// Fills every ghost zone. x edges first over interior rows, then y edges
/// over the full padded width so corner ghosts are defined.
void fill_ghosts(StateArray& u, const BoundaryConditions& bc, const SystemModel& sys, double t);

}  // namespace afdweno
