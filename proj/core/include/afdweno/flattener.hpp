#pragma once

// Divergence-based shock flattener.

#include "afdweno/mesh.hpp"

#include <vector>

namespace afdweno {

class FlattenerField {
 public:
  FlattenerField() = default;
  explicit FlattenerField(const Grid& grid)
      : grid_(grid), eta_(std::size_t(grid.sx()) * grid.sy(), 0.0) {}

  const Grid& grid() const { return grid_; }
  double operator()(int i, int j = 0) const { return eta_[index(i, j)]; }
  double& operator()(int i, int j = 0) { return eta_[index(i, j)]; }
  bool empty() const { return eta_.empty(); }
  double max() const;

 private:
  std::size_t index(int i, int j) const {
    const int g = grid_.ghost();
    return std::size_t(grid_.is_2d() ? j + g : 0) * grid_.sx() + std::size_t(i + g);
  }
  Grid grid_;
  std::vector<double> eta_;
};

/// eta = min(1, max(0, |div v| max(dx,dy) / (kappa c_min) - 1)) on the interior
/// plus one ghost ring, with div v = (v_{i+1} - v_{i-1})/dx + (same in y) and
/// c_min the least sound speed over the zone and its neighbours.
/// `prim` must hold primitives with ghosts filled.
FlattenerField flattener_eta(const StateArray& prim, const SystemModel& sys, double kappa);

/// A flagged zone passes its eta to an unflagged neighbour of lower pressure,
/// per principal direction; decisions use the unspread field.
void flattener_spread(FlattenerField& eta, const StateArray& prim, const SystemModel& sys);

}  // namespace afdweno
