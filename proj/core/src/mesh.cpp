#include "afdweno/mesh.hpp"

#include <cmath>
#include <string>

namespace afdweno {

Grid::Grid(int nx, double x_min, double x_max, int ghost)
    : Grid(nx, 1, x_min, x_max, 0.0, 1.0, ghost) {}

Grid::Grid(int nx, int ny, double x_min, double x_max, double y_min, double y_max, int ghost)
    : nx_(nx), ny_(ny), ghost_(ghost), x_min_(x_min), x_max_(x_max), y_min_(y_min),
      y_max_(y_max) {
  if (nx < 1 || ny < 1) throw UsageError("grid needs at least one zone per direction");
  if (!(x_max > x_min) || (ny > 1 && !(y_max > y_min)))
    throw UsageError("grid bounds must be increasing");
  if (ghost < 1) throw UsageError("grid needs at least one ghost zone");
  if (nx < ghost || (ny > 1 && ny < ghost))
    throw UsageError("grid has fewer interior zones (" + std::to_string(std::min(nx, ny)) +
                     ") than ghost zones (" + std::to_string(ghost) + ")");
}

StateArray::StateArray(const Grid& grid, int n_components)
    : grid_(grid), nc_(n_components),
      data_(std::size_t(grid.sx()) * grid.sy() * n_components, 0.0) {}

StateVector StateArray::interior_sum() const {
  StateVector s = StateVector::Zero(nc_);
  for (int j = 0; j < grid_.ny(); ++j)
    for (int i = 0; i < grid_.nx(); ++i) s += get(i, j);
  return s;
}

BoundaryConditions BoundaryConditions::all(BcKind kind) {
  BoundaryConditions bc;
  bc.left.kind = bc.right.kind = bc.bottom.kind = bc.top.kind = kind;
  return bc;
}

void BoundaryConditions::validate(const Grid& grid) const {
  if ((left.kind == BcKind::periodic) != (right.kind == BcKind::periodic))
    throw UsageError("periodic x edges must come in pairs");
  if (grid.is_2d() && (bottom.kind == BcKind::periodic) != (top.kind == BcKind::periodic))
    throw UsageError("periodic y edges must come in pairs");
  for (const EdgeBc* e : {&left, &right})
    if (e->kind == BcKind::dmr_bottom || e->kind == BcKind::dmr_top)
      throw UsageError("DMR edges apply to the bottom and top only");
}

namespace {

// Source zone and whether the normal component flips, for ghost index k
// (k < 0 on the low side, k >= n on the high side) along one direction.
int mirror_index(int k, int n) { return k < 0 ? -1 - k : 2 * n - 1 - k; }
int copy_index(int k, int n) { return k < 0 ? 0 : n - 1; }
int periodic_index(int k, int n) { return ((k % n) + n) % n; }

void fill_one(StateArray& u, const EdgeBc& e, const SystemModel& sys, Direction dir, int ghost_i,
              int ghost_j, double t) {
  const Grid& g = u.grid();
  const bool along_x = dir == Direction::x;
  const int n = along_x ? g.nx() : g.ny();
  const int k = along_x ? ghost_i : ghost_j;
  auto src = [&](int idx) {
    return along_x ? u.get(idx, ghost_j) : u.get(ghost_i, idx);
  };
  StateVector v;
  switch (e.kind) {
    case BcKind::periodic: v = src(periodic_index(k, n)); break;
    case BcKind::outflow: v = src(copy_index(k, n)); break;
    case BcKind::reflective: v = sys.reflect(src(mirror_index(k, n)), dir); break;
    case BcKind::dirichlet: v = e.state; break;
    case BcKind::dmr_bottom:
      v = g.xc(ghost_i) < e.x0 ? e.state : sys.reflect(src(mirror_index(k, n)), dir);
      break;
    case BcKind::dmr_top: {
      const double xs = e.x0 + g.yc(ghost_j) / std::sqrt(3.0) + e.speed * t;
      v = g.xc(ghost_i) < xs ? e.state : e.state_alt;
      break;
    }
  }
  u.set(ghost_i, ghost_j, v);
}

}  // namespace

void fill_ghosts(StateArray& u, const BoundaryConditions& bc, const SystemModel& sys, double t) {
  const Grid& g = u.grid();
  const int gh = g.ghost();
  for (int j = 0; j < g.ny(); ++j) {
    for (int k = 1; k <= gh; ++k) {
      fill_one(u, bc.left, sys, Direction::x, -k, j, t);
      fill_one(u, bc.right, sys, Direction::x, g.nx() - 1 + k, j, t);
    }
  }
  if (!g.is_2d()) return;
  for (int i = -gh; i < g.nx() + gh; ++i) {
    for (int k = 1; k <= gh; ++k) {
      fill_one(u, bc.bottom, sys, Direction::y, i, -k, t);
      fill_one(u, bc.top, sys, Direction::y, i, g.ny() - 1 + k, t);
    }
  }
}

}  // namespace afdweno
