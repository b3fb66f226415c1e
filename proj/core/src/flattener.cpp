#include "afdweno/flattener.hpp"

#include <algorithm>
#include <cmath>

namespace afdweno {

double FlattenerField::max() const {
  return eta_.empty() ? 0.0 : *std::max_element(eta_.begin(), eta_.end());
}

FlattenerField flattener_eta(const StateArray& prim, const SystemModel& sys, double kappa) {
  if (!(kappa > 0.0)) throw UsageError("flattener kappa must be positive");
  const Grid& g = prim.grid();
  FlattenerField eta(g);
  const bool two_d = g.is_2d();
  const double h = two_d ? std::max(g.dx(), g.dy()) : g.dx();
  const int j_lo = two_d ? -1 : 0, j_hi = two_d ? g.ny() : 0;
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = -1; i <= g.nx(); ++i) {
      if (g.solid(i, j)) continue;
      const StateVector w = prim.get(i, j);
      // Solid neighbours act as mirrors of the centre zone.
      auto neighbour = [&](int ii, int jj, Direction normal) {
        if (!g.solid(ii, jj)) return prim.get(ii, jj);
        StateVector m = w;
        m[normal == Direction::x ? 1 : 2] = -m[normal == Direction::x ? 1 : 2];
        return m;
      };
      double div = (neighbour(i + 1, j, Direction::x)[1] - neighbour(i - 1, j, Direction::x)[1]) /
                   g.dx();
      double c_min = sys.sound_speed_prim(w);
      for (int di = -1; di <= 1; ++di) {
        for (int dj = (two_d ? -1 : 0); dj <= (two_d ? 1 : 0); ++dj) {
          if (g.solid(i + di, j + dj)) continue;
          c_min = std::min(c_min, sys.sound_speed_prim(prim.get(i + di, j + dj)));
        }
      }
      if (two_d)
        div += (neighbour(i, j + 1, Direction::y)[2] - neighbour(i, j - 1, Direction::y)[2]) /
               g.dy();
      const double ratio = std::abs(div) * h / (kappa * c_min) - 1.0;
      eta(i, j) = std::min(1.0, std::max(0.0, ratio));
    }
  }
  return eta;
}

void flattener_spread(FlattenerField& eta, const StateArray& prim, const SystemModel& sys) {
  const Grid& g = eta.grid();
  const FlattenerField orig = eta;
  const bool two_d = g.is_2d();
  auto pressure = [&](int i, int j) { return sys.pressure_scalar_prim(prim.get(i, j)); };
  const int j_lo = two_d ? -1 : 0, j_hi = two_d ? g.ny() : 0;
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = -1; i <= g.nx(); ++i) {
      const double e = orig(i, j);
      if (e <= 0.0) continue;
      const double p = pressure(i, j);
      auto push = [&](int ii, int jj) {
        if (ii < -1 || ii > g.nx() || jj < j_lo || jj > j_hi || g.solid(ii, jj)) return;
        if (orig(ii, jj) == 0.0 && p > pressure(ii, jj)) eta(ii, jj) = std::max(eta(ii, jj), e);
      };
      push(i - 1, j);
      push(i + 1, j);
      if (two_d) {
        push(i, j - 1);
        push(i, j + 1);
      }
    }
  }
}

}  // namespace afdweno
