#pragma once

#include <vector>

#include "floer/flat/kernel_locus.hpp"

namespace floer::flat {

struct SpinPoint {
  FlatPoint point;
  LocusSide side;
  bool is_s0;
};

/// The eight spin structures sit at {0, pi}^3. Only s0 = (0, 0, 0) has an
/// unperturbed operator with kernel, and it is the only one inside the ball.
/// Ordered with the x coordinate varying fastest.
inline std::vector<SpinPoint> spin_points(const Real& delta) {
  require_small_perturbation(delta);
  std::vector<SpinPoint> out;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<PiLinear, 3> c;
    for (int i = 0; i < 3; ++i) c[i].pi_coeff = (bits >> i) & 1;
    FlatPoint p(Point3{c});
    out.push_back({p, kernel_locus_membership(p, delta), bits == 0});
  }
  return out;
}

}  // namespace floer::flat
