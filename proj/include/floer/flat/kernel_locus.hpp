#pragma once

#include <cmath>

#include "floer/flat/torus.hpp"

namespace floer::flat {

enum class LocusSide { inside, on, outside };

inline const char* to_string(LocusSide s) {
  switch (s) {
    case LocusSide::inside: return "inside";
    case LocusSide::on: return "on";
    case LocusSide::outside: return "outside";
  }
  return "?";
}

/// The constant perturbation must satisfy 0 < delta < pi, otherwise the
/// spheres around neighbouring lattice points touch.
inline void require_small_perturbation(const Real& delta) {
  bool ok = delta.approx > 0 && delta.approx < std::numbers::pi;
  if (delta.exact) {
    const PiLinear& d = *delta.exact;
    if (d.is_zero() || (d.pi_coeff == 1 && d.offset == 0)) ok = false;
  }
  if (!ok) throw Error("perturbation_not_small", "perturbation delta must lie in (0, pi)");
}

/// Nearest point of the lattice 2 pi Z^3 to a lift.
inline std::array<long long, 3> nearest_lattice_point(const Point3& p) {
  std::array<long long, 3> n{};
  for (int i = 0; i < 3; ++i) n[i] = std::llround(p.approx[i] / kTwoPi);
  return n;
}

/// Position of a lift relative to the kernel locus of D_beta - delta, the
/// union of spheres of radius delta about 2 pi Z^3. Exact when the point and
/// delta both carry exact forms; otherwise a 1e-12 band counts as "on".
inline LocusSide kernel_locus_membership(const Point3& p, const Real& delta) {
  require_small_perturbation(delta);
  const auto n = nearest_lattice_point(p);
  if (p.exact && delta.exact) {
    PiQuadratic gap = square(*delta.exact);
    gap = PiQuadratic{} - gap;
    for (int i = 0; i < 3; ++i) {
      PiLinear c = (*p.exact)[i];
      c.pi_coeff -= 2 * Rational(n[i]);
      gap = gap + square(c);
    }
    if (gap.is_zero()) return LocusSide::on;
    return gap.approx() < 0 ? LocusSide::inside : LocusSide::outside;
  }
  long double dist2 = 0;
  for (int i = 0; i < 3; ++i) {
    const long double c = static_cast<long double>(p.approx[i]) - kTwoPi * static_cast<long double>(n[i]);
    dist2 += c * c;
  }
  const long double gap = std::sqrt(dist2) - static_cast<long double>(delta.approx);
  if (std::fabs(gap) <= kLocusTolerance) return LocusSide::on;
  return gap < 0 ? LocusSide::inside : LocusSide::outside;
}

inline LocusSide kernel_locus_membership(const FlatPoint& p, const Real& delta) {
  return kernel_locus_membership(p.beta(), delta);
}

}  // namespace floer::flat
