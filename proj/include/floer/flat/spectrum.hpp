#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "floer/flat/torus.hpp"

namespace floer::flat {

struct Eigenvalue {
  double value;
  int multiplicity;
};

struct SpectrumWindow {
  double radius = 0;
  std::vector<Eigenvalue> entries;  // ascending
};

/// Eigenvalues of D_beta - delta in [-radius, radius] on the unit cubic
/// torus. Each lattice mode n contributes +|2 pi n + beta| - delta and
/// -|2 pi n + beta| - delta; the mode with 2 pi n + beta = 0 gives -delta
/// twice (parallel spinors). Values within 1e-9 are merged.
inline SpectrumWindow dirac_spectrum(const FlatPoint& p, double delta, double radius) {
  if (!(radius > 0)) throw Error("out_of_range", "spectrum radius must be positive");
  const auto& beta = p.values();
  const double beta_norm = std::hypot(beta[0], beta[1], beta[2]);
  const long long bound = static_cast<long long>(std::ceil((radius + std::fabs(delta) + beta_norm) / kTwoPi)) + 1;

  std::vector<double> values;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c) {
        const double norm = std::hypot(kTwoPi * a + beta[0], kTwoPi * b + beta[1], kTwoPi * c + beta[2]);
        for (double v : {norm - delta, -norm - delta})
          if (std::fabs(v) <= radius) values.push_back(v == 0 ? 0.0 : v);
      }
  std::sort(values.begin(), values.end());

  SpectrumWindow w;
  w.radius = radius;
  for (double v : values) {
    if (!w.entries.empty() && std::fabs(w.entries.back().value - v) <= 1e-9)
      ++w.entries.back().multiplicity;
    else
      w.entries.push_back({v, 1});
  }
  return w;
}

}  // namespace floer::flat
