#pragma once

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "floer/algebra/cup_form.hpp"
#include "floer/algebra/exterior.hpp"
#include "floer/core/datum.hpp"
#include "floer/product/presets.hpp"
#include "floer/product/symmetric_product.hpp"

namespace floer::product {

using algebra::SubsetMask;
using core::RationalMatrix;
using core::SimplestTypeDatum;

/// Sparse element of Lambda^* Q^n keyed by basis subset.
using ExteriorVector = std::map<SubsetMask, Rational>;

inline ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b) {
  ExteriorVector out;
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) {
      if (sa & sb) continue;
      // sign of the shuffle taking (sa, sb) to increasing order
      int swaps = 0;
      for (SubsetMask f = sb; f; f &= f - 1) swaps += std::popcount(sa & ~((SubsetMask{2} << std::countr_zero(f)) - 1));
      Rational& slot = out[sa | sb];
      slot += (swaps % 2 ? -1 : 1) * ca * cb;
      if (slot == 0) out.erase(sa | sb);
    }
  return out;
}

inline ExteriorVector basis_vector(int index0) { return {{SubsetMask{1} << index0, Rational(1)}}; }

/// Matrix whose columns are the given degree-k vectors in the colex basis.
inline RationalMatrix columns_matrix(int n, int k, const std::vector<ExteriorVector>& cols) {
  RationalMatrix m(algebra::binomial(n, k), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [s, c] : cols[j]) {
      if (std::popcount(s) != k) throw Error("internal_error", "column has the wrong degree");
      m(algebra::ExteriorBasis::index_of(s), j) = c;
    }
  return m;
}

/// Datum for S^1 x Sigma_g with the torsion spin^c structure, g in {2, 3}.
///
/// Basis of H_1 of the torus of flat connections: z, x1, y1, ..., xg, yg
/// (0-based positions 0, 1, 2, ...). T_- is a disk bundle over the theta
/// divisor, so H_*(T_-) = H_*(Sym^{g-1} Sigma_g), mapped into Lambda^* via the
/// curve class w = sum x_i ^ y_i:
///   g = 2:  H_1 -> span(x_i, y_i),  H_2 -> w
///   g = 3:  H_1 -> span(x_i, y_i),  H_2 = Lambda^2 H_1 + Q -> (identity, 0),
///           H_3 = H_1 -> x ^ w,     H_4 -> w ^ w / 2
inline SimplestTypeDatum theta_datum(int genus) {
  if (genus >= 4)
    throw Error("theta_divisor_singular", "theta divisor is singular for genus >= 4; no simplest-type preset");
  if (genus < 2) throw Error("unsupported_preset", "theta presets exist only for genus 2 and 3");

  const int n = 2 * genus + 1;
  SimplestTypeDatum d;
  d.b1 = n;
  d.cup = algebra::CupForm::product_with_surface(genus);
  d.h_minus = sym_product_homology(genus, genus - 1);
  d.label = genus == 2 ? "S1 x Sigma_2 (Bolza), theta divisor" : "S1 x Sigma_3 (Klein), theta divisor";

  std::vector<ExteriorVector> h1;
  for (int i = 1; i < n; ++i) h1.push_back(basis_vector(i));
  ExteriorVector w;
  for (int i = 1; i <= genus; ++i)
    for (const auto& [s, c] : wedge(basis_vector(2 * i - 1), basis_vector(2 * i))) w[s] += c;

  d.inclusion[0] = columns_matrix(n, 0, {ExteriorVector{{0, Rational(1)}}});
  d.inclusion[1] = columns_matrix(n, 1, h1);
  if (genus == 2) {
    d.inclusion[2] = columns_matrix(n, 2, {w});
  } else {
    std::vector<ExteriorVector> h2;
    const algebra::ExteriorBasis pairs(n, 2);
    for (SubsetMask s : pairs.subsets())
      if (!(s & 1)) h2.push_back({{s, Rational(1)}});
    h2.push_back({});  // the extra Q summand of H_2(Sym^2), killed by i_*
    d.inclusion[2] = columns_matrix(n, 2, h2);
    std::vector<ExteriorVector> h3;
    for (const auto& x : h1) h3.push_back(wedge(x, w));
    d.inclusion[3] = columns_matrix(n, 3, h3);
    ExteriorVector top = wedge(w, w);
    for (auto& [s, c] : top) c /= 2;
    d.inclusion[4] = columns_matrix(n, 4, {top});
  }
  core::validate(d);
  return d;
}

/// Same construction keyed by a surface preset; rejects surfaces whose
/// theta divisor is not smooth or that are hyperelliptic in genus 3.
inline SimplestTypeDatum theta_datum(const SurfaceSpectralData& surface) {
  if (surface.genus == 3 && surface.hyperelliptic)
    throw Error("unsupported_preset", "hyperelliptic genus-3 surfaces are not of the simplest type here");
  SimplestTypeDatum d = theta_datum(surface.genus);
  d.label = "S1 x " + surface.name + " (genus " + std::to_string(surface.genus) + "), theta divisor";
  return d;
}

/// Flat T^3: T_- is the ball around the parallel-spinor point, so
/// H_*(T_-) = H_*(pt) mapping onto Lambda^0.
inline SimplestTypeDatum t3_flat_datum() {
  SimplestTypeDatum d;
  d.b1 = 3;
  d.cup = algebra::CupForm::torus();
  d.h_minus.set_rank(0, 1);
  d.inclusion[0] = RationalMatrix(1, 1, {Rational(1)});
  d.label = "flat T3, ball around the parallel-spinor point";
  return d;
}

}  // namespace floer::product
