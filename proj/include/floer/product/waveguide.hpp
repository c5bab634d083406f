#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "floer/error.hpp"

namespace floer::product {

/// Coexact 1-form spectrum query on S^1 x Sigma with the product metric and
/// circle R / 2 pi L Z. `surface_eigenvalues` are the nonzero Laplace
/// eigenvalues of Sigma on functions, ascending, repeated by multiplicity.
template <typename Real>
struct ProductSpectrumQuery {
  std::vector<Real> surface_eigenvalues;
  int genus = 0;
  Real circle_scale = Real(1);
  std::size_t count = 1;
};

template <typename Real>
struct SpectralValue {
  Real value;
  std::size_t multiplicity;

  friend bool operator==(const SpectralValue&, const SpectralValue&) = default;
};

namespace detail {

template <typename Real>
void check_query(const ProductSpectrumQuery<Real>& q) {
  if (!(q.circle_scale > Real(0))) throw Error("out_of_range", "circle parameter L must be positive");
  if (q.surface_eigenvalues.empty()) throw Error("invalid_query", "surface eigenvalue list is empty");
  if (q.genus < 0) throw Error("out_of_range", "genus must be nonnegative");
  if (q.count == 0) throw Error("out_of_range", "count must be positive");
  for (std::size_t i = 0; i < q.surface_eigenvalues.size(); ++i) {
    if (!(q.surface_eigenvalues[i] > Real(0))) throw Error("invalid_query", "surface eigenvalues must be positive");
    if (i && q.surface_eigenvalues[i] < q.surface_eigenvalues[i - 1])
      throw Error("invalid_query", "surface eigenvalues must be sorted ascending");
  }
}

}  // namespace detail

/// The first `count` elements (with multiplicity) of the multiset
///
///   { lambda_n + m^2 / L^2 : n >= 1, m in Z }                  surface modes
///   { m^2 / L^2, multiplicity 2g each : m in Z \ {0} }          harmonic modes
///
/// where m and -m are separate modes. Equal values are merged; the last
/// entry's multiplicity is truncated so the multiplicities sum to `count`.
/// Use an exact Real (Rational) to avoid drift in the merged values.
template <typename Real>
std::vector<SpectralValue<Real>> coexact_spectrum(const ProductSpectrumQuery<Real>& q) {
  detail::check_query(q);
  const Real inv_sq = Real(1) / (q.circle_scale * q.circle_scale);
  const long long need = static_cast<long long>(q.count);

  // Either branch alone already supplies `count` modes below its bound.
  const long long m_surface = need / 2 + 1;
  Real ceiling = q.surface_eigenvalues.front() + Real(m_surface * m_surface) * inv_sq;
  if (q.genus > 0) {
    const long long m_harmonic = need / (4 * q.genus) + 1;
    ceiling = std::min<Real>(ceiling, Real(m_harmonic * m_harmonic) * inv_sq);
  }

  std::vector<SpectralValue<Real>> raw;
  for (const Real& lambda : q.surface_eigenvalues) {
    if (lambda > ceiling) break;
    raw.push_back({lambda, 1});
    for (long long m = 1;; ++m) {
      const Real v = lambda + Real(m * m) * inv_sq;
      if (v > ceiling) break;
      raw.push_back({v, 2});
    }
  }
  if (q.genus > 0) {
    for (long long m = 1;; ++m) {
      const Real v = Real(m * m) * inv_sq;
      if (v > ceiling) break;
      raw.push_back({v, 4 * static_cast<std::size_t>(q.genus)});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.value < b.value; });

  std::vector<SpectralValue<Real>> merged;
  for (auto& e : raw) {
    if (!merged.empty() && merged.back().value == e.value)
      merged.back().multiplicity += e.multiplicity;
    else
      merged.push_back(std::move(e));
  }

  std::vector<SpectralValue<Real>> out;
  std::size_t taken = 0;
  for (auto& e : merged) {
    if (taken == q.count) break;
    e.multiplicity = std::min(e.multiplicity, q.count - taken);
    taken += e.multiplicity;
    out.push_back(std::move(e));
  }
  return out;
}

/// First eigenvalue on coexact 1-forms: min(lambda_1(Sigma), 1/L^2).
template <typename Real>
Real lambda1_star(ProductSpectrumQuery<Real> q) {
  q.count = 1;
  return coexact_spectrum(q).front().value;
}

/// lambda_1^* > -inf(s~) / 2, where s~ is the sum of the two smallest Ricci
/// eigenvalues. Hyperbolic products have s~ = -2, so the threshold is 1.
template <typename Real>
bool spectrally_large(const Real& lambda1_star_value, const Real& s_tilde_inf) {
  return lambda1_star_value > -s_tilde_inf / Real(2);
}

/// Ricci tensor of S^1 x Sigma_hyp is diag(0, -1, -1).
inline constexpr int kHyperbolicProductSTilde = -2;

}  // namespace floer::product
