#pragma once

#include <cstddef>
#include <vector>

#include "floer/algebra/exterior.hpp"
#include "floer/algebra/graded.hpp"
#include "floer/error.hpp"

namespace floer::product {

/// Rational Betti numbers of Sym^n(Sigma_g): the coefficient of u^n in
///
///   (1 + t u)^{2g} / ((1 - u)(1 - t^2 u)),
///
/// read as a polynomial in t.
inline algebra::GradedVectorSpace sym_product_homology(int genus, int n) {
  if (genus < 0 || n < 0) throw Error("out_of_range", "genus and symmetric power must be nonnegative");
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t tmax = 2 * un;
  // series[u][t], truncated at u^n
  using Series = std::vector<std::vector<std::size_t>>;
  auto zero = [&] { return Series(un + 1, std::vector<std::size_t>(tmax + 1, 0)); };
  auto multiply = [&](const Series& a, const Series& b) {
    Series c = zero();
    for (std::size_t i = 0; i <= un; ++i)
      for (std::size_t p = 0; p <= tmax; ++p) {
        if (!a[i][p]) continue;
        for (std::size_t j = 0; i + j <= un; ++j)
          for (std::size_t q = 0; p + q <= tmax; ++q) c[i + j][p + q] += a[i][p] * b[j][q];
      }
    return c;
  };

  Series odd = zero();  // (1 + t u)^{2g}
  for (std::size_t a = 0; a <= un && a <= static_cast<std::size_t>(2 * genus); ++a)
    odd[a][a] = algebra::binomial(2 * genus, static_cast<int>(a));
  Series geometric = zero();  // 1 / (1 - u)
  for (std::size_t b = 0; b <= un; ++b) geometric[b][0] = 1;
  Series top = zero();  // 1 / (1 - t^2 u)
  for (std::size_t c = 0; c <= un; ++c) top[c][2 * c] = 1;

  const Series product = multiply(multiply(odd, geometric), top);
  algebra::GradedVectorSpace betti;
  for (std::size_t i = 0; i <= tmax; ++i) betti.set_rank(static_cast<int>(i), product[un][i]);
  return betti;
}

}  // namespace floer::product
