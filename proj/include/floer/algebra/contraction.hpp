#pragma once

#include "floer/algebra/cup_form.hpp"
#include "floer/algebra/exterior.hpp"
#include "floer/algebra/graded.hpp"
#include "floer/algebra/matrix.hpp"
#include "floer/algebra/rational.hpp"

namespace floer::algebra {

using RationalMatrix = Matrix<Rational>;

/// Matrix of the contraction Lambda^k -> Lambda^{k-3} with the cup form, in
/// the colex bases:
///
///   iota(e_S) = sum over 3-subsets T of S of  sign(T, S) * w(T) * e_{S \ T}
///
/// where sign(T, S) is the Koszul sign of moving T to the front of S and w is
/// evaluated on the increasing triple. For k < 3 the target is zero and the
/// matrix has no rows.
inline RationalMatrix contraction_matrix(const CupForm& cup, int k) {
  const int n = cup.b1();
  if (k < 0 || k > n) throw Error("out_of_range", "contraction degree must lie in [0, b1]");
  const ExteriorBasis source(n, k);
  const std::size_t target_dim = binomial(n, k - 3);
  RationalMatrix m(target_dim, source.size());
  if (target_dim == 0) return m;
  for (std::size_t col = 0; col < source.size(); ++col) {
    const SubsetMask s = source.subset(col);
    for (const auto& [t, coeff] : cup.terms()) {
      if ((t & s) != t) continue;
      const SubsetMask rest = s & ~t;
      m(ExteriorBasis::index_of(rest), col) += Rational(coeff * koszul_sign(t, s));
    }
  }
  return m;
}

/// Homology of (Lambda^* Q^{b1}, iota): rank at k is
/// dim ker(iota on Lambda^k) - rank(iota on Lambda^{k+3}).
inline GradedVectorSpace contraction_homology(const CupForm& cup) {
  const int n = cup.b1();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) ranks[k] = rank(contraction_matrix(cup, k));
  GradedVectorSpace h;
  for (int k = 0; k <= n; ++k) {
    const std::size_t kernel = binomial(n, k) - ranks[k];
    const std::size_t image = k + 3 <= n ? ranks[k + 3] : 0;
    h.set_rank(k, kernel - image);
  }
  return h;
}

}  // namespace floer::algebra
