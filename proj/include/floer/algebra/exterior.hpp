#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "floer/algebra/graded.hpp"
#include "floer/error.hpp"

namespace floer::algebra {

// Subsets of {0, ..., n-1} are bitmasks; n is capped so masks fit in 32 bits
// and Lambda^k bases stay enumerable.
inline constexpr int kMaxRank = 24;

using SubsetMask = std::uint32_t;

inline std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

/// Canonical basis of Lambda^k Q^n: the k-subsets in colexicographic order,
/// which is the same as increasing bitmask value.
class ExteriorBasis {
 public:
  ExteriorBasis(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > kMaxRank) throw Error("out_of_range", "exterior algebra rank must lie in [0, 24]");
    if (k < 0 || k > n) return;
    // Gosper's hack walks k-subsets in increasing mask order.
    if (k == 0) {
      subsets_.push_back(0);
      return;
    }
    SubsetMask s = (SubsetMask{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      subsets_.push_back(s);
      const SubsetMask c = s & (~s + 1);
      const SubsetMask r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }

  int n() const noexcept { return n_; }
  int degree() const noexcept { return k_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  SubsetMask subset(std::size_t i) const { return subsets_[i]; }
  const std::vector<SubsetMask>& subsets() const noexcept { return subsets_; }

  /// Position of a subset in colex order (combinatorial number system).
  static std::size_t index_of(SubsetMask s) {
    std::size_t idx = 0;
    int i = 1;
    while (s) {
      const int c = std::countr_zero(s);
      idx += binomial(c, i++);
      s &= s - 1;
    }
    return idx;
  }

 private:
  int n_;
  int k_;
  std::vector<SubsetMask> subsets_;
};

/// Sign of the permutation that moves the elements of `front` (a subset of
/// `whole`) ahead of the rest, both blocks keeping their internal order.
inline int koszul_sign(SubsetMask front, SubsetMask whole) {
  const SubsetMask rest = whole & ~front;
  int crossings = 0;
  for (SubsetMask f = front; f; f &= f - 1) {
    const int t = std::countr_zero(f);
    const SubsetMask below = t == 0 ? 0 : ((SubsetMask{1} << t) - 1);
    crossings += std::popcount(rest & below);
  }
  return crossings % 2 == 0 ? 1 : -1;
}

/// Ranks of Lambda^* Q^n.
inline GradedVectorSpace exterior_dims(int n) {
  if (n < 0) throw Error("out_of_range", "exterior algebra rank must be nonnegative");
  GradedVectorSpace v;
  for (int k = 0; k <= n; ++k) v.set_rank(k, binomial(n, k));
  return v;
}

}  // namespace floer::algebra
