#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "floer/algebra/graded.hpp"
#include "floer/error.hpp"

namespace floer::algebra {

/// Q[U]/U^u_length with its top generator in `degree`.
struct TorsionSummand {
  int degree = 0;
  int u_length = 1;

  friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

/// Finitely generated graded Q[U]-module of the form
///   (sum of towers T+<d>) + (sum of Q[U]/U^l),
/// where T+ = Q[U^-1, U] / U Q[U] and U has degree -2. A tower is recorded by
/// the degree of its bottom element; it occupies that degree and every second
/// degree above it.
///
/// Canonical form: towers sorted descending, torsion sorted by (degree, u_length).
class GradedUModule {
 public:
  GradedUModule() = default;
  GradedUModule(std::vector<int> towers, std::vector<TorsionSummand> torsion)
      : towers_(std::move(towers)), torsion_(std::move(torsion)) {
    for (const auto& t : torsion_)
      if (t.u_length < 1) throw Error("invalid_module", "torsion summand needs u_length >= 1");
    canonicalize();
  }

  /// One tower per unit of rank, bottoms at the degrees of `space`.
  static GradedUModule towers_on(const GradedVectorSpace& space) {
    std::vector<int> t;
    for (const auto& [d, r] : space.ranks()) t.insert(t.end(), r, d);
    return GradedUModule(std::move(t), {});
  }

  const std::vector<int>& towers() const noexcept { return towers_; }
  const std::vector<TorsionSummand>& torsion() const noexcept { return torsion_; }

  /// Tower bottoms grouped by degree.
  GradedVectorSpace tower_profile() const {
    GradedVectorSpace v;
    for (int d : towers_) v.add_rank(d, 1);
    return v;
  }

  /// Torsion summands grouped with their counts.
  std::map<TorsionSummand, std::size_t> torsion_counts() const {
    std::map<TorsionSummand, std::size_t> out;
    for (const auto& t : torsion_) ++out[t];
    return out;
  }

  bool empty() const noexcept { return towers_.empty() && torsion_.empty(); }

  GradedUModule shifted(int s) const {
    GradedUModule m = *this;
    for (int& d : m.towers_) d += s;
    for (auto& t : m.torsion_) t.degree += s;
    return m;
  }

  friend GradedUModule operator+(const GradedUModule& a, const GradedUModule& b) {
    std::vector<int> t = a.towers_;
    t.insert(t.end(), b.towers_.begin(), b.towers_.end());
    std::vector<TorsionSummand> q = a.torsion_;
    q.insert(q.end(), b.torsion_.begin(), b.torsion_.end());
    return GradedUModule(std::move(t), std::move(q));
  }

  friend bool operator==(const GradedUModule&, const GradedUModule&) = default;

  /// Rank over Q in a single degree.
  std::size_t rank_in_degree(int degree) const {
    std::size_t r = 0;
    for (int b : towers_)
      if (degree >= b && (degree - b) % 2 == 0) ++r;
    for (const auto& t : torsion_) {
      const int lowest = t.degree - 2 * (t.u_length - 1);
      if (degree <= t.degree && degree >= lowest && (t.degree - degree) % 2 == 0) ++r;
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const GradedUModule& m) {
    os << "towers{";
    for (std::size_t i = 0; i < m.towers_.size(); ++i) os << (i ? "," : "") << m.towers_[i];
    os << "} torsion{";
    for (std::size_t i = 0; i < m.torsion_.size(); ++i)
      os << (i ? "," : "") << "(" << m.torsion_[i].degree << "," << m.torsion_[i].u_length << ")";
    return os << "}";
  }

 private:
  void canonicalize() {
    std::sort(towers_.begin(), towers_.end(), std::greater<>());
    std::sort(torsion_.begin(), torsion_.end());
  }

  std::vector<int> towers_;
  std::vector<TorsionSummand> torsion_;
};

inline GradedUModule umod_shift(const GradedUModule& m, int s) { return m.shifted(s); }
inline GradedUModule umod_sum(const GradedUModule& a, const GradedUModule& b) { return a + b; }
inline bool umod_equal(const GradedUModule& a, const GradedUModule& b) { return a == b; }

/// Nonzero ranks of `m` for each degree in [lo, hi], ascending.
inline std::vector<std::pair<int, std::size_t>> poincare_report(const GradedUModule& m, int lo, int hi) {
  if (lo > hi) throw Error("empty_window", "degree window is empty");
  std::vector<std::pair<int, std::size_t>> out;
  for (int d = lo; d <= hi; ++d)
    if (auto r = m.rank_in_degree(d)) out.emplace_back(d, r);
  return out;
}

}  // namespace floer::algebra
