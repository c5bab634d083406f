#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <vector>

namespace floer::algebra {

/// Finite-dimensional graded rational vector space, recorded by its ranks.
/// Degrees with rank zero are not stored.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;

  /// Ranks listed from `first_degree` upward.
  static GradedVectorSpace from_sequence(std::initializer_list<std::size_t> ranks, int first_degree = 0) {
    return from_sequence(std::vector<std::size_t>(ranks), first_degree);
  }
  static GradedVectorSpace from_sequence(const std::vector<std::size_t>& ranks, int first_degree = 0) {
    GradedVectorSpace v;
    for (std::size_t i = 0; i < ranks.size(); ++i) v.set_rank(first_degree + static_cast<int>(i), ranks[i]);
    return v;
  }

  std::size_t rank(int degree) const {
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
  }

  void set_rank(int degree, std::size_t r) {
    if (r == 0)
      ranks_.erase(degree);
    else
      ranks_[degree] = r;
  }

  void add_rank(int degree, std::size_t r) { set_rank(degree, rank(degree) + r); }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [d, r] : ranks_) t += r;
    return t;
  }

  bool empty() const { return ranks_.empty(); }
  int min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
  int max_degree() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }

  /// Dense rank list over [lo, hi], zeros included.
  std::vector<std::size_t> sequence(int lo, int hi) const {
    std::vector<std::size_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(rank(d));
    return out;
  }

  /// Alternating sum of ranks.
  long long euler_characteristic() const {
    long long chi = 0;
    for (const auto& [d, r] : ranks_) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
    return chi;
  }

  const std::map<int, std::size_t>& ranks() const noexcept { return ranks_; }

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GradedVectorSpace& v) {
    os << "{";
    bool first = true;
    for (const auto& [d, r] : v.ranks_) {
      os << (first ? "" : ", ") << d << ":" << r;
      first = false;
    }
    return os << "}";
  }

 private:
  std::map<int, std::size_t> ranks_;
};

}  // namespace floer::algebra
