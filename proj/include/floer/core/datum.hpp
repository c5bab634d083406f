#pragma once

#include <map>
#include <string>

#include "floer/algebra/contraction.hpp"
#include "floer/algebra/cup_form.hpp"
#include "floer/algebra/graded.hpp"

namespace floer::core {

using algebra::CupForm;
using algebra::GradedVectorSpace;
using algebra::RationalMatrix;

/// Input to the simplest-type computation: the torus H_*(T) = Lambda^* Q^{b1}
/// with its triple cup product, the homology of the sublevel piece T_- and
/// the maps i_*: H_k(T_-) -> Lambda^k Q^{b1}.
struct SimplestTypeDatum {
  int b1 = 0;
  CupForm cup{0};
  GradedVectorSpace h_minus;
  /// Keyed by degree; column count = h_minus.rank(k), row count = C(b1, k).
  std::map<int, RationalMatrix> inclusion;
  std::string label;

  /// Inclusion at degree k, or the empty C(b1,k) x 0 matrix when absent.
  RationalMatrix inclusion_at(int k) const {
    auto it = inclusion.find(k);
    if (it != inclusion.end()) return it->second;
    return RationalMatrix(algebra::binomial(b1, k), 0);
  }

  friend bool operator==(const SimplestTypeDatum&, const SimplestTypeDatum&) = default;
};

/// Throws Error("shape_mismatch") when a matrix disagrees with the ranks.
inline void validate(const SimplestTypeDatum& d) {
  if (d.b1 < 1) throw Error("invalid_datum", "b1 must be positive");
  if (d.cup.b1() != d.b1) throw Error("invalid_datum", "cup form rank differs from b1");
  for (const auto& [k, r] : d.h_minus.ranks())
    if (k < 0 || k > d.b1)
      throw Error("invalid_datum", "H_*(T_-) has rank in degree " + std::to_string(k) + " outside [0, b1]");
  for (const auto& [k, m] : d.inclusion) {
    const std::size_t want_rows = algebra::binomial(d.b1, k);
    const std::size_t want_cols = d.h_minus.rank(k);
    if (m.rows() != want_rows || m.cols() != want_cols)
      throw Error("shape_mismatch", "inclusion at degree " + std::to_string(k) + " is " + std::to_string(m.rows()) +
                                        "x" + std::to_string(m.cols()) + ", expected " + std::to_string(want_rows) +
                                        "x" + std::to_string(want_cols));
  }
  for (const auto& [k, r] : d.h_minus.ranks())
    if (!d.inclusion.contains(k))
      throw Error("shape_mismatch", "missing inclusion matrix in degree " + std::to_string(k));
}

}  // namespace floer::core
