#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "floer/algebra/contraction.hpp"
#include "floer/algebra/umodule.hpp"
#include "floer/core/datum.hpp"
#include "floer/core/les.hpp"

namespace floer::core {

using algebra::GradedUModule;

enum class GradingMode { relative, absolute };

/// HM-to of a simplest-type datum, split into its tower part and the reduced
/// (U-torsion) part.
struct SimplestHM {
  GradedUModule total;
  GradedUModule tower_part;
  GradedUModule reduced;
};

/// One U-period of HM-bar: the homology of Lambda^* Q^{b1} under contraction
/// with the triple cup product. HM-bar is this period tensored with
/// Q[U, U^-1], so its rank in any degree d equals the sum of period ranks in
/// degrees of the same parity as d.
inline GradedVectorSpace hm_bar(const CupForm& cup) { return algebra::contraction_homology(cup); }

/// Shifts both parts so that the topmost tower sits at 0 (relative) or at -1
/// (absolute, the convention of the S^1 x Sigma computations).
inline SimplestHM normalize_grading(const GradedUModule& tower_part, const GradedUModule& reduced, GradingMode mode) {
  if (mode == GradingMode::absolute && tower_part.towers().empty())
    throw Error("invalid_module", "absolute normalization needs at least one tower");
  int shift = 0;
  if (!tower_part.towers().empty()) {
    const int top = tower_part.towers().front();
    shift = (mode == GradingMode::relative ? 0 : -1) - top;
  }
  SimplestHM out;
  out.tower_part = tower_part.shifted(shift);
  out.reduced = reduced.shifted(shift);
  out.total = out.tower_part + out.reduced;
  return out;
}

/// HM-to of a datum of the simplest type:
///
///   towers  = Cone(iota : I^+<-2> -> I^-) (x) T+,   reduced = E<-2>.
///
/// Towers come from ker(f_k) in degree k - 2 and coker(f) in its I^- degree,
/// where f_k : I^+_k -> I^-_{k-3} is induced by the contraction. Each
/// E_k contributes Q[U]/U in degree k - 2.
///
/// Throws Error("not_simplest_type_consistent") if the contraction does not
/// vanish on I^- or does not land in I^-.
inline SimplestHM simplest_hm(const SimplestTypeDatum& datum, GradingMode mode = GradingMode::relative) {
  const LesSplit split = split_les(datum);
  const int n = datum.b1;

  for (const auto& [k, b] : split.blocks) {
    if (!b.on_i_minus.is_zero())
      throw Error("not_simplest_type_consistent",
                  "contraction does not vanish on the image of H_" + std::to_string(k) + "(T_-)");
    if (!b.escaping.is_zero())
      throw Error("not_simplest_type_consistent",
                  "contraction of degree-" + std::to_string(k) + " classes leaves the image of H_*(T_-)");
  }

  std::vector<std::size_t> f_rank(static_cast<std::size_t>(n) + 4, 0);
  for (const auto& [k, b] : split.blocks) f_rank[k] = algebra::rank(b.induced);

  std::vector<int> towers;
  for (int k = 0; k <= n; ++k) {
    const std::size_t kernel = split.i_plus.rank(k) - f_rank[k];
    towers.insert(towers.end(), kernel, k - 2);
    const std::size_t coker = split.i_minus.rank(k) - (k + 3 <= n ? f_rank[k + 3] : 0);
    towers.insert(towers.end(), coker, k);
  }
  std::vector<algebra::TorsionSummand> torsion;
  for (const auto& [k, r] : split.e.ranks()) torsion.insert(torsion.end(), r, algebra::TorsionSummand{k - 2, 1});

  return normalize_grading(GradedUModule(std::move(towers), {}), GradedUModule({}, std::move(torsion)), mode);
}

/// Sublevel filtration data: entry j is H_*(T_j, T_{j-1}).
struct FiltrationDatum {
  std::vector<GradedVectorSpace> relative_homologies;
};

/// E^1 page: one tower per generator of H_d(T_j, T_{j-1}), at degree d - 2j.
inline GradedUModule e1_page(const FiltrationDatum& filtration) {
  if (filtration.relative_homologies.empty()) throw Error("invalid_datum", "filtration has no levels");
  std::vector<int> towers;
  for (std::size_t j = 0; j < filtration.relative_homologies.size(); ++j)
    for (const auto& [d, r] : filtration.relative_homologies[j].ranks())
      towers.insert(towers.end(), r, d - 2 * static_cast<int>(j));
  return GradedUModule(std::move(towers), {});
}

/// True when tower multiplicities, read across the occupied degree range
/// (gaps counted as zero), form a palindrome.
inline bool palindrome_check(const GradedUModule& tower_part) {
  const auto profile = tower_part.tower_profile();
  if (profile.empty()) return true;
  const auto seq = profile.sequence(profile.min_degree(), profile.max_degree());
  return std::equal(seq.begin(), seq.begin() + seq.size() / 2, seq.rbegin());
}

}  // namespace floer::core
