#pragma once

#include <map>

#include "floer/algebra/contraction.hpp"
#include "floer/algebra/matrix.hpp"
#include "floer/core/datum.hpp"

namespace floer::core {

/// The contraction Lambda^k -> Lambda^{k-3} written in adapted bases
/// [I^- basis | complement] on both sides.
struct ContractionBlocks {
  /// iota restricted to I^-_k, all target coordinates. Zero for genuine data.
  RationalMatrix on_i_minus;
  /// Complement-to-I^- block: the induced map f_k : I^+_k -> I^-_{k-3}.
  RationalMatrix induced;
  /// Complement-to-complement block. Zero when iota lands in I^-.
  RationalMatrix escaping;
};

/// Pieces of the long exact sequence of the pair (T, T_-) over Q:
///   0 -> I^-_k -> H_k(T) -> I^+_k -> 0,   E_k = ker(i_* on H_{k-1}(T_-)).
struct LesSplit {
  GradedVectorSpace i_plus;
  GradedVectorSpace i_minus;
  GradedVectorSpace e;
  /// Columns: a basis of I^-_k inside Lambda^k.
  std::map<int, RationalMatrix> i_minus_basis;
  /// Columns: standard basis vectors completing I^-_k; they represent I^+_k.
  std::map<int, RationalMatrix> complement_basis;
  /// Keyed by source degree k.
  std::map<int, ContractionBlocks> blocks;
};

namespace detail {

struct AdaptedBasis {
  RationalMatrix sub;         // basis of the subspace
  RationalMatrix complement;  // standard vectors completing it
  RationalMatrix inverse;     // inverse of [sub | complement]
};

inline AdaptedBasis adapted_basis(const RationalMatrix& spanning) {
  using algebra::independent_columns;
  const std::size_t n = spanning.rows();
  AdaptedBasis out;
  out.sub = spanning.columns(independent_columns(spanning));
  const std::size_t r = out.sub.cols();

  RationalMatrix wide(n, r + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) wide(i, j) = out.sub(i, j);
    wide(i, r + i) = 1;
  }
  std::vector<std::size_t> extra;
  for (auto p : independent_columns(wide))
    if (p >= r) extra.push_back(p);
  out.complement = wide.columns(extra);

  RationalMatrix full(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) full(i, j) = out.sub(i, j);
    for (std::size_t j = 0; j < extra.size(); ++j) full(i, r + j) = out.complement(i, j);
  }
  auto inv = algebra::inverse(full);
  if (!inv) throw Error("internal_error", "adapted basis is singular");
  out.inverse = std::move(*inv);
  return out;
}

}  // namespace detail

inline LesSplit split_les(const SimplestTypeDatum& datum) {
  validate(datum);
  const int n = datum.b1;
  LesSplit split;
  std::map<int, detail::AdaptedBasis> bases;
  for (int k = 0; k <= n; ++k) {
    const RationalMatrix incl = datum.inclusion_at(k);
    auto basis = detail::adapted_basis(incl);
    const std::size_t image_rank = basis.sub.cols();
    split.i_minus.set_rank(k, image_rank);
    split.i_plus.set_rank(k, algebra::binomial(n, k) - image_rank);
    split.e.set_rank(k + 1, incl.cols() - image_rank);
    split.i_minus_basis[k] = basis.sub;
    split.complement_basis[k] = basis.complement;
    bases.emplace(k, std::move(basis));
  }

  for (int k = 0; k <= n; ++k) {
    const auto& src = bases.at(k);
    const std::size_t r_src = src.sub.cols();
    const std::size_t n_src = algebra::binomial(n, k);
    ContractionBlocks blocks;
    if (k < 3) {
      blocks.on_i_minus = RationalMatrix(0, r_src);
      blocks.induced = RationalMatrix(0, n_src - r_src);
      blocks.escaping = RationalMatrix(0, n_src - r_src);
    } else {
      const auto& dst = bases.at(k - 3);
      const std::size_t r_dst = dst.sub.cols();
      const std::size_t n_dst = algebra::binomial(n, k - 3);
      RationalMatrix src_full(n_src, n_src);
      for (std::size_t i = 0; i < n_src; ++i) {
        for (std::size_t j = 0; j < r_src; ++j) src_full(i, j) = src.sub(i, j);
        for (std::size_t j = 0; j < src.complement.cols(); ++j) src_full(i, r_src + j) = src.complement(i, j);
      }
      const RationalMatrix coords = dst.inverse * algebra::contraction_matrix(datum.cup, k) * src_full;
      blocks.on_i_minus = coords.block(0, 0, n_dst, r_src);
      blocks.induced = coords.block(0, r_src, r_dst, n_src - r_src);
      blocks.escaping = coords.block(r_dst, r_src, n_dst - r_dst, n_src - r_src);
    }
    split.blocks.emplace(k, std::move(blocks));
  }
  return split;
}

}  // namespace floer::core
