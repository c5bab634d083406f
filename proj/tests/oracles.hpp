#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the routines it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using Triple = std::array<int, 3>;  // 1-based, increasing

// Sign of the permutation sorting `seq` (distinct entries), by inversion count.
inline int permutation_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  return inv % 2 ? -1 : 1;
}

// All k-subsets of {1..n} as sorted lists, colex order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// Contraction Lambda^k -> Lambda^{k-3} as an integer matrix, built from
// explicit index lists: e_S = e_T ^ e_{S\T} * sign(T ++ (S\T)).
inline std::vector<std::vector<long long>> contraction(int n, const std::map<Triple, long long>& form, int k) {
  const auto src = subsets(n, k);
  const auto dst = subsets(n, k - 3);
  std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
  if (k < 3) return m;
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto& s = src[c];
    for (const auto& [t, coeff] : form) {
      if (!std::includes(s.begin(), s.end(), t.begin(), t.end())) continue;
      std::vector<int> rest;
      std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(rest));
      std::vector<int> seq(t.begin(), t.end());
      seq.insert(seq.end(), rest.begin(), rest.end());
      const auto row = std::find(dst.begin(), dst.end(), rest) - dst.begin();
      m[row][c] += coeff * permutation_sign(seq);
    }
  }
  return m;
}

// Rank modulo a large prime. Agrees with the rational rank for the small
// integer matrices used here.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> m) {
  constexpr long long p = 1'000'000'007LL;
  auto mod = [](long long x) { return ((x % p) + p) % p; };
  auto pow_mod = [&](long long b, long long e) {
    long long r = 1;
    b = mod(b);
    while (e) {
      if (e & 1) r = static_cast<long long>((__int128)r * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  if (m.empty() || m[0].empty()) return 0;
  for (auto& row : m)
    for (auto& x : row) x = mod(x);
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = pow_mod(m[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = static_cast<long long>((__int128)m[r][c] * inv % p);
      for (std::size_t j = c; j < cols; ++j) m[r][j] = mod(m[r][j] - static_cast<long long>((__int128)f * m[rank][j] % p));
    }
    ++rank;
  }
  return rank;
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Homology ranks of (Lambda^*, iota), degrees 0..n.
inline std::vector<std::size_t> contraction_homology(int n, const std::map<Triple, long long>& form) {
  std::vector<std::size_t> rk(n + 4, 0);
  for (int k = 3; k <= n; ++k) rk[k] = rank_mod_p(contraction(n, form, k));
  std::vector<std::size_t> h;
  for (int k = 0; k <= n; ++k) h.push_back(static_cast<std::size_t>(binom(n, k)) - rk[k] - (k + 3 <= n ? rk[k + 3] : 0));
  return h;
}

// Betti numbers of Sym^n(Sigma_g) by enumerating graded-symmetric monomials
// in one even degree-0 class, 2g odd degree-1 classes and one even degree-2
// class (odd classes appear at most once).
inline std::vector<std::size_t> sym_product_betti(int g, int n) {
  std::vector<std::size_t> b(2 * n + 1, 0);
  for (std::uint32_t odd = 0; odd < (1u << (2 * g)); ++odd) {
    const int s = __builtin_popcount(odd);
    if (s > n) continue;
    for (int c = 0; s + c <= n; ++c) b[s + 2 * c] += 1;  // remaining n - s - c copies of the unit
  }
  return b;
}

// Inside/outside status of a lift w.r.t. balls of radius delta about 2 pi Z^3,
// checking all 27 neighbouring lattice points.
inline bool outside(const std::array<double, 3>& p, double delta) {
  const double two_pi = 2 * std::numbers::pi;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        const double x = p[0] - two_pi * (std::round(p[0] / two_pi) + a);
        const double y = p[1] - two_pi * (std::round(p[1] / two_pi) + b);
        const double z = p[2] - two_pi * (std::round(p[2] / two_pi) + c);
        if (std::sqrt(x * x + y * y + z * z) < delta) return false;
      }
  return true;
}

// Disjoint balls: every entry is followed by an exit from the same ball, so
// the flow along any path is status(end) - status(start).
inline int endpoint_flow(const std::array<double, 3>& start, const std::array<double, 3>& end, double delta) {
  return static_cast<int>(outside(end, delta)) - static_cast<int>(outside(start, delta));
}

// Smallest |eigenvalue| of the flat Dirac operator with delta = 0 by scanning
// lattice modes in a box.
inline double smallest_abs_eigenvalue(const std::array<double, 3>& beta, int box, int* multiplicity) {
  const double two_pi = 2 * std::numbers::pi;
  std::vector<double> norms;
  for (int a = -box; a <= box; ++a)
    for (int b = -box; b <= box; ++b)
      for (int c = -box; c <= box; ++c)
        norms.push_back(std::hypot(two_pi * a + beta[0], two_pi * b + beta[1], two_pi * c + beta[2]));
  std::sort(norms.begin(), norms.end());
  int mult = 0;
  for (double v : norms)
    if (std::fabs(v - norms.front()) < 1e-9) mult += (v == 0 ? 2 : 1);
  // each nonzero mode contributes one eigenvalue of each sign
  *multiplicity = mult;
  return norms.front();
}

}  // namespace oracle
