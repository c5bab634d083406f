#pragma once

#include <complex>

namespace floer::flat {

/// Kernel dimension of the hermitian matrix [[a, conj(z)], [z, b]]. The
/// matrices with kernel form the quadric ab - |z|^2 = 0, and only the zero
/// matrix has a two-dimensional kernel. Exact for exact scalar types.
template <typename Scalar>
int hermitian2_stratum(const Scalar& a, const Scalar& b, const Scalar& z_re, const Scalar& z_im) {
  if (a == 0 && b == 0 && z_re == 0 && z_im == 0) return 2;
  return a * b - (z_re * z_re + z_im * z_im) == 0 ? 1 : 0;
}

inline int hermitian2_stratum(double a, double b, std::complex<double> z) {
  return hermitian2_stratum(a, b, z.real(), z.imag());
}

}  // namespace floer::flat
