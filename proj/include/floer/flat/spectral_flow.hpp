#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "floer/flat/kernel_locus.hpp"

namespace floer::flat {

/// Continuous polyline in R^3 lifting a path in the torus of flat connections.
struct PolyPath {
  std::vector<Point3> vertices;

  /// Vertices separated by ';', e.g. "0,0,0.1 ; pi,pi,pi".
  static PolyPath parse(std::string_view text) {
    PolyPath path;
    std::size_t start = 0;
    while (true) {
      const std::size_t semi = text.find(';', start);
      path.vertices.push_back(Point3::parse(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return path;
  }

  PolyPath then(const PolyPath& next) const {
    PolyPath out = *this;
    out.vertices.insert(out.vertices.end(), next.vertices.begin() + 1, next.vertices.end());
    return out;
  }
};

/// Signed count of zero crossings of the eigenvalue |beta(t) - 2 pi n| - delta
/// along the path: leaving a ball of radius delta counts +1, entering -1.
/// Tangential touches do not count.
inline int spectral_flow(const PolyPath& path, const Real& delta) {
  require_small_perturbation(delta);
  const auto& v = path.vertices;
  if (v.size() < 2) throw Error("invalid_path", "a path needs at least two vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (kernel_locus_membership(v[i], delta) == LocusSide::on) {
      const bool endpoint = i == 0 || i + 1 == v.size();
      throw Error(endpoint ? "endpoint_on_locus" : "vertex_on_locus",
                  std::string(endpoint ? "path endpoint" : "path vertex") + " " + std::to_string(i) +
                      " lies on the kernel locus");
    }
    if (i > 0)
      for (int c = 0; c < 3; ++c)
        if (std::fabs(v[i].approx[c] - v[i - 1].approx[c]) >= kTwoPi)
          throw Error("invalid_path", "consecutive vertices " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                          " are a full period apart");
  }

  const double r = delta.approx;
  int flow = 0;
  for (std::size_t s = 0; s + 1 < v.size(); ++s) {
    const auto& p0 = v[s].approx;
    const auto& p1 = v[s + 1].approx;
    std::array<double, 3> d{};
    std::array<long long, 3> lo{}, hi{};
    for (int c = 0; c < 3; ++c) {
      d[c] = p1[c] - p0[c];
      lo[c] = static_cast<long long>(std::floor((std::min(p0[c], p1[c]) - r) / kTwoPi));
      hi[c] = static_cast<long long>(std::ceil((std::max(p0[c], p1[c]) + r) / kTwoPi));
    }
    const double a = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    if (a == 0) continue;
    for (long long n0 = lo[0]; n0 <= hi[0]; ++n0)
      for (long long n1 = lo[1]; n1 <= hi[1]; ++n1)
        for (long long n2 = lo[2]; n2 <= hi[2]; ++n2) {
          const std::array<double, 3> rel{p0[0] - kTwoPi * n0, p0[1] - kTwoPi * n1, p0[2] - kTwoPi * n2};
          const double b = 2 * (d[0] * rel[0] + d[1] * rel[1] + d[2] * rel[2]);
          const double c0 = rel[0] * rel[0] + rel[1] * rel[1] + rel[2] * rel[2] - r * r;
          const double disc = b * b - 4 * a * c0;
          if (disc <= 0) continue;
          const double root = std::sqrt(disc);
          const double t_in = (-b - root) / (2 * a);
          const double t_out = (-b + root) / (2 * a);
          if (t_in > 0 && t_in < 1) --flow;
          if (t_out > 0 && t_out < 1) ++flow;
        }
  }
  return flow;
}

}  // namespace floer::flat
