#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floer/flat/pi_linear.hpp"

namespace floer::flat {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance for locus membership when an input has no exact form.
inline constexpr double kLocusTolerance = 1e-12;

/// Point of R^3 (a lift of a holonomy vector), optionally with exact
/// coordinates; `approx` always holds the double values.
struct Point3 {
  std::array<double, 3> approx{};
  std::optional<std::array<PiLinear, 3>> exact;

  Point3() = default;
  Point3(double x, double y, double z) : approx{x, y, z} {}
  explicit Point3(const std::array<double, 3>& v) : approx(v) {}
  explicit Point3(const std::array<PiLinear, 3>& e) : exact(e) {
    for (int i = 0; i < 3; ++i) approx[i] = static_cast<double>(e[i].approx());
  }

  /// Three comma-separated coordinates, e.g. "pi,0,0.5pi".
  static Point3 parse(std::string_view text) {
    std::array<PiLinear, 3> e;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const std::size_t comma = text.find(',', start);
      if ((i < 2) != (comma != std::string_view::npos))
        throw Error("parse_error", "point '" + std::string(text) + "' needs exactly three comma-separated coordinates");
      e[i] = parse_pi_linear(text.substr(start, i < 2 ? comma - start : std::string_view::npos));
      start = comma + 1;
    }
    return Point3(e);
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (i) s += ",";
      s += exact ? (*exact)[i].to_string() : std::to_string(approx[i]);
    }
    return s;
  }
};

/// Flat spin^c connection on the unit cubic T^3: holonomy vector reduced to
/// the fundamental domain [0, 2 pi)^3 of R^3 / 2 pi Z^3.
class FlatPoint {
 public:
  FlatPoint() = default;
  explicit FlatPoint(const Point3& lift) : beta_(reduce(lift)) {}
  FlatPoint(double x, double y, double z) : FlatPoint(Point3(x, y, z)) {}

  const Point3& beta() const noexcept { return beta_; }
  const std::array<double, 3>& values() const noexcept { return beta_.approx; }

 private:
  static Point3 reduce(const Point3& p) {
    Point3 out = p;
    for (int i = 0; i < 3; ++i) {
      double wraps = std::floor(p.approx[i] / kTwoPi);
      if (out.exact) {
        const PiLinear& e = (*out.exact)[i];
        // exact floor when the coordinate is a rational multiple of pi
        if (e.offset == 0) {
          const Rational half = e.pi_coeff / 2;
          Integer fl = numerator(half) / denominator(half);
          if (half < 0 && Rational(fl) != half) fl -= 1;
          wraps = fl.convert_to<double>();
        }
        (*out.exact)[i].pi_coeff -= 2 * Rational(static_cast<long long>(wraps));
        out.approx[i] = static_cast<double>((*out.exact)[i].approx());
      } else {
        out.approx[i] = p.approx[i] - wraps * kTwoPi;
      }
      if (out.approx[i] >= kTwoPi) out.approx[i] -= kTwoPi;  // rounding at the top edge
      if (out.approx[i] < 0) out.approx[i] = 0;
    }
    return out;
  }

  Point3 beta_;
};

}  // namespace floer::flat
