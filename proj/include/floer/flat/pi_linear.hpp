#pragma once

#include <cctype>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "floer/algebra/rational.hpp"
#include "floer/error.hpp"

namespace floer::flat {

/// Exact real of the form pi_coeff * pi + offset with rational parts.
/// Because pi is transcendental, a polynomial in pi with rational
/// coefficients vanishes only when every coefficient does, which gives exact
/// equality tests for such inputs.
struct PiLinear {
  Rational pi_coeff;
  Rational offset;

  long double approx() const {
    return static_cast<long double>(to_double(pi_coeff)) * std::numbers::pi_v<long double> +
           static_cast<long double>(to_double(offset));
  }
  bool is_zero() const { return pi_coeff == 0 && offset == 0; }

  friend PiLinear operator+(const PiLinear& a, const PiLinear& b) {
    return {a.pi_coeff + b.pi_coeff, a.offset + b.offset};
  }
  friend PiLinear operator-(const PiLinear& a, const PiLinear& b) {
    return {a.pi_coeff - b.pi_coeff, a.offset - b.offset};
  }
  friend bool operator==(const PiLinear&, const PiLinear&) = default;

  std::string to_string() const {
    if (pi_coeff == 0) return offset.str();
    std::string s = pi_coeff == 1 ? "pi" : pi_coeff == -1 ? "-pi" : pi_coeff.str() + "pi";
    if (offset > 0) s += "+" + offset.str();
    if (offset < 0) s += offset.str();
    return s;
  }
};

/// Quadratic polynomial A pi^2 + B pi + C with rational coefficients.
struct PiQuadratic {
  Rational pi2;
  Rational pi1;
  Rational constant;

  bool is_zero() const { return pi2 == 0 && pi1 == 0 && constant == 0; }
  long double approx() const {
    constexpr long double pi = std::numbers::pi_v<long double>;
    return static_cast<long double>(to_double(pi2)) * pi * pi + static_cast<long double>(to_double(pi1)) * pi +
           static_cast<long double>(to_double(constant));
  }
  friend PiQuadratic operator+(const PiQuadratic& a, const PiQuadratic& b) {
    return {a.pi2 + b.pi2, a.pi1 + b.pi1, a.constant + b.constant};
  }
  friend PiQuadratic operator-(const PiQuadratic& a, const PiQuadratic& b) {
    return {a.pi2 - b.pi2, a.pi1 - b.pi1, a.constant - b.constant};
  }
};

inline PiQuadratic square(const PiLinear& x) {
  return {x.pi_coeff * x.pi_coeff, 2 * x.pi_coeff * x.offset, x.offset * x.offset};
}

/// Parses sums of terms such as "pi", "-0.5pi", "3pi/4", "2*pi", "pi-0.3",
/// "1/3" or "1e-2".
inline PiLinear parse_pi_linear(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  if (s.empty()) throw Error("parse_error", "empty number");

  PiLinear out;
  std::size_t start = 0;
  while (start < s.size()) {
    // a term ends at the next '+'/'-' that is not a sign right after an exponent marker
    std::size_t end = start + 1;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != 'e')) ++end;
    std::string term = s.substr(start, end - start);
    start = end;

    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    const auto pi_at = term.find("pi");
    if (pi_at == std::string::npos) {
      Rational v = parse_rational(term);
      out.offset += negative ? -v : v;
      continue;
    }
    std::string coeff_text = term.substr(0, pi_at);
    std::string tail = term.substr(pi_at + 2);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
    Rational coeff = coeff_text.empty() ? Rational(1) : parse_rational(coeff_text);
    if (!tail.empty()) {
      if (tail[0] != '/') throw Error("parse_error", "unexpected text after pi in '" + std::string(text) + "'");
      const Rational den = parse_rational(tail.substr(1));
      if (den == 0) throw Error("parse_error", "division by zero in '" + std::string(text) + "'");
      coeff /= den;
    }
    out.pi_coeff += negative ? -coeff : coeff;
  }
  return out;
}

/// A real input that may carry an exact PiLinear form.
struct Real {
  double approx = 0.0;
  std::optional<PiLinear> exact;

  Real() = default;
  Real(double v) : approx(v) {}  // NOLINT(google-explicit-constructor)
  Real(const PiLinear& e) : approx(static_cast<double>(e.approx())), exact(e) {}  // NOLINT

  static Real parse(std::string_view text) { return Real(parse_pi_linear(text)); }
};

}  // namespace floer::flat
