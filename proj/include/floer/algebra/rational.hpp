#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "floer/error.hpp"

namespace floer {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" text form; q is always printed, so 2 becomes "2/1".
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "p/q", or a plain decimal such as "-0.25" or "1e-3" into an
/// exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const std::string& why) -> Error {
    return Error("parse_error", "invalid rational '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw fail("empty");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw fail("zero denominator");
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  Integer digits = 0;
  int scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_point) ++scale;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail("no digits");
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw fail("unexpected character");
    std::string rest = s.substr(pos + 1);
    if (rest.empty()) throw fail("empty exponent");
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw fail("bad exponent");
    }
    if (used != rest.size() || exponent > 4000 || exponent < -4000) throw fail("bad exponent");
  }
  exponent -= scale;
  Rational value(digits);
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  value = exponent < 0 ? value / Rational(ten_pow) : value * Rational(ten_pow);
  return negative ? -value : value;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace floer
