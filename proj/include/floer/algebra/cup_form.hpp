#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "floer/algebra/exterior.hpp"
#include "floer/algebra/rational.hpp"
#include "floer/error.hpp"

namespace floer::algebra {

/// Alternating trilinear integer form on Z^{b1}, stored by its values on
/// increasing index triples. Indices are 1-based in the public surface.
class CupForm {
 public:
  using Triple = std::array<int, 3>;

  explicit CupForm(int b1) : b1_(b1) {
    if (b1 < 0 || b1 > kMaxRank) throw Error("out_of_range", "b1 must lie in [0, 24]");
  }

  /// T^3 generator e1 ^ e2 ^ e3.
  static CupForm torus() {
    CupForm c(3);
    c.add_term({1, 2, 3}, 1);
    return c;
  }

  /// z^x1^y1 + ... + z^xg^yg on the basis z, x1, y1, ..., xg, yg (b1 = 2g + 1).
  static CupForm product_with_surface(int genus) {
    CupForm c(2 * genus + 1);
    for (int i = 1; i <= genus; ++i) c.add_term({1, 2 * i, 2 * i + 1}, 1);
    return c;
  }

  /// Adds `coefficient` to the value on the strictly increasing triple.
  void add_term(const Triple& t, const Integer& coefficient) {
    if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= b1_))
      throw Error("invalid_cup_form", "cup form triple must satisfy 1 <= i < j < k <= b1");
    const SubsetMask m = mask_of(t);
    Integer& slot = terms_[m];
    slot += coefficient;
    if (slot == 0) terms_.erase(m);
  }

  int b1() const noexcept { return b1_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Value on a 3-subset given as a 0-based bitmask.
  Integer value(SubsetMask triple) const {
    auto it = terms_.find(triple);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Nonzero terms keyed by 0-based bitmask.
  const std::map<SubsetMask, Integer>& terms() const noexcept { return terms_; }

  /// Terms as 1-based triples in lexicographic order.
  std::vector<std::pair<Triple, Integer>> sorted_terms() const {
    std::vector<std::pair<Triple, Integer>> out;
    for (const auto& [m, c] : terms_) out.emplace_back(triple_of(m), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Canonical text form, e.g. "1,2,3:1; 1,4,5:1". The zero form prints as "".
  std::string to_string() const {
    std::string s;
    for (const auto& [t, c] : sorted_terms()) {
      if (!s.empty()) s += "; ";
      s += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ":" + c.str();
    }
    return s;
  }

  friend bool operator==(const CupForm& a, const CupForm& b) { return a.b1_ == b.b1_ && a.terms_ == b.terms_; }

  static SubsetMask mask_of(const Triple& t) {
    return (SubsetMask{1} << (t[0] - 1)) | (SubsetMask{1} << (t[1] - 1)) | (SubsetMask{1} << (t[2] - 1));
  }

  static Triple triple_of(SubsetMask m) {
    Triple t{};
    for (int i = 0; i < 3; ++i) {
      t[i] = std::countr_zero(m) + 1;
      m &= m - 1;
    }
    return t;
  }

 private:
  int b1_;
  std::map<SubsetMask, Integer> terms_;
};

/// Parses the semicolon-separated `i,j,k:c` syntax. Errors report the
/// 0-based character offset where parsing stopped.
inline CupForm parse_cup_form(std::string_view text, int b1) {
  CupForm form(b1);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error("parse_error", "cup form at position " + std::to_string(pos) + ": " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> Integer {
    skip_space();
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) {
      pos = start;
      throw fail("expected an integer");
    }
    return Integer(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  std::map<SubsetMask, bool> seen;
  skip_space();
  while (pos < text.size()) {
    const std::size_t term_start = pos;
    CupForm::Triple t{};
    for (int i = 0; i < 3; ++i) {
      if (i) expect(',');
      const Integer idx = read_int(false);
      if (idx < 1 || idx > b1) throw fail("index out of range 1.." + std::to_string(b1));
      t[i] = idx.convert_to<int>();
    }
    expect(':');
    const Integer coeff = read_int(true);
    if (!(t[0] < t[1] && t[1] < t[2])) {
      pos = term_start;
      throw fail("indices must be strictly increasing");
    }
    const SubsetMask m = CupForm::mask_of(t);
    if (seen[m]) {
      pos = term_start;
      throw fail("repeated index triple");
    }
    seen[m] = true;
    form.add_term(t, coeff);
    skip_space();
    if (pos < text.size()) {
      expect(';');
      skip_space();
    }
  }
  return form;
}

}  // namespace floer::algebra
