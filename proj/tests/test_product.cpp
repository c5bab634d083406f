#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "floer/core/simplest.hpp"
#include "floer/product/presets.hpp"
#include "floer/product/symmetric_product.hpp"
#include "floer/product/theta.hpp"
#include "floer/product/waveguide.hpp"
#include "oracles.hpp"

using namespace floer;
using namespace floer::product;
using algebra::GradedVectorSpace;

namespace {

ProductSpectrumQuery<Rational> query(const std::string& lambda1, int genus, const std::string& scale,
                                     std::size_t count = 1) {
  return {{parse_rational(lambda1)}, genus, parse_rational(scale), count};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(CoexactSpectrum, Examples) {
  auto head = coexact_spectrum(query("3.84", 2, "0.25"));
  ASSERT_EQ(head.size(), 1u);
  EXPECT_EQ(head[0].value, parse_rational("3.84"));

  auto harmonic = coexact_spectrum(query("3.84", 2, "1", 8));
  ASSERT_EQ(harmonic.size(), 1u);
  EXPECT_EQ(harmonic[0].value, 1);
  EXPECT_EQ(harmonic[0].multiplicity, 8u);  // m = 1 and m = -1, 2g forms each

  for (const char* scale : {"0.01", "1", "100"}) {
    const auto all = coexact_spectrum(query("3.84", 0, scale, 5));
    EXPECT_EQ(all.front().value, parse_rational("3.84"));
    EXPECT_EQ(all.front().multiplicity, 1u);
  }
}

TEST(CoexactSpectrum, BranchesMerge) {
  // lambda_1 = 2, L = 1: harmonic 1 (x8), then 2 (lambda_1), then 3 (x2) and 4 (x8)
  const auto s = coexact_spectrum(query("2", 2, "1", 20));
  using V = SpectralValue<Rational>;
  const std::vector<V> want{{Rational(1), 8}, {Rational(2), 1}, {Rational(3), 2}, {Rational(4), 8}, {Rational(6), 1}};
  EXPECT_EQ(s, want);
}

TEST(CoexactSpectrum, MatchesBruteForce) {
  const std::vector<Rational> lambdas{Rational(3, 2), Rational(5, 2), Rational(5, 2), Rational(7)};
  for (int genus : {0, 1, 3})
    for (const auto& scale : {Rational(1, 3), Rational(1), Rational(2)}) {
      std::vector<Rational> modes;
      for (const auto& l : lambdas)
        for (int m = -40; m <= 40; ++m) modes.push_back(l + Rational(m * m) / (scale * scale));
      for (int m = -40; m <= 40; ++m)
        if (m != 0)
          for (int c = 0; c < 2 * genus; ++c) modes.push_back(Rational(m * m) / (scale * scale));
      std::sort(modes.begin(), modes.end());
      const std::size_t count = 37;
      const auto s = coexact_spectrum(ProductSpectrumQuery<Rational>{lambdas, genus, scale, count});
      std::vector<Rational> flat;
      for (const auto& e : s) flat.insert(flat.end(), e.multiplicity, e.value);
      EXPECT_EQ(flat, std::vector<Rational>(modes.begin(), modes.begin() + count));
    }
}

TEST(CoexactSpectrum, Errors) {
  EXPECT_THROW(coexact_spectrum(query("3.84", 2, "0")), Error);
  EXPECT_THROW(coexact_spectrum(query("3.84", 2, "-1")), Error);
  EXPECT_THROW(coexact_spectrum(ProductSpectrumQuery<Rational>{{}, 2, Rational(1), 1}), Error);
  EXPECT_THROW(coexact_spectrum(ProductSpectrumQuery<Rational>{{Rational(2), Rational(1)}, 2, Rational(1), 1}), Error);
}

TEST(Lambda1Star, Examples) {
  EXPECT_EQ(lambda1_star(query("3.84", 2, "0.25")), parse_rational("3.84"));
  EXPECT_EQ(lambda1_star(query("2.68", 3, "0.5")), parse_rational("2.68"));
  EXPECT_EQ(lambda1_star(query("3.84", 2, "2")), parse_rational("0.25"));
  ProductSpectrumQuery<double> q{{3.84}, 2, 0.25, 1};
  EXPECT_NEAR(lambda1_star(q), 3.84, 1e-12);
}

TEST(Lambda1Star, MonotoneInScale) {
  Rational previous = 0;
  for (int i = 400; i >= 1; --i) {
    const Rational scale(i, 100);
    const Rational v = lambda1_star(ProductSpectrumQuery<Rational>{{parse_rational("3.84")}, 2, scale, 1});
    EXPECT_GE(v, previous);
    EXPECT_EQ(v, std::min<Rational>(parse_rational("3.84"), 1 / (scale * scale)));
    if (scale * scale * parse_rational("3.84") < 1) EXPECT_EQ(v, parse_rational("3.84"));
    previous = v;
  }
}

TEST(SpectrallyLarge, Examples) {
  EXPECT_TRUE(spectrally_large(parse_rational("3.84"), Rational(-2)));
  EXPECT_FALSE(spectrally_large(parse_rational("0.9"), Rational(-2)));
  EXPECT_FALSE(spectrally_large(Rational(1), Rational(kHyperbolicProductSTilde)));
  EXPECT_TRUE(spectrally_large(parse_rational("1e-9"), Rational(0)));
  EXPECT_TRUE(spectrally_large(3.84, -2.0));
}

TEST(SymProduct, Examples) {
  EXPECT_EQ(sym_product_homology(3, 2), GradedVectorSpace::from_sequence({1, 6, 16, 6, 1}));
  EXPECT_EQ(sym_product_homology(2, 1), GradedVectorSpace::from_sequence({1, 4, 1}));
  EXPECT_EQ(sym_product_homology(5, 0), GradedVectorSpace::from_sequence({1}));
  EXPECT_THROW(sym_product_homology(-1, 2), Error);
  EXPECT_THROW(sym_product_homology(2, -1), Error);
}

TEST(SymProduct, OracleAndDuality) {
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; n <= 6; ++n) {
      const auto v = sym_product_homology(g, n);
      const auto seq = v.sequence(0, 2 * n);
      EXPECT_EQ(seq, oracle::sym_product_betti(g, n)) << g << " " << n;
      EXPECT_TRUE(std::equal(seq.begin(), seq.end(), seq.rbegin())) << g << " " << n;
    }
  for (int g = 0; g <= 6; ++g) EXPECT_EQ(sym_product_homology(g, 1).sequence(0, 2), (std::vector<std::size_t>{1, std::size_t(2 * g), 1}));
}

TEST(ThetaDatum, InclusionRanks) {
  const auto d2 = theta_datum(2);
  EXPECT_EQ(d2.b1, 5);
  EXPECT_EQ(d2.h_minus, sym_product_homology(2, 1));
  for (const auto& [k, m] : d2.inclusion) EXPECT_EQ(algebra::rank(m), m.cols()) << k;

  const auto d3 = theta_datum(3);
  EXPECT_EQ(d3.b1, 7);
  EXPECT_EQ(d3.h_minus, sym_product_homology(3, 2));
  for (const auto& [k, m] : d3.inclusion) EXPECT_EQ(m.cols() - algebra::rank(m), k == 2 ? 1u : 0u) << k;
}

TEST(ThetaDatum, CupForms) {
  EXPECT_EQ(theta_datum(2).cup.to_string(), "1,2,3:1; 1,4,5:1");
  EXPECT_EQ(theta_datum(3).cup, algebra::CupForm::product_with_surface(3));
}

TEST(ThetaDatum, Errors) {
  auto token_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.token();
    }
    return std::string("none");
  };
  EXPECT_EQ(token_of([] { theta_datum(4); }), "theta_divisor_singular");
  EXPECT_EQ(token_of([] { theta_datum(7); }), "theta_divisor_singular");
  EXPECT_EQ(token_of([] { theta_datum(1); }), "unsupported_preset");
  PresetTable presets;
  EXPECT_EQ(token_of([&] { theta_datum(presets.get("bring")); }), "theta_divisor_singular");
  EXPECT_EQ(theta_datum(presets.get("Klein")).b1, 7);
  SurfaceSpectralData hyper{"hyper3", 3, Rational(2), true, "test"};
  EXPECT_NE(token_of([&] { theta_datum(hyper); }), "none");
}

TEST(T3FlatDatum, Shape) {
  const auto d = t3_flat_datum();
  EXPECT_EQ(d.b1, 3);
  EXPECT_EQ(d.cup, algebra::CupForm::torus());
  EXPECT_EQ(d.h_minus, GradedVectorSpace::from_sequence({1}));
  EXPECT_EQ(d.inclusion.at(0), algebra::RationalMatrix::identity(1));
}

TEST(Presets, BuiltIns) {
  PresetTable t;
  EXPECT_EQ(t.get("bolza").lambda1, parse_rational("3.84"));
  EXPECT_EQ(t.get("bolza").genus, 2);
  EXPECT_EQ(t.get("klein").lambda1, parse_rational("2.68"));
  EXPECT_FALSE(t.get("klein").hyperelliptic);
  EXPECT_EQ(t.get("Bring").lambda1, parse_rational("1.92"));
  EXPECT_EQ(t.get("fricke_macbeath").genus, 7);
  EXPECT_THROW(t.get("nowhere"), Error);
}

TEST(Presets, LoadFromFile) {
  const auto single = temp_file("floer_preset_single.json",
                                R"({"name": "Test Surface", "genus": 2, "lambda1": 3.5, "hyperelliptic": true,
                                    "source": "made up"})");
  const auto list = temp_file("floer_preset_list.json",
                              R"([{"name": "bolza", "genus": 2, "lambda1": "3.8388", "hyperelliptic": true, "source": "x"},
                                  {"name": "other", "genus": 4, "lambda1": 1.5, "hyperelliptic": false, "source": "y"}])");
  PresetTable t;
  t.load_file(single);
  EXPECT_EQ(t.get("test-surface").lambda1, Rational(7, 2));
  t.load_search_path(list.string() + ":" + single.string());
  EXPECT_EQ(t.get("bolza").lambda1, parse_rational("3.8388"));
  EXPECT_TRUE(t.contains("other"));

  const auto bad = temp_file("floer_preset_bad.json", R"({"name": "x", "genus": 2, "lambda1": -1})");
  EXPECT_THROW(t.load_file(bad), Error);
  EXPECT_THROW(t.load_file("/nonexistent/preset.json"), Error);
}

TEST(EndToEnd, CorollariesFromPresets) {
  PresetTable t;
  const auto bolza = core::simplest_hm(theta_datum(t.get("bolza")), core::GradingMode::absolute);
  EXPECT_EQ(bolza.tower_part.tower_profile(), GradedVectorSpace::from_sequence({1, 9, 9, 1}, -4));
  const auto klein = core::simplest_hm(theta_datum(t.get("klein")), core::GradingMode::absolute);
  EXPECT_EQ(klein.tower_part.tower_profile(), GradedVectorSpace::from_sequence({1, 6, 28, 28, 6, 1}, -6));
  EXPECT_EQ(klein.reduced.torsion().size(), 1u);
}
