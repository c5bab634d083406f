#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "floer/cli/commands.hpp"

namespace floer::cli {

namespace detail {

inline algebra::CupForm random_cup_form(std::mt19937_64& rng, int b1) {
  algebra::CupForm cup(b1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::bernoulli_distribution keep(0.3);
  const algebra::ExteriorBasis triples(b1, 3);
  for (auto t : triples.subsets())
    if (keep(rng)) cup.add_term(algebra::CupForm::triple_of(t), coeff(rng));
  return cup;
}

inline flat::Point3 random_point_off_locus(std::mt19937_64& rng, double delta, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  while (true) {
    flat::Point3 p(u(rng), u(rng), u(rng));
    if (flat::kernel_locus_membership(p, delta) != flat::LocusSide::on) return p;
  }
}

/// Closed loop in the torus: ends at start + 2 pi k for k in {0, e_1, e_2, e_3}.
inline flat::PolyPath random_loop(std::mt19937_64& rng, double delta) {
  std::uniform_int_distribution<int> wrap(-1, 2);
  std::uniform_real_distribution<double> noise(-1.0, 1.0);
  const flat::Point3 start = random_point_off_locus(rng, delta, 3.0);
  const int axis = wrap(rng);
  const int steps = 6;
  flat::PolyPath path{{start}};
  for (int j = 1; j < steps; ++j) {
    flat::Point3 v = start;
    for (int c = 0; c < 3; ++c) {
      v.approx[c] += noise(rng);
      if (c == axis) v.approx[c] += flat::kTwoPi * j / steps;
    }
    if (flat::kernel_locus_membership(v, delta) == flat::LocusSide::on) continue;
    path.vertices.push_back(v);
  }
  flat::Point3 end = start;
  end.exact.reset();
  if (axis >= 0) end.approx[axis] += flat::kTwoPi;
  path.vertices.push_back(end);
  return path;
}

inline flat::PolyPath random_path(std::mt19937_64& rng, double delta, const flat::Point3& start, int steps) {
  std::uniform_real_distribution<double> step(-2.5, 2.5);
  flat::PolyPath path{{start}};
  while (static_cast<int>(path.vertices.size()) <= steps) {
    flat::Point3 v = path.vertices.back();
    v.exact.reset();
    for (auto& c : v.approx) c += step(rng);
    if (flat::kernel_locus_membership(v, delta) != flat::LocusSide::on) path.vertices.push_back(v);
  }
  return path;
}

inline Check run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string failure = body();
    return {name, failure.empty(), failure};
  } catch (const Error& e) {
    return {name, false, e.token() + ": " + e.what()};
  }
}

inline std::string expect_towers(const core::SimplestHM& hm, const std::vector<std::pair<int, std::size_t>>& towers,
                                 const std::vector<int>& torsion_degrees) {
  algebra::GradedVectorSpace want;
  for (const auto& [d, m] : towers) want.set_rank(d, m);
  if (!(hm.tower_part.tower_profile() == want)) {
    std::ostringstream os;
    os << "towers " << hm.tower_part.tower_profile() << " != " << want;
    return os.str();
  }
  std::vector<algebra::TorsionSummand> t;
  for (int d : torsion_degrees) t.push_back({d, 1});
  if (!(hm.reduced == algebra::GradedUModule({}, t))) {
    std::ostringstream os;
    os << "reduced " << hm.reduced;
    return os.str();
  }
  return {};
}

}  // namespace detail

/// Runs every golden check; optional preset files are loaded as an extra check.
inline Report cmd_showcase(const std::vector<std::string>& preset_files, const std::string& preset_search_path) {
  using core::GradingMode;
  Report r;
  r.command = "showcase";
  r.inputs = {{"preset_files", preset_files}, {"preset_path", preset_search_path}};

  product::PresetTable presets;
  if (!preset_files.empty() || !preset_search_path.empty()) {
    r.checks.push_back(detail::run_check("preset_files_load", [&]() -> std::string {
      presets.load_search_path(preset_search_path);
      for (const auto& f : preset_files) presets.load_file(f);
      return {};
    }));
  }

  r.checks.push_back(detail::run_check("hmbar_t3", [] {
    const auto p = core::hm_bar(algebra::CupForm::torus());
    return p == algebra::GradedVectorSpace::from_sequence({0, 3, 3, 0}) ? std::string{} : "period " + ranks_text(p, 0, 3);
  }));

  r.checks.push_back(detail::run_check("bolza_towers", [] {
    const auto hm = core::simplest_hm(product::theta_datum(2), GradingMode::absolute);
    return detail::expect_towers(hm, {{-1, 1}, {-2, 9}, {-3, 9}, {-4, 1}}, {});
  }));

  r.checks.push_back(detail::run_check("klein_towers", [] {
    const auto hm = core::simplest_hm(product::theta_datum(3), GradingMode::absolute);
    return detail::expect_towers(hm, {{-1, 1}, {-2, 6}, {-3, 28}, {-4, 28}, {-5, 6}, {-6, 1}}, {-4});
  }));

  r.checks.push_back(detail::run_check("t3_flat_datum", [] {
    const auto hm = core::simplest_hm(product::t3_flat_datum(), GradingMode::relative);
    return detail::expect_towers(hm, {{0, 3}, {-1, 3}}, {});
  }));

  r.checks.push_back(detail::run_check("mainspin_flat", [] {
    for (const char* d : {"0.1", "0.3", "3.0"}) {
      for (const auto& sp : flat::spin_points(flat::Real::parse(d))) {
        const auto want = sp.is_s0 ? flat::LocusSide::inside : flat::LocusSide::outside;
        if (sp.side != want) return "delta " + std::string(d) + ": point " + sp.point.beta().to_string() + " is " +
                                    flat::to_string(sp.side);
      }
    }
    return std::string{};
  }));

  r.checks.push_back(detail::run_check("spectral_flow_suite", [] {
    const flat::Real delta = flat::Real::parse("0.3");
    if (int sf = flat::spectral_flow(flat::PolyPath::parse("0,0,0.1 ; pi,pi,pi"), delta); sf != 1)
      return "center to outside gave " + std::to_string(sf);
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i)
      if (int sf = flat::spectral_flow(detail::random_loop(rng, 0.3), 0.3); sf != 0)
        return "loop " + std::to_string(i) + " has spectral flow " + std::to_string(sf);
    for (int i = 0; i < 1000; ++i) {
      const auto first = detail::random_path(rng, 0.3, detail::random_point_off_locus(rng, 0.3, 4.0), 4);
      const auto second = detail::random_path(rng, 0.3, first.vertices.back(), 4);
      const int whole = flat::spectral_flow(first.then(second), 0.3);
      if (whole != flat::spectral_flow(first, 0.3) + flat::spectral_flow(second, 0.3))
        return "additivity fails on pair " + std::to_string(i);
    }
    return std::string{};
  }));

  r.checks.push_back(detail::run_check("waveguide", [&] {
    product::ProductSpectrumQuery<Rational> bolza{{presets.get("bolza").lambda1}, 2, Rational(1, 4), 1};
    const Rational star = product::lambda1_star(bolza);
    if (star != Rational(384, 100) || !product::spectrally_large(star, Rational(-2)))
      return "bolza L=0.25 gave " + to_fraction_string(star);
    product::ProductSpectrumQuery<Rational> wide{{Rational(384, 100)}, 2, Rational(2), 1};
    const Rational low = product::lambda1_star(wide);
    if (low != Rational(1, 4) || product::spectrally_large(low, Rational(-2)))
      return "lambda1=3.84 L=2 gave " + to_fraction_string(low);
    return std::string{};
  }));

  r.checks.push_back(detail::run_check("iota_squared_zero", [] {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> rank(3, 8);
    for (int i = 0; i < 200; ++i) {
      const auto cup = detail::random_cup_form(rng, rank(rng));
      for (int k = 3; k <= cup.b1(); ++k)
        if (k >= 6 && !(algebra::contraction_matrix(cup, k - 3) * algebra::contraction_matrix(cup, k)).is_zero())
          return "form " + cup.to_string() + " degree " + std::to_string(k);
    }
    return std::string{};
  }));

  r.checks.push_back(detail::run_check("tower_count_equals_hmbar", [] {
    for (const auto& d : {product::t3_flat_datum(), product::theta_datum(2), product::theta_datum(3)}) {
      const auto hm = core::simplest_hm(d);
      if (hm.tower_part.towers().size() != core::hm_bar(d.cup).total()) return d.label;
    }
    return std::string{};
  }));

  r.checks.push_back(detail::run_check("sym2_genus3", [] {
    const auto h = product::sym_product_homology(3, 2);
    return h == algebra::GradedVectorSpace::from_sequence({1, 6, 16, 6, 1}) ? std::string{} : ranks_text(h, 0, 4);
  }));

  r.checks.push_back(detail::run_check("palindromes", [] {
    for (const auto& d : {product::t3_flat_datum(), product::theta_datum(2), product::theta_datum(3)})
      if (!core::palindrome_check(core::simplest_hm(d).tower_part)) return d.label;
    return std::string{};
  }));

  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.pass;
  r.result = {{"passed", passed}, {"total", r.checks.size()}};
  r.text = "showcase: " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks pass\n";
  return r;
}

}  // namespace floer::cli
