#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "floer/cli/report.hpp"
#include "floer/floer.hpp"

namespace floer::cli {

/// Environment variable holding a ':'-separated list of preset files or
/// directories.
inline constexpr const char* kPresetPathEnv = "FLOER_PRESET_PATH";

inline json rational_json(const Rational& r) { return {{"exact", to_fraction_string(r)}, {"approx", to_double(r)}}; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- hmbar

inline Report cmd_hmbar(int b1, const std::string& cup_text) {
  const auto cup = algebra::parse_cup_form(cup_text, b1);
  const auto period = core::hm_bar(cup);
  Report r;
  r.command = "hmbar";
  r.inputs = {{"b1", b1}, {"cup", cup.to_string()}};
  r.result = {{"period", ranks_json(period, 0, b1)}, {"total", period.total()}};
  r.text = "HM-bar period (degrees 0.." + std::to_string(b1) + "): " + ranks_text(period, 0, b1) + "\n";
  return r;
}

// ---------------------------------------------------------------- simplest

inline core::SimplestTypeDatum preset_datum(const std::string& name) {
  if (name == "t3-flat") return product::t3_flat_datum();
  if (name == "bolza") return product::theta_datum(2);
  if (name == "klein") return product::theta_datum(3);
  throw Error("unknown_preset", "unknown datum preset '" + name + "' (expected t3-flat, bolza, klein)");
}

inline Report simplest_report(const core::SimplestTypeDatum& datum, core::GradingMode mode, json inputs) {
  const auto split = core::split_les(datum);
  const auto hm = core::simplest_hm(datum, mode);
  const int n = datum.b1;
  Report r;
  r.command = "simplest";
  r.inputs = std::move(inputs);
  r.inputs["grading"] = mode == core::GradingMode::relative ? "relative" : "absolute";
  r.result = {{"label", datum.label},
              {"b1", n},
              {"i_minus", ranks_json(split.i_minus, 0, n)},
              {"i_plus", ranks_json(split.i_plus, 0, n)},
              {"e", ranks_json(split.e, 0, n + 1)},
              {"hm_to", umodule_json(hm.total)},
              {"palindromic", core::palindrome_check(hm.tower_part)}};
  r.text = datum.label + "\n" + "  I-  " + ranks_text(split.i_minus, 0, n) + "\n  I+  " +
           ranks_text(split.i_plus, 0, n) + "\n  E   " + ranks_text(split.e, 0, n + 1) + "\n" +
           "HM-to (" + r.inputs["grading"].get<std::string>() + " grading):\n" + umodule_text(hm.total);
  return r;
}

inline Report cmd_simplest_preset(const std::string& preset, core::GradingMode mode) {
  return simplest_report(preset_datum(preset), mode, {{"preset", preset}});
}

inline Report cmd_simplest_file(const std::string& path, core::GradingMode mode) {
  return simplest_report(core::parse_datum(read_file(path)), mode, {{"datum_file", path}});
}

// ---------------------------------------------------------------- flat-t3

inline Report cmd_flat_spectrum(const std::string& beta, const std::string& delta, const std::string& radius) {
  const flat::FlatPoint p(flat::Point3::parse(beta));
  const double d = static_cast<double>(flat::parse_pi_linear(delta).approx());
  const double rad = static_cast<double>(flat::parse_pi_linear(radius).approx());
  const auto w = flat::dirac_spectrum(p, d, rad);
  Report r;
  r.command = "flat-t3 spectrum";
  r.inputs = {{"beta", beta}, {"delta", delta}, {"radius", radius}};
  r.result = spectrum_json(w);
  std::ostringstream os;
  os << "eigenvalues of D_beta - delta with |lambda| <= " << rad << ":\n";
  for (const auto& e : w.entries) os << "  " << json(e.value).dump() << "  x" << e.multiplicity << "\n";
  r.text = os.str();
  return r;
}

inline Report cmd_flat_locus(const std::string& beta, const std::string& delta) {
  const flat::FlatPoint p(flat::Point3::parse(beta));
  const auto side = flat::kernel_locus_membership(p, flat::Real::parse(delta));
  Report r;
  r.command = "flat-t3 locus";
  r.inputs = {{"beta", beta}, {"delta", delta}};
  r.result = {{"side", flat::to_string(side)}};
  r.text = std::string("beta is ") + flat::to_string(side) + " the kernel locus\n";
  return r;
}

inline Report cmd_flat_sf(const std::string& path, const std::string& delta) {
  const int sf = flat::spectral_flow(flat::PolyPath::parse(path), flat::Real::parse(delta));
  Report r;
  r.command = "flat-t3 sf";
  r.inputs = {{"path", path}, {"delta", delta}};
  r.result = {{"spectral_flow", sf}};
  r.text = "spectral flow: " + std::string(sf > 0 ? "+" : "") + std::to_string(sf) + "\n";
  return r;
}

inline Report cmd_flat_spin(const std::string& delta) {
  const auto pts = flat::spin_points(flat::Real::parse(delta));
  Report r;
  r.command = "flat-t3 spin";
  r.inputs = {{"delta", delta}};
  json list = json::array();
  int inside = 0;
  std::string text = "spin points (x fastest):\n";
  for (const auto& sp : pts) {
    const std::string where = flat::to_string(sp.side);
    list.push_back({{"point", sp.point.beta().to_string()}, {"side", where}, {"is_s0", sp.is_s0}});
    inside += sp.side == flat::LocusSide::inside;
    text += "  (" + sp.point.beta().to_string() + ")  " + where + (sp.is_s0 ? "  s0" : "") + "\n";
  }
  r.result = {{"points", list}, {"inside_count", inside}};
  r.text = text;
  return r;
}

// ---------------------------------------------------------------- waveguide

struct WaveguideArgs {
  std::optional<std::string> preset;
  std::optional<std::string> lambda1;
  int genus = 2;
  std::string circle_scale;
  std::size_t count = 1;
  std::string s_tilde = "-2";
};

inline Report cmd_waveguide(const WaveguideArgs& args, const product::PresetTable& presets) {
  product::ProductSpectrumQuery<Rational> q;
  json inputs;
  if (args.preset) {
    const auto& s = presets.get(*args.preset);
    q.surface_eigenvalues = {s.lambda1};
    q.genus = s.genus;
    inputs["preset"] = s.name;
  } else if (args.lambda1) {
    q.surface_eigenvalues = {parse_rational(*args.lambda1)};
    q.genus = args.genus;
    inputs["lambda1"] = *args.lambda1;
  } else {
    throw Error("usage", "waveguide needs --preset or --lambda1");
  }
  q.circle_scale = parse_rational(args.circle_scale);
  q.count = args.count;
  inputs["genus"] = q.genus;
  inputs["L"] = args.circle_scale;
  inputs["count"] = args.count;
  inputs["s_tilde_inf"] = args.s_tilde;

  const auto spectrum = product::coexact_spectrum(q);
  const Rational star = product::lambda1_star(q);
  const Rational s_tilde = parse_rational(args.s_tilde);
  const bool large = product::spectrally_large(star, s_tilde);

  json head = json::array();
  std::string text = "coexact spectrum head:\n";
  for (const auto& e : spectrum) {
    head.push_back({{"eigenvalue", rational_json(e.value)}, {"multiplicity", e.multiplicity}});
    text += "  " + json(to_double(e.value)).dump() + "  x" + std::to_string(e.multiplicity) + "\n";
  }
  const Rational threshold = -s_tilde / 2;
  Report r;
  r.command = "waveguide";
  r.inputs = std::move(inputs);
  r.result = {{"spectrum", head},
              {"lambda1_star", rational_json(star)},
              {"threshold", rational_json(threshold)},
              {"spectrally_large", large}};
  r.text = text + "lambda1* = " + json(to_double(star)).dump() + "\nspectrally large (threshold " +
           json(to_double(threshold)).dump() + "): " + (large ? "yes" : "no") + "\n";
  return r;
}

}  // namespace floer::cli
