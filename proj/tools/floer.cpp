// floer: command-line front end for the Floer / flat-torus / waveguide tools.
//
// Exit codes: 0 success, 1 a showcase check failed, 2 usage or input error.
// Errors print a single line "error: <token>: <message>" on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floer/cli/commands.hpp"
#include "floer/cli/showcase.hpp"

namespace {

int emit(const floer::cli::Report& report, bool as_json) {
  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.render_text();
  return report.all_pass() ? 0 : 1;
}

std::string env_preset_path() {
  const char* v = std::getenv(floer::cli::kPresetPathEnv);
  return v ? v : "";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace floer;

  CLI::App app{"Floer homology, flat-torus Dirac and waveguide spectrum calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::vector<std::string> preset_files;
  app.add_flag("--json", as_json, "Emit the canonical JSON report");
  app.add_option("--preset-file", preset_files, "Extra surface preset file (JSON); repeatable");

  int b1 = 0;
  std::string cup;
  auto* hmbar = app.add_subcommand("hmbar", "HM-bar period from a triple cup product");
  hmbar->add_option("--b1", b1, "First Betti number")->required();
  hmbar->add_option("--cup", cup, "Cup form, e.g. \"1,2,3:1; 1,4,5:1\"")->required();

  std::string preset, datum_file, write_datum;
  bool absolute = false;
  auto* simplest = app.add_subcommand("simplest", "HM-to of a simplest-type datum");
  auto* preset_opt = simplest->add_option("--preset", preset, "t3-flat, bolza or klein");
  auto* datum_opt = simplest->add_option("--datum", datum_file, "Datum JSON file");
  preset_opt->excludes(datum_opt);
  simplest->add_flag("--absolute", absolute, "Top tower at degree -1 instead of 0");
  simplest->add_option("--write-datum", write_datum, "Also write the datum JSON to this file");

  auto* flat_t3 = app.add_subcommand("flat-t3", "Flat three-torus Dirac family");
  flat_t3->require_subcommand(1);
  std::string beta = "0,0,0", delta = "0.3", radius = "1", path;
  auto* spectrum = flat_t3->add_subcommand("spectrum", "Eigenvalues of D_beta - delta in a window");
  spectrum->add_option("--beta", beta, "Holonomy vector, e.g. pi,0,0.5pi")->required();
  spectrum->add_option("--delta", delta, "Constant perturbation")->required();
  spectrum->add_option("--radius", radius, "Window radius")->required();
  auto* locus = flat_t3->add_subcommand("locus", "Position relative to the kernel locus");
  locus->add_option("--beta", beta)->required();
  locus->add_option("--delta", delta)->required();
  auto* sf = flat_t3->add_subcommand("sf", "Spectral flow along a polyline");
  sf->add_option("--path", path, "Vertices separated by ';'")->required();
  sf->add_option("--delta", delta)->required();
  auto* spin = flat_t3->add_subcommand("spin", "Classify the eight spin points");
  spin->add_option("--delta", delta)->required();

  cli::WaveguideArgs wave;
  std::string lambda1_text, wave_preset;
  auto* waveguide = app.add_subcommand("waveguide", "Coexact spectrum of S^1 x Sigma");
  auto* wp = waveguide->add_option("--preset", wave_preset, "Surface preset name");
  auto* wl = waveguide->add_option("--lambda1", lambda1_text, "First eigenvalue of the surface");
  wp->excludes(wl);
  waveguide->add_option("--genus", wave.genus, "Genus used with --lambda1")->check(CLI::NonNegativeNumber);
  waveguide->add_option("--L", wave.circle_scale, "Circle parameter (circle = R / 2 pi L Z)")->required();
  waveguide->add_option("--count", wave.count, "Number of eigenvalues (with multiplicity)");
  waveguide->add_option("--s-tilde", wave.s_tilde, "inf of the two-smallest-Ricci-eigenvalue sum");

  auto* showcase = app.add_subcommand("showcase", "Run every golden check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*hmbar) return emit(cli::cmd_hmbar(b1, cup), as_json);
    if (*simplest) {
      const auto mode = absolute ? core::GradingMode::absolute : core::GradingMode::relative;
      if (preset.empty() == datum_file.empty()) throw Error("usage", "simplest needs exactly one of --preset, --datum");
      if (!write_datum.empty()) {
        const auto d = preset.empty() ? core::parse_datum(cli::read_file(datum_file)) : cli::preset_datum(preset);
        std::ofstream(write_datum) << core::serialize_datum(d);
      }
      return emit(preset.empty() ? cli::cmd_simplest_file(datum_file, mode) : cli::cmd_simplest_preset(preset, mode),
                  as_json);
    }
    if (*spectrum) return emit(cli::cmd_flat_spectrum(beta, delta, radius), as_json);
    if (*locus) return emit(cli::cmd_flat_locus(beta, delta), as_json);
    if (*sf) return emit(cli::cmd_flat_sf(path, delta), as_json);
    if (*spin) return emit(cli::cmd_flat_spin(delta), as_json);
    if (*waveguide) {
      product::PresetTable presets;
      presets.load_search_path(env_preset_path());
      for (const auto& f : preset_files) presets.load_file(f);
      if (*wp) wave.preset = wave_preset;
      if (*wl) wave.lambda1 = lambda1_text;
      return emit(cli::cmd_waveguide(wave, presets), as_json);
    }
    if (*showcase) return emit(cli::cmd_showcase(preset_files, env_preset_path()), as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.token() << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}
