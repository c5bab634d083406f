#pragma once

#include <string>
#include <utility>
#include <vector>

#include "floer/algebra/graded.hpp"
#include "floer/algebra/umodule.hpp"
#include "floer/flat/kernel_locus.hpp"
#include "floer/flat/spectrum.hpp"
#include "json.hpp"

namespace floer::cli {

using nlohmann::json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Output of one command. `text` is the human table; the JSON form has
/// sorted keys and is byte-stable for identical inputs.
struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<Check> checks;
  std::string text;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"command", command}, {"inputs", inputs}, {"result", result}, {"checks", cs}};
  }

  std::string render_text() const {
    std::string out = text;
    for (const auto& c : checks) {
      out += (c.pass ? "PASS  " : "FAIL  ") + c.name;
      if (!c.detail.empty()) out += "  (" + c.detail + ")";
      out += "\n";
    }
    return out;
  }
};

/// Dense rank list from degree 0 up to `top`.
inline json ranks_json(const algebra::GradedVectorSpace& v, int lo, int hi) {
  json a = json::array();
  for (auto r : v.sequence(lo, hi)) a.push_back(r);
  return a;
}

inline std::string ranks_text(const algebra::GradedVectorSpace& v, int lo, int hi) {
  std::string s = "(";
  for (int d = lo; d <= hi; ++d) s += (d > lo ? "," : "") + std::to_string(v.rank(d));
  return s + ")";
}

/// {"towers":[{"degree","multiplicity"}], "reduced":[{"degree","u_length","rank"}]},
/// degrees descending.
inline json umodule_json(const algebra::GradedUModule& m) {
  json towers = json::array();
  const auto profile = m.tower_profile();
  for (auto it = profile.ranks().rbegin(); it != profile.ranks().rend(); ++it)
    towers.push_back({{"degree", it->first}, {"multiplicity", it->second}});
  json reduced = json::array();
  const auto counts = m.torsion_counts();
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    reduced.push_back({{"degree", it->first.degree}, {"u_length", it->first.u_length}, {"rank", it->second}});
  return {{"towers", towers}, {"reduced", reduced}};
}

inline std::string umodule_text(const algebra::GradedUModule& m) {
  std::string s;
  const auto profile = m.tower_profile();
  for (auto it = profile.ranks().rbegin(); it != profile.ranks().rend(); ++it)
    s += "  tower  degree " + std::to_string(it->first) + "  multiplicity " + std::to_string(it->second) + "\n";
  const auto counts = m.torsion_counts();
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    s += "  Q[U]/U^" + std::to_string(it->first.u_length) + "  degree " + std::to_string(it->first.degree) +
         "  rank " + std::to_string(it->second) + "\n";
  if (s.empty()) s = "  (zero module)\n";
  return s;
}

inline json spectrum_json(const flat::SpectrumWindow& w) {
  json entries = json::array();
  for (const auto& e : w.entries) entries.push_back({{"eigenvalue", e.value}, {"multiplicity", e.multiplicity}});
  return {{"radius", w.radius}, {"entries", entries}};
}

}  // namespace floer::cli
