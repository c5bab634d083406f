#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "floer/algebra/rational.hpp"
#include "floer/error.hpp"
#include "json.hpp"

namespace floer::product {

/// Spectral data of a closed surface: lambda1 is the first nonzero Laplace
/// eigenvalue on functions, kept as the exact decimal it was quoted with.
struct SurfaceSpectralData {
  std::string name;
  int genus = 0;
  Rational lambda1;
  bool hyperelliptic = false;
  std::string source;

  double lambda1_value() const { return to_double(lambda1); }

  friend bool operator==(const SurfaceSpectralData&, const SurfaceSpectralData&) = default;
};

inline std::string normalize_preset_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
    return c == '_' || c == ' ' ? '-' : static_cast<char>(std::tolower(c));
  });
  return name;
}

inline const std::vector<SurfaceSpectralData>& builtin_surfaces() {
  static const std::vector<SurfaceSpectralData> table = {
      {"bolza", 2, Rational(384, 100), true, "Bolza surface y^2 = x^5 - x; published numerical lambda1 ~ 3.84"},
      {"klein", 3, Rational(268, 100), false, "Klein quartic x^3 y + y^3 z + z^3 x = 0; published numerical lambda1 ~ 2.68"},
      {"bring", 4, Rational(192, 100), false, "Bring curve; published numerical lambda1 ~ 1.92"},
      // Only the interval [1.23, 1.26] is known; the lower end is stored.
      {"fricke-macbeath", 7, Rational(123, 100), false,
       "Fricke-Macbeath surface; published bounds lambda1 in [1.23, 1.26]; lower bound stored"},
  };
  return table;
}

inline SurfaceSpectralData surface_from_json(const nlohmann::json& j) {
  try {
    SurfaceSpectralData s;
    s.name = normalize_preset_name(j.at("name").get<std::string>());
    if (s.name.empty()) throw Error("invalid_preset", "preset name is empty");
    s.genus = j.at("genus").get<int>();
    const auto& l = j.at("lambda1");
    if (l.is_string())
      s.lambda1 = parse_rational(l.get<std::string>());
    else if (l.is_number())
      s.lambda1 = parse_rational(l.dump());  // shortest decimal text of the JSON number
    else
      throw Error("invalid_preset", "lambda1 must be a number");
    s.hyperelliptic = j.at("hyperelliptic").get<bool>();
    s.source = j.at("source").get<std::string>();
    if (s.genus < 0) throw Error("invalid_preset", "preset '" + s.name + "' has negative genus");
    if (s.lambda1 <= 0) throw Error("invalid_preset", "preset '" + s.name + "' needs lambda1 > 0");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid_preset", std::string("preset entry: ") + e.what());
  }
}

inline nlohmann::json to_json(const SurfaceSpectralData& s) {
  return {{"name", s.name},
          {"genus", s.genus},
          {"lambda1", to_double(s.lambda1)},
          {"hyperelliptic", s.hyperelliptic},
          {"source", s.source}};
}

/// A preset file holds one preset object or an array of them.
inline std::vector<SurfaceSpectralData> load_preset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open preset file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid_preset", "preset file " + path.string() + " is not valid JSON: " + e.what());
  }
  std::vector<SurfaceSpectralData> out;
  if (doc.is_array()) {
    for (const auto& entry : doc) out.push_back(surface_from_json(entry));
  } else {
    out.push_back(surface_from_json(doc));
  }
  return out;
}

/// Built-in surfaces extended (or overridden, by name) with user presets.
class PresetTable {
 public:
  PresetTable() {
    for (const auto& s : builtin_surfaces()) entries_[s.name] = s;
  }

  void add(const SurfaceSpectralData& s) { entries_[s.name] = s; }

  void load_file(const std::filesystem::path& path) {
    for (const auto& s : load_preset_file(path)) add(s);
  }

  /// Loads every entry of a search path: files directly, directories by
  /// their *.json children in name order. Entries are ':'-separated.
  void load_search_path(const std::string& search_path) {
    std::stringstream ss(search_path);
    std::string item;
    while (std::getline(ss, item, ':')) {
      if (item.empty()) continue;
      const std::filesystem::path p(item);
      if (std::filesystem::is_directory(p)) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(p))
          if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) load_file(f);
      } else {
        load_file(p);
      }
    }
  }

  const SurfaceSpectralData& get(const std::string& name) const {
    auto it = entries_.find(normalize_preset_name(name));
    if (it == entries_.end()) throw Error("unknown_preset", "unknown surface preset '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const { return entries_.contains(normalize_preset_name(name)); }

  const std::map<std::string, SurfaceSpectralData>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, SurfaceSpectralData> entries_;
};

}  // namespace floer::product
