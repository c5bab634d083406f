#pragma once

#include <string>

#include "floer/algebra/rational.hpp"
#include "floer/core/datum.hpp"
#include "json.hpp"

namespace floer::core {

using nlohmann::json;

inline json to_json(const GradedVectorSpace& v) {
  json out = json::object();
  for (const auto& [d, r] : v.ranks()) out[std::to_string(d)] = r;
  return out;
}

inline json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const SimplestTypeDatum& d) {
  json inclusion = json::object();
  for (const auto& [k, m] : d.inclusion) inclusion[std::to_string(k)] = to_json(m);
  return json{{"b1", d.b1},
              {"cup", d.cup.to_string()},
              {"h_minus", to_json(d.h_minus)},
              {"inclusion", std::move(inclusion)},
              {"label", d.label}};
}

namespace detail {

inline int parse_degree(const std::string& key) {
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw Error("parse_error", "degree key '" + key + "' is not an integer");
  return d;
}

inline Rational parse_entry(const json& e) {
  if (e.is_number_integer()) return Rational(e.get<long long>());
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw Error("parse_error", "matrix entry must be a \"p/q\" string or an integer");
}

inline RationalMatrix parse_matrix(const json& rows) {
  if (!rows.is_array()) throw Error("parse_error", "matrix must be an array of rows");
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  RationalMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (!rows[i].is_array() || rows[i].size() != nc) throw Error("parse_error", "matrix rows have unequal lengths");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = parse_entry(rows[i][j]);
  }
  return m;
}

}  // namespace detail

inline GradedVectorSpace graded_from_json(const json& j) {
  if (!j.is_object()) throw Error("parse_error", "graded ranks must be an object degree -> rank");
  GradedVectorSpace v;
  for (const auto& [key, val] : j.items()) {
    if (!val.is_number_integer() || val.get<long long>() < 0)
      throw Error("parse_error", "rank in degree " + key + " must be a nonnegative integer");
    v.set_rank(detail::parse_degree(key), val.get<std::size_t>());
  }
  return v;
}

/// Reads and validates a datum document.
inline SimplestTypeDatum datum_from_json(const json& j) {
  try {
    SimplestTypeDatum d;
    d.b1 = j.at("b1").get<int>();
    d.cup = algebra::parse_cup_form(j.at("cup").get<std::string>(), d.b1);
    d.h_minus = graded_from_json(j.at("h_minus"));
    for (const auto& [key, val] : j.at("inclusion").items())
      d.inclusion.emplace(detail::parse_degree(key), detail::parse_matrix(val));
    d.label = j.value("label", std::string{});
    validate(d);
    return d;
  } catch (const json::exception& e) {
    throw Error("parse_error", std::string("datum document: ") + e.what());
  }
}

inline std::string serialize_datum(const SimplestTypeDatum& d) { return to_json(d).dump(2) + "\n"; }

inline SimplestTypeDatum parse_datum(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("parse_error", std::string("datum document is not JSON: ") + e.what());
  }
  return datum_from_json(j);
}

}  // namespace floer::core
