#pragma once

// JSON forms. Every scalar is written as a pair of decimal strings
// [re, im], so exact and wrap64 values keep full precision.

#include "esym/esp.hpp"
#include "esym/polyzero.hpp"
#include "esym/scalar.hpp"

#include <nlohmann/json.hpp>

namespace esym {

template <ComplexScalar T>
nlohmann::json scalar_to_json(const T& z) {
  return nlohmann::json::array({part_to_string(z.re), part_to_string(z.im)});
}

/// {"n": n, "mode": "...", "rows": [[e11], [e21, e22], ...]}
template <ComplexScalar T>
nlohmann::json to_json(const EpsTable<T>& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= table.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const T& e : table.row(i)) row.push_back(scalar_to_json(e));
    rows.push_back(std::move(row));
  }
  return {{"n", table.size()}, {"mode", mode_name(mode_of<T>)}, {"rows", std::move(rows)}};
}

/// {"convention": "t0-leading", "mode": "...", "coeffs": [[re, im], ...]}
template <ComplexScalar T>
nlohmann::json to_json(const Poly1<T>& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const T& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
  return {{"convention", "t0-leading"}, {"mode", mode_name(mode_of<T>)}, {"coeffs", std::move(coeffs)}};
}

}  // namespace esym
