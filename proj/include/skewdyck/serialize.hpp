#pragma once

// JSON form of exact data: every number is a decimal string ("p" or "p/q"),
// a t-polynomial is an array of such strings indexed by the power of t, and
// a series or sequence is an array of coefficients indexed by power of z.

#include <json.hpp>

#include <vector>

#include "skewdyck/series.hpp"
#include "skewdyck/tpoly.hpp"

namespace skewdyck {

inline nlohmann::json coefficient_json(const Integer& x) { return x.get_str(); }
inline nlohmann::json coefficient_json(const Rational& x) { return x.get_str(); }

template <class C>
nlohmann::json coefficient_json(const BasicTPoly<C>& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(coefficient_json(c));
  return arr;
}

template <class R>
nlohmann::json series_json(const ZSeries<R>& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coefficients()) arr.push_back(coefficient_json(c));
  return arr;
}

nlohmann::json sequence_json(const std::vector<Integer>& seq);

/// Inverse of series_json; throws std::invalid_argument on malformed input.
ZSeries<Rational> rational_series_from_json(const nlohmann::json& j);
ZSeries<RationalTPoly> tpoly_series_from_json(const nlohmann::json& j);

}  // namespace skewdyck
