#include "skewdyck/serialize.hpp"

namespace skewdyck {

nlohmann::json sequence_json(const std::vector<Integer>& seq) {
  auto arr = nlohmann::json::array();
  for (const auto& x : seq) arr.push_back(x.get_str());
  return arr;
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a decimal string");
  return parse_rational(j.get<std::string>());
}

}  // namespace

ZSeries<Rational> rational_series_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("series must be a JSON array");
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return ZSeries<Rational>(std::move(v));
}

ZSeries<RationalTPoly> tpoly_series_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("series must be a JSON array");
  std::vector<RationalTPoly> v;
  for (const auto& poly : j) {
    if (!poly.is_array()) throw std::invalid_argument("t-polynomial must be a JSON array");
    std::vector<Rational> coeffs;
    for (const auto& c : poly) coeffs.push_back(rational_from_json(c));
    v.emplace_back(std::move(coeffs));
  }
  return ZSeries<RationalTPoly>(std::move(v));
}

}  // namespace skewdyck
