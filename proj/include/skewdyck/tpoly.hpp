#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skewdyck/numeric.hpp"

namespace skewdyck {

/// Polynomial in the occurrence marker t. Index i of the coefficient vector
/// holds the coefficient of t^i; trailing zeros are never stored, so the
/// zero polynomial has no coefficients at all.
template <class C>
class BasicTPoly {
 public:
  using coefficient_type = C;

  BasicTPoly() = default;
  BasicTPoly(long c) : coeffs_{C(c)} { normalize(); }  // NOLINT: implicit constant
  explicit BasicTPoly(C c) : coeffs_{std::move(c)} { normalize(); }
  explicit BasicTPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static BasicTPoly t() { return BasicTPoly(std::vector<C>{C(0), C(1)}); }

  static BasicTPoly monomial(C c, std::size_t degree) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = std::move(c);
    return BasicTPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }

  C evaluate(const C& t) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  C coefficient_sum() const {
    C acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }

  template <class D>
  BasicTPoly<D> cast() const {
    std::vector<D> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.emplace_back(c);
    return BasicTPoly<D>(std::move(v));
  }

  BasicTPoly& operator+=(const BasicTPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  BasicTPoly& operator-=(const BasicTPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  BasicTPoly& operator*=(const BasicTPoly& o) { return *this = *this * o; }

  BasicTPoly& operator*=(const C& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend BasicTPoly operator+(BasicTPoly a, const BasicTPoly& b) { return a += b; }
  friend BasicTPoly operator-(BasicTPoly a, const BasicTPoly& b) { return a -= b; }

  friend BasicTPoly operator-(BasicTPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend BasicTPoly operator*(const BasicTPoly& a, const BasicTPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BasicTPoly(std::move(out));
  }

  friend BasicTPoly operator*(BasicTPoly a, const C& s) { return a *= s; }

  friend bool operator==(const BasicTPoly& a, const BasicTPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "2+t", "71+64t+2t^2", "0".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (skewdyck::is_zero(coeffs_[i])) continue;
      std::string c = skewdyck::to_string(coeffs_[i]);
      bool negative = c.front() == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? "-" : "+";
      }
      if (i == 0 || c != "1") out += c;
      if (i >= 1) out += 't';
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && skewdyck::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

/// Occurrence histogram with exact integer counts.
using TPoly = BasicTPoly<Integer>;
/// Coefficient ring of bivariate series; Newton steps need rational coefficients.
using RationalTPoly = BasicTPoly<Rational>;

template <class C>
bool is_zero(const BasicTPoly<C>& p) {
  return p.is_zero();
}

/// Units of C[t] are the nonzero constants when C is a field.
template <class C>
bool is_unit(const BasicTPoly<C>& p) {
  return p.degree() == 0 && is_unit(p.coeff(0));
}

template <class C>
BasicTPoly<C> inverse(const BasicTPoly<C>& p) {
  if (!is_unit(p)) throw std::domain_error("t-polynomial is not invertible: " + p.to_string());
  return BasicTPoly<C>(inverse(p.coeff(0)));
}

template <class C>
std::string to_string(const BasicTPoly<C>& p) {
  return p.to_string();
}

template <class T>
inline constexpr bool is_tpoly_v = false;
template <class C>
inline constexpr bool is_tpoly_v<BasicTPoly<C>> = true;

}  // namespace skewdyck
