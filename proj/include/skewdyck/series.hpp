#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewdyck/numeric.hpp"
#include "skewdyck/tpoly.hpp"

namespace skewdyck {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by div when the divisor cannot be inverted, even after stripping
/// a common power of z.
class DivisionByNonUnit : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// Truncated power series in z over an exact ring R.
///
/// A series of order N is known modulo z^N: it stores exactly N coefficients
/// and every operation propagates the order it can guarantee. Binary
/// arithmetic works modulo the smaller order; derivative loses one; stripping
/// z^v loses v; multiplying by z^k gains k.
template <class R>
class ZSeries {
 public:
  using ring_type = R;

  ZSeries() = default;
  explicit ZSeries(std::size_t order) : coeffs_(order, R(0)) {}
  explicit ZSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Exact polynomial (coefficients listed by power) viewed modulo z^order.
  static ZSeries from_polynomial(const std::vector<R>& poly, std::size_t order) {
    ZSeries s(order);
    for (std::size_t i = 0; i < std::min(order, poly.size()); ++i) s.coeffs_[i] = poly[i];
    return s;
  }

  static ZSeries constant(R c, std::size_t order) {
    ZSeries s(order);
    if (order > 0) s.coeffs_[0] = std::move(c);
    return s;
  }

  static ZSeries monomial(R c, std::size_t power, std::size_t order) {
    ZSeries s(order);
    if (power < order) s.coeffs_[power] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  R& operator[](std::size_t i) { return coeffs_.at(i); }

  /// Lowers the order; asking for more precision than is known throws.
  ZSeries truncated(std::size_t order) const {
    if (order > coeffs_.size())
      throw SeriesError("cannot raise order " + std::to_string(coeffs_.size()) + " to " +
                        std::to_string(order));
    return ZSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  /// Appends zero coefficients. Only meaningful when the caller knows the
  /// tail (e.g. Newton lifting a partial solution), hence the explicit name.
  ZSeries zero_extended(std::size_t order) const {
    ZSeries s = *this;
    if (order > s.coeffs_.size()) s.coeffs_.resize(order, R(0));
    return s;
  }

  /// Index of the first nonzero coefficient, or order() if none is known.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero(coeffs_[i])) return i;
    return coeffs_.size();
  }

  bool is_zero_mod_order() const { return valuation() == coeffs_.size(); }

  /// z^k * this, known modulo z^(order+k).
  ZSeries shifted_up(std::size_t k) const {
    std::vector<R> v(k, R(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return ZSeries(std::move(v));
  }

  /// this / z^k; the first k coefficients must vanish.
  ZSeries shifted_down(std::size_t k) const {
    if (k > coeffs_.size()) throw SeriesError("shift exceeds known order");
    for (std::size_t i = 0; i < k; ++i)
      if (!is_zero(coeffs_[i])) throw DivisionByNonUnit("series is not divisible by z^" + std::to_string(k));
    return ZSeries(std::vector<R>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  /// Formal derivative d/dz, order decreases by one.
  ZSeries derivative() const {
    if (coeffs_.empty()) return {};
    std::vector<R> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      R c = coeffs_[i];
      c *= R(static_cast<long>(i));
      v.push_back(std::move(c));
    }
    return ZSeries(std::move(v));
  }

  /// Keeps every step-th coefficient (z^step -> z). The skipped coefficients
  /// must be zero, otherwise the substitution would lose information.
  ZSeries compressed(std::size_t step) const {
    if (step == 0) throw SeriesError("compression step must be positive");
    std::vector<R> v;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i % step == 0)
        v.push_back(coeffs_[i]);
      else if (!is_zero(coeffs_[i]))
        throw SeriesError("coefficient of z^" + std::to_string(i) + " is nonzero; cannot compress");
    }
    return ZSeries(std::move(v));
  }

  template <class F>
  auto map(F&& f) const -> ZSeries<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<D> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return ZSeries<D>(std::move(v));
  }

  ZSeries& operator+=(const ZSeries& o) {
    coeffs_.resize(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  ZSeries& operator-=(const ZSeries& o) {
    coeffs_.resize(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  ZSeries& operator*=(const R& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }

  friend ZSeries operator-(ZSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    ZSeries out(n);
    for (std::size_t i = va; i < n; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = vb; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend ZSeries operator*(ZSeries a, const R& s) { return a *= s; }

  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<R> coeffs_;
};

/// Product with an exact polynomial in z; the order of s is preserved.
template <class R>
ZSeries<R> mul_polynomial(const std::vector<R>& poly, const ZSeries<R>& s) {
  return ZSeries<R>::from_polynomial(poly, s.order()) * s;
}

template <class R>
ZSeries<R> pow(const ZSeries<R>& a, unsigned k) {
  ZSeries<R> result = ZSeries<R>::constant(R(1), a.order());
  ZSeries<R> base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Multiplicative inverse; the constant term must be a unit of R.
template <class R>
ZSeries<R> reciprocal(const ZSeries<R>& b) {
  const std::size_t n = b.order();
  if (n == 0) return {};
  if (!is_unit(b[0])) throw DivisionByNonUnit("constant term " + to_string(b[0]) + " is not a unit");
  const R inv0 = inverse(b[0]);
  ZSeries<R> out(n);
  out[0] = inv0;
  for (std::size_t i = 1; i < n; ++i) {
    R acc(0);
    for (std::size_t k = 1; k <= i; ++k)
      if (!is_zero(b[k])) acc += b[k] * out[i - k];
    out[i] = -(acc * inv0);
  }
  return out;
}

/// a / b. If b(0) is not a unit, a common factor z^v is stripped from both
/// first (v = valuation of b), which costs v orders of precision.
template <class R>
ZSeries<R> div(const ZSeries<R>& a, const ZSeries<R>& b) {
  if (b.order() > 0 && is_unit(b[0])) return a * reciprocal(b);
  const std::size_t v = b.valuation();
  if (v == 0 || v >= b.order())
    throw DivisionByNonUnit("divisor has no invertible leading coefficient");
  if (!is_unit(b[v])) throw DivisionByNonUnit("leading coefficient " + to_string(b[v]) + " is not a unit");
  if (a.order() < v) throw DivisionByNonUnit("dividend known to fewer than " + std::to_string(v) + " terms");
  ZSeries<R> num;
  try {
    num = a.shifted_down(v);
  } catch (const DivisionByNonUnit&) {
    throw DivisionByNonUnit("dividend does not share the factor z^" + std::to_string(v) + " of the divisor");
  }
  return num * reciprocal(b.shifted_down(v));
}

/// Replaces t by a value in every coefficient.
template <class C>
ZSeries<C> evaluate_t(const ZSeries<BasicTPoly<C>>& s, const C& t) {
  return s.map([&](const BasicTPoly<C>& p) { return p.evaluate(t); });
}

/// Lifts a series over C into the ring C[t] (constant polynomials).
template <class C>
ZSeries<BasicTPoly<C>> lift_to_tpoly(const ZSeries<C>& s) {
  return s.map([](const C& c) { return BasicTPoly<C>(c); });
}

}  // namespace skewdyck
