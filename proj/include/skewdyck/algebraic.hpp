#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skewdyck/series.hpp"

namespace skewdyck {

class NotARoot : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class SingularRoot : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// Polynomial equation sum_i c_i(z) S^i = 0 in an unknown series S. Each
/// c_i is an exact polynomial in z, stored densely by power of z.
template <class R>
class AlgEquation {
 public:
  using Poly = std::vector<R>;

  explicit AlgEquation(std::vector<Poly> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && all_zero(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.empty()) throw std::invalid_argument("algebraic equation has no nonzero coefficient");
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Poly>& coefficients() const { return coeffs_; }

  /// d/dS of the equation.
  AlgEquation derivative_in_s() const {
    if (degree() == 0) return AlgEquation({Poly{R(0)}}, Unchecked{});
    std::vector<Poly> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      Poly p = coeffs_[i];
      for (auto& c : p) c *= R(static_cast<long>(i));
      d.push_back(std::move(p));
    }
    return AlgEquation(std::move(d), Unchecked{});
  }

  /// Value at z = 0 and S = s.
  R evaluate_at_origin(const R& s) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * s;
      if (!it->empty()) acc += (*it)[0];
    }
    return acc;
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<std::vector<D>> out;
    for (const auto& p : coeffs_) {
      std::vector<D> q;
      for (const auto& c : p) q.push_back(f(c));
      out.push_back(std::move(q));
    }
    return AlgEquation<D>(std::move(out));
  }

 private:
  struct Unchecked {};
  AlgEquation(std::vector<Poly> coefficients, Unchecked) : coeffs_(std::move(coefficients)) {}

  static bool all_zero(const Poly& p) {
    for (const auto& c : p)
      if (!is_zero(c)) return false;
    return true;
  }

  std::vector<Poly> coeffs_;
};

/// sum_i c_i(z) S^i, known to the order of S (Horner in S).
template <class R>
ZSeries<R> residual(const AlgEquation<R>& eq, const ZSeries<R>& s) {
  const auto& c = eq.coefficients();
  ZSeries<R> acc = ZSeries<R>::from_polynomial(c.back(), s.order());
  for (std::size_t i = c.size() - 1; i-- > 0;)
    acc = acc * s + ZSeries<R>::from_polynomial(c[i], s.order());
  return acc;
}

enum class SolveMethod {
  NewtonDoubling,     // precision 1, 2, 4, 8, ...
  NewtonIncremental,  // precision 1, 2, 3, 4, ...
  UndeterminedCoefficients,
};

struct SolveOptions {
  SolveMethod method = SolveMethod::NewtonDoubling;
};

/// The unique series root of eq with constant term s0, modulo z^order.
///
/// Requires eq(0, s0) = 0 (NotARoot otherwise) and d eq/dS (0, s0) to be a
/// unit (SingularRoot otherwise). The undetermined-coefficients method does
/// not use Newton at all and is kept as an independent cross-check.
template <class R>
ZSeries<R> solve_algebraic(const AlgEquation<R>& eq, const R& s0, std::size_t order,
                           SolveOptions options = {}) {
  if (!is_zero(eq.evaluate_at_origin(s0)))
    throw NotARoot("s0 = " + to_string(s0) + " is not a root at z = 0");
  const AlgEquation<R> deq = eq.derivative_in_s();
  const R d0 = deq.evaluate_at_origin(s0);
  if (!is_unit(d0)) throw SingularRoot("derivative " + to_string(d0) + " at the root is not a unit");

  ZSeries<R> s = ZSeries<R>::constant(s0, std::min<std::size_t>(order, 1));
  if (order <= 1) return s;

  if (options.method == SolveMethod::UndeterminedCoefficients) {
    const R inv_d0 = inverse(d0);
    for (std::size_t n = 1; n < order; ++n) {
      s = s.zero_extended(n + 1);
      const ZSeries<R> r = residual(eq, s);
      s[n] = -(r[n] * inv_d0);
    }
    return s;
  }

  std::size_t precision = 1;
  while (precision < order) {
    precision = options.method == SolveMethod::NewtonDoubling ? std::min(2 * precision, order) : precision + 1;
    s = s.zero_extended(precision);
    s = s - residual(eq, s) * reciprocal(residual(deq, s));
  }
  return s;
}

}  // namespace skewdyck
