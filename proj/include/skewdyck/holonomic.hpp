#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdyck/numeric.hpp"
#include "skewdyck/series.hpp"

namespace skewdyck {

/// Order-4 linear recurrence with polynomial coefficients satisfied by the
/// half-length counts s_n of up-down-red avoiding skew Dyck paths:
///
///   p0(n) s_n + p1(n) s_{n+1} + p2(n) s_{n+2} + p3(n) s_{n+3} + p4(n) s_{n+4} = 0
///
///   p0 = -44 n (n+1)          p1 = -2 (n+1)(10n - 7)
///   p2 = 3 (23n^2 + 106n + 115)
///   p3 = -32 (n+4)(n+3)       p4 = 4 (n+5)(n+4)
struct PRecurrence {
  static constexpr std::size_t kOrder = 4;
  static std::array<Integer, kOrder + 1> coefficients(long n);
};

class NonIntegralStep : public std::runtime_error {
 public:
  NonIntegralStep(long n, const std::string& what) : std::runtime_error(what), n_(n) {}
  /// Index n of the failing step (the term s_{n+4} could not be formed).
  long n() const { return n_; }

 private:
  long n_;
};

/// s_0..s_last from the first four terms. Every division by p4(n) must be
/// exact, otherwise NonIntegralStep is thrown.
std::vector<Integer> extend(const std::array<Integer, 4>& initial, std::size_t last);

/// Residual at every n with n + 4 < seq.size(); empty if seq is too short.
std::vector<Integer> recurrence_residual(const std::vector<Integer>& seq);

/// Index of the first nonzero residual, if any.
std::optional<std::size_t> first_recurrence_failure(const std::vector<Integer>& seq);

/// The ODE operator
///   (31z - 8) - 15z S - (2z-1)(44z^3+15z^2-48z+8) S' - z(11z^2+16z-4)(2z-1)^2 S''
/// applied to a truncated series; the result is known mod z^(order-2).
ZSeries<Rational> ode_residual(const ZSeries<Rational>& s);

}  // namespace skewdyck
