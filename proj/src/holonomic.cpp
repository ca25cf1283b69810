#include "skewdyck/holonomic.hpp"

namespace skewdyck {

std::array<Integer, 5> PRecurrence::coefficients(long n) {
  const Integer m(n);
  return {
      Integer(-44 * m * (m + 1)),
      Integer(-2 * (m + 1) * (10 * m - 7)),
      Integer(3 * (115 + 106 * m + 23 * m * m)),
      Integer(-32 * (m + 4) * (m + 3)),
      Integer(4 * (m + 5) * (m + 4)),
  };
}

std::vector<Integer> extend(const std::array<Integer, 4>& initial, std::size_t last) {
  if (last < 3) throw std::invalid_argument("extend needs last index >= 3");
  std::vector<Integer> s(initial.begin(), initial.end());
  s.reserve(last + 1);
  for (std::size_t n = 0; n + 4 <= last; ++n) {
    const auto p = PRecurrence::coefficients(static_cast<long>(n));
    Integer acc = p[0] * s[n] + p[1] * s[n + 1] + p[2] * s[n + 2] + p[3] * s[n + 3];
    acc = -acc;
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), p[4].get_mpz_t());
    if (sgn(r) != 0)
      throw NonIntegralStep(static_cast<long>(n), "recurrence step n = " + std::to_string(n) + ": " +
                                                      acc.get_str() + " is not divisible by " + p[4].get_str());
    s.push_back(std::move(q));
  }
  return s;
}

std::vector<Integer> recurrence_residual(const std::vector<Integer>& seq) {
  std::vector<Integer> out;
  for (std::size_t n = 0; n + 4 < seq.size(); ++n) {
    const auto p = PRecurrence::coefficients(static_cast<long>(n));
    Integer acc(0);
    for (std::size_t i = 0; i <= 4; ++i) acc += p[i] * seq[n + i];
    out.push_back(std::move(acc));
  }
  return out;
}

std::optional<std::size_t> first_recurrence_failure(const std::vector<Integer>& seq) {
  const auto r = recurrence_residual(seq);
  for (std::size_t n = 0; n < r.size(); ++n)
    if (sgn(r[n]) != 0) return n;
  return std::nullopt;
}

namespace {

std::vector<Rational> poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return v;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

ZSeries<Rational> ode_residual(const ZSeries<Rational>& s) {
  if (s.order() < 2) throw std::invalid_argument("ode_residual needs order >= 2");
  const std::size_t n = s.order() - 2;
  const auto two_z_minus_one = poly({-1, 2});
  const auto a0 = poly({-8, 31});
  const auto a1 = poly({0, -15});
  // -(2z-1)(44z^3+15z^2-48z+8)
  auto b1 = poly_mul(two_z_minus_one, poly({8, -48, 15, 44}));
  for (auto& c : b1) c = -c;
  // -z(11z^2+16z-4)(2z-1)^2
  auto b2 = poly_mul(poly_mul(poly({0, -1}), poly({-4, 16, 11})), poly_mul(two_z_minus_one, two_z_minus_one));

  const ZSeries<Rational> d1 = s.derivative();
  const ZSeries<Rational> d2 = d1.derivative();
  ZSeries<Rational> r = ZSeries<Rational>::from_polynomial(a0, n);
  r += mul_polynomial(a1, s.truncated(n));
  r += mul_polynomial(b1, d1.truncated(n));
  r += mul_polynomial(b2, d2);
  return r;
}

}  // namespace skewdyck
