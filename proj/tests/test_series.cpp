#include <doctest.h>

#include <random>

#include "skewdyck/series.hpp"

using namespace skewdyck;

namespace {

using Q = ZSeries<Rational>;

Q q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Q(std::move(v));
}

Q random_series(std::mt19937& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<int> d(-5, 5);
  Q s(order);
  for (std::size_t i = 0; i < order; ++i) {
    s[i] = Rational(d(rng), 1 + (d(rng) + 5) % 3);
    s[i].canonicalize();
  }
  if (unit && is_zero(s[0])) s[0] = 1;
  return s;
}

}  // namespace

TEST_CASE("TPoly canonical form and arithmetic") {
  const TPoly a(std::vector<Integer>{2, 1, 0, 0});
  CHECK(a.degree() == 1);
  CHECK(a.to_string() == "2+t");
  CHECK(TPoly().to_string() == "0");
  CHECK((a - a).is_zero());
  CHECK((a * a).to_string() == "4+4t+t^2");
  CHECK(TPoly(std::vector<Integer>{71, 64, 2}).to_string() == "71+64t+2t^2");
  CHECK(TPoly(std::vector<Integer>{0, -1, 3}).to_string() == "-t+3t^2");
  CHECK(a.evaluate(Integer(1)) == 3);
  CHECK(a.coefficient_sum() == 3);
  CHECK(a.coeff(7) == 0);
  CHECK(is_unit(RationalTPoly(3)));
  CHECK_FALSE(is_unit(RationalTPoly::t()));
  CHECK(inverse(RationalTPoly(4)) == RationalTPoly(Rational(1, 4)));
  CHECK_THROWS(inverse(RationalTPoly::t()));
}

TEST_CASE("mul/add/pow examples") {
  CHECK(q({1, 1, 0}) * q({1, -1, 0}) == q({1, 0, -1}));
  CHECK(q({1, 0, 1, 0, 2}) * q({1, 0, 1, 0, 2}) == q({1, 0, 2, 0, 5}));
  CHECK(pow(q({1, 1, 0, 0}), 0) == q({1, 0, 0, 0}));
  CHECK(pow(q({1, 1, 0, 0, 0}), 3) == q({1, 3, 3, 1, 0}));
  // Orders combine to the minimum.
  CHECK((q({1, 2, 3}) + q({1, 1})).order() == 2);
  CHECK((q({1, 2, 3}) * q({1, 1})) == q({1, 3}));
}

TEST_CASE("div examples") {
  // (z^2 + z^4) / z^2 at known order 5: valuation stripping keeps 3 terms.
  CHECK(div(q({0, 0, 1, 0, 1}), q({0, 0, 1, 0, 0})) == q({1, 0, 1}));
  CHECK(div(q({1, 0, 0, 0}), q({1, -1, 0, 0})) == q({1, 1, 1, 1}));
  CHECK_THROWS_AS(div(q({1, 0, 0}), q({0, 1, 0})), DivisionByNonUnit);
  CHECK_THROWS_AS(div(q({1, 0, 0}), q({0, 0, 0})), DivisionByNonUnit);
  CHECK_THROWS_AS(reciprocal(ZSeries<Integer>(std::vector<Integer>{2, 1})), DivisionByNonUnit);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 16;
    const Q a = random_series(rng, n, false);
    const Q b = random_series(rng, n, false);
    const Q c = random_series(rng, n, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    const Q u = random_series(rng, n, true);
    CHECK(div(a * u, u) == a);
    CHECK(reciprocal(u) * u == Q::constant(1, n));
  }
}

TEST_CASE("derivative, shifts, compression") {
  const Q s = q({1, 2, 3, 4});
  CHECK(s.derivative() == q({2, 6, 12}));
  CHECK(s.shifted_up(2) == q({0, 0, 1, 2, 3, 4}));
  CHECK(s.shifted_up(2).shifted_down(2) == s);
  CHECK_THROWS_AS(s.shifted_down(1), DivisionByNonUnit);
  CHECK(q({1, 0, 2, 0, 5}).compressed(2) == q({1, 2, 5}));
  CHECK(q({1, 0, 2, 0}).compressed(2) == q({1, 2}));
  CHECK_THROWS_AS(q({1, 1, 2}).compressed(2), SeriesError);
  CHECK(s.truncated(2) == q({1, 2}));
  CHECK_THROWS_AS(s.truncated(5), SeriesError);
  CHECK(q({0, 0, 3}).valuation() == 2);
  CHECK(q({0, 0}).is_zero_mod_order());
}

TEST_CASE("series over t-polynomials") {
  using T = RationalTPoly;
  ZSeries<T> s(std::vector<T>{T(1), T::t(), T(0)});
  const auto sq = s * s;
  CHECK(sq[1] == T::t() + T::t());
  CHECK(sq[2] == T::t() * T::t());
  CHECK(evaluate_t(sq, Rational(3)) == q({1, 6, 9}));
  CHECK(lift_to_tpoly(q({1, 2}))[1] == T(2));
  const auto inv = reciprocal(ZSeries<T>(std::vector<T>{T(1), T::t(), T(0), T(0)}));
  CHECK(inv[3] == -(T::t() * T::t() * T::t()));
}
