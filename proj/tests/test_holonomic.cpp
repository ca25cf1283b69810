#include <doctest.h>

#include "skewdyck/equations.hpp"
#include "skewdyck/holonomic.hpp"
#include "skewdyck/kernel.hpp"

using namespace skewdyck;

namespace {

using Q = ZSeries<Rational>;

Q q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Q(std::move(v));
}

}  // namespace

TEST_CASE("recurrence coefficients") {
  const auto p = PRecurrence::coefficients(0);
  CHECK(p[0] == 0);
  CHECK(p[1] == 14);
  CHECK(p[2] == 345);
  CHECK(p[3] == -384);
  CHECK(p[4] == 80);
  for (long n = 0; n < 500; ++n) CHECK(sgn(PRecurrence::coefficients(n)[4]) > 0);
}

TEST_CASE("extend examples") {
  const auto s = extend({1, 1, 2, 6}, 8);
  CHECK(s == std::vector<Integer>{1, 1, 2, 6, 20, 71, 262, 994, 3852});
  CHECK(extend({1, 1, 2, 6}, 4).back() == 20);
  CHECK(extend({1, 1, 2, 6}, 3).size() == 4);
  CHECK_THROWS_AS(extend({1, 1, 2, 6}, 2), std::invalid_argument);
}

TEST_CASE("perturbed initial terms fail at the first step") {
  // -(14*1 + 345*2 - 384*7) / 80 = 1984/80 is not an integer.
  try {
    extend({1, 1, 2, 7}, 20);
    FAIL("expected NonIntegralStep");
  } catch (const NonIntegralStep& e) {
    CHECK(e.n() == 0);
  }
}

TEST_CASE("recurrence_residual") {
  const auto solved = avoidance_series(201);
  std::vector<Integer> seq;
  for (const auto& c : solved.coefficients()) seq.push_back(c.get_num());
  const auto r = recurrence_residual(seq);
  CHECK(r.size() == 197);
  CHECK_FALSE(first_recurrence_failure(seq).has_value());

  std::vector<Integer> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  CHECK(first_recurrence_failure(catalan).has_value());

  CHECK_FALSE(first_recurrence_failure(std::vector<Integer>(10, Integer(0))).has_value());
  CHECK(recurrence_residual({1, 2, 3}).empty());
}

TEST_CASE("extension agrees with the algebraic solver to n = 200") {
  const auto ext = extend({1, 1, 2, 6}, 200);
  const auto solved = avoidance_series(201);
  for (std::size_t n = 0; n <= 200; ++n) REQUIRE(Rational(ext[n]) == solved[n]);
}

TEST_CASE("ode_residual") {
  const auto r = ode_residual(avoidance_series(30));
  CHECK(r.order() == 28);
  CHECK(r.is_zero_mod_order());

  CHECK(ode_residual(Q::constant(1, 5)) == q({-8, 16, 0}));
  CHECK(ode_residual(Q(5)) == q({-8, 31, 0}));

  // The kernel route gives the same series, so the ODE holds for it too.
  const auto via_kernel = level_gf<Rational>(0, 79).compressed(2);
  CHECK(ode_residual(via_kernel).is_zero_mod_order());
}
