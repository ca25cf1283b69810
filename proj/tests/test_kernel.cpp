#include <doctest.h>

#include "skewdyck/equations.hpp"
#include "skewdyck/kernel.hpp"
#include "skewdyck/layered_dp.hpp"

using namespace skewdyck;

namespace {

using Q = ZSeries<Rational>;
using T = RationalTPoly;

Q q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Q(std::move(v));
}

T tp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return T(std::move(v));
}

}  // namespace

TEST_CASE("kernel root, univariate") {
  const auto root = kernel_root<Rational>(16);
  CHECK(root.utilde == q({1, 0, -1, 0, -1, 0, -2, 0, -6, 0, -20, 0, -71, 0, -262, 0}));
  CHECK(root.mode == KernelMode::Univariate);
  CHECK_THROWS(kernel_root<Rational>(1));
}

TEST_CASE("kernel root, bivariate") {
  const auto bi = kernel_root<T>(24);
  CHECK(bi.mode == KernelMode::Bivariate);
  CHECK(evaluate_t(bi.utilde, Rational(0)) == kernel_root<Rational>(24).utilde);

  // At t = 1 the constant term of the cubic vanishes, leaving
  // ut^2 - (1 + z^2) ut + 2z^2 - z^4 = 0 for the branch through 1.
  using P = std::vector<Rational>;
  const AlgEquation<Rational> quadratic({P{0, 0, 2, 0, -1}, P{-1, 0, -1}, P{1}});
  const auto at_one = evaluate_t(bi.utilde, Rational(1));
  CHECK(at_one == solve_algebraic(quadratic, Rational(1), 24));

  // The two specializations first differ where the t z^6 term enters.
  const auto uni = kernel_root<Rational>(24).utilde;
  for (std::size_t i = 0; i < 6; ++i) CHECK(at_one[i] == uni[i]);
  CHECK(at_one[6] != uni[6]);
}

TEST_CASE("kernel residual vanishes") {
  CHECK(kernel_residual(kernel_root<Rational>(64)).is_zero_mod_order());
  CHECK(kernel_residual(kernel_root<T>(40)).is_zero_mod_order());

  auto bad = kernel_root<Rational>(20);
  bad.utilde[5] += 1;
  CHECK_FALSE(kernel_residual(bad).is_zero_mod_order());
}

TEST_CASE("boundary constants, univariate") {
  const auto bc = boundary_constants<Rational>(18);
  const auto total = Q::constant(1, 18) + bc.g0 + bc.h0 + bc.k0;
  CHECK(total == q({1, 0, 1, 0, 2, 0, 6, 0, 20, 0, 71, 0, 262, 0, 994, 0, 3852, 0}));

  // g0, h0, k0 are the layer series G, H, K at level 0 (t = 0).
  const auto run_g = layer_series(Layer::G, 0, 18);
  const auto run_h = layer_series(Layer::H, 0, 18);
  const auto run_k = layer_series(Layer::K, 0, 18);
  for (std::size_t m = 0; m < 18; ++m) {
    CHECK(bc.g0[m] == Rational(run_g[m].coeff(0)));
    CHECK(bc.h0[m] == Rational(run_h[m].coeff(0)));
    CHECK(bc.k0[m] == Rational(run_k[m].coeff(0)));
  }
  CHECK(bc.g0[2] == 1);
}

TEST_CASE("boundary constants, bivariate") {
  const auto bc = boundary_constants<T>(16);
  const auto total = ZSeries<T>::constant(T(1), 16) + bc.g0 + bc.h0 + bc.k0;
  CHECK(total[0] == tp({1}));
  CHECK(total[2] == tp({1}));
  CHECK(total[4] == tp({2, 1}));
  CHECK(total[6] == tp({6, 4}));
  CHECK(total[8] == tp({20, 16}));

  const auto run_g = layer_series(Layer::G, 0, 16);
  const auto run_h = layer_series(Layer::H, 0, 16);
  const auto run_k = layer_series(Layer::K, 0, 16);
  for (std::size_t m = 0; m < 16; ++m) {
    CHECK(bc.g0[m] == run_g[m].cast<Rational>());
    CHECK(bc.h0[m] == run_h[m].cast<Rational>());
    CHECK(bc.k0[m] == run_k[m].cast<Rational>());
  }
}

TEST_CASE("level_gf examples") {
  const auto bc = boundary_constants<Rational>(20);
  const auto total = Q::constant(1, 20) + bc.g0 + bc.h0 + bc.k0;
  CHECK(level_gf<Rational>(0, 18) == total.truncated(18));
  CHECK(level_gf<Rational>(1, 6)[1] == 1);
  CHECK(level_gf<T>(2, 10)[6] == count_track(6, 2).cast<Rational>());
  CHECK_THROWS(level_gf<Rational>(5, 6));
  const auto g5 = level_gf<Rational>(5, 12);
  CHECK(g5.valuation() == 5);
}

TEST_CASE("level_gf equals the automaton for k <= 6, m <= 24") {
  const auto states = run(24);
  for (unsigned k = 0; k <= 6; ++k) {
    const auto uni = level_gf<Rational>(k, 25);
    const auto bi = level_gf<T>(k, 25);
    for (std::size_t m = 0; m <= 24; ++m) {
      const TPoly dp = states[m].at_level(static_cast<int>(k));
      REQUIRE(uni[m] == Rational(dp.coeff(0)));
      REQUIRE(bi[m] == dp.cast<Rational>());
    }
  }
}

TEST_CASE("check_identity_total") {
  CHECK(check_identity_total<Rational>(20));
  CHECK(check_identity_total<T>(14));
  auto bad = kernel_root<Rational>(24);
  bad.utilde[5] += 1;
  CHECK_FALSE(check_identity_total(bad, 20));
}

TEST_CASE("half-length collapse and transformation chain") {
  const auto uni = level_gf<Rational>(0, 59).compressed(2);
  CHECK(uni == avoidance_series(30));
  CHECK(residual(transformed_cubic(), uni).is_zero_mod_order());
  const auto bi = level_gf<T>(0, 23).compressed(2);
  CHECK(bi == marked_series(12));
  CHECK_THROWS_AS(level_gf<Rational>(1, 10).compressed(2), SeriesError);
}
