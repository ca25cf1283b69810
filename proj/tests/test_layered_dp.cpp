#include <doctest.h>

#include <map>

#include "skewdyck/layered_dp.hpp"
#include "skewdyck/path.hpp"

using namespace skewdyck;

namespace {

TPoly tp(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return TPoly(std::move(v));
}

// Brute-force oracle, built only on path_core.
std::map<int, TPoly> histogram(std::size_t m) {
  std::map<int, std::vector<Integer>> h;
  for (const auto& p : enumerate_all(m)) {
    auto& v = h[p.end_level()];
    if (v.size() <= p.udr_count()) v.resize(p.udr_count() + 1, Integer(0));
    ++v[p.udr_count()];
  }
  std::map<int, TPoly> out;
  for (auto& [k, v] : h) out.emplace(k, TPoly(std::move(v)));
  return out;
}

}  // namespace

TEST_CASE("step examples") {
  const auto one = step(StateVector::initial());
  REQUIRE(one.entries().size() == 1);
  CHECK(one.at(Layer::F, 1) == TPoly(1));

  const auto states = run(4);
  CHECK(states[4].total().coefficient_sum() == 7);
  CHECK(states[4].at_level(0) == tp({2, 1}));
}

TEST_CASE("count examples") {
  CHECK(std::get<Integer>(count(8, 0, CountMode::Forbid)) == 20);
  CHECK(std::get<TPoly>(count(10, 0, CountMode::Track)) == tp({71, 64, 2}));
  CHECK(std::get<Integer>(count(12, 0, CountMode::Total)) == 543);
  CHECK(std::get<Integer>(count(1, 0, CountMode::Total)) == 0);
  CHECK(count_track(3, -1).is_zero());
  CHECK(count_track(3, 5).is_zero());
}

TEST_CASE("automaton equals the brute-force histogram for m <= 16") {
  const auto states = run(16);
  for (std::size_t m = 0; m <= 16; ++m) {
    const auto h = histogram(m);
    for (int k = 0; k <= static_cast<int>(m) + 1; ++k) {
      auto it = h.find(k);
      REQUIRE(states[m].at_level(k) == (it == h.end() ? TPoly() : it->second));
    }
  }
}

TEST_CASE("parity and reach") {
  const auto states = run(24);
  for (std::size_t m = 0; m <= 24; ++m)
    for (const auto& [key, w] : states[m].entries()) {
      CHECK((static_cast<int>(m) - key.level) % 2 == 0);
      CHECK(key.level <= static_cast<int>(m));
      CHECK(key.level >= 0);
      CHECK(w.degree() <= static_cast<int>(m / 3));
      for (const auto& c : w.coefficients()) CHECK(sgn(c) >= 0);
    }
}

TEST_CASE("layer series examples") {
  const auto f0 = layer_series(Layer::F, 0, 12);
  CHECK(f0[0] == TPoly(1));
  for (std::size_t m = 1; m < 12; ++m) CHECK(f0[m].is_zero());

  const auto g0 = layer_series(Layer::G, 0, 6);
  CHECK(g0[2] == TPoly(1));
  CHECK(g0[4].evaluate(Integer(0)) == 1);

  CHECK(layer_series(Layer::K, 0, 6)[4].evaluate(Integer(1)) == 1);
}

TEST_CASE("generating-function recursions hold coefficientwise") {
  constexpr std::size_t N = 20;
  const TPoly t = TPoly::t();
  for (int n = 0; n < 8; ++n) {
    const auto f = layer_series(Layer::F, n, N), f1 = layer_series(Layer::F, n + 1, N);
    const auto g = layer_series(Layer::G, n, N), g1 = layer_series(Layer::G, n + 1, N);
    const auto h = layer_series(Layer::H, n, N), h1 = layer_series(Layer::H, n + 1, N);
    const auto k = layer_series(Layer::K, n, N), k1 = layer_series(Layer::K, n + 1, N);
    for (std::size_t m = 0; m + 1 < N; ++m) {
      CHECK(f1[m + 1] == f[m] + g[m] + h[m]);
      CHECK(g[m + 1] == f1[m]);
      CHECK(h[m + 1] == g1[m] + h1[m] + k1[m]);
      CHECK(k[m + 1] == t * g1[m] + h1[m] + k1[m]);
    }
  }
}

TEST_CASE("forbid mode equals the automaton without the marked edge") {
  const auto marked = run(22);
  const auto unmarked = run(22, Transitions::WithoutMarkedEdge);
  for (std::size_t m = 0; m <= 22; ++m)
    for (int k = 0; k <= static_cast<int>(m); ++k)
      CHECK(marked[m].at_level(k).coeff(0) == unmarked[m].at_level(k).coefficient_sum());
}

TEST_CASE("counts beyond 64 bits stay exact") {
  const TPoly p = count_track(120, 0);
  CHECK(p.coefficient_sum() > Integer("18446744073709551615"));
}
