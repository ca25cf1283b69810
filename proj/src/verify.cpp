#include "skewdyck/verify.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include "skewdyck/asymptotics.hpp"
#include "skewdyck/equations.hpp"
#include "skewdyck/golden.hpp"
#include "skewdyck/holonomic.hpp"
#include "skewdyck/kernel.hpp"
#include "skewdyck/layered_dp.hpp"
#include "skewdyck/path.hpp"

namespace skewdyck {

std::map<int, TPoly> brute_force_histograms(std::size_t length) {
  std::map<int, std::vector<Integer>> counts;
  enumerate(length, {}, [&](const SkewPath& p) {
    auto& h = counts[p.end_level()];
    if (h.size() <= p.udr_count()) h.resize(p.udr_count() + 1, Integer(0));
    ++h[p.udr_count()];
  });
  std::map<int, TPoly> out;
  for (auto& [level, h] : counts) out.emplace(level, TPoly(std::move(h)));
  return out;
}

namespace {

using Check = std::function<CheckResult()>;

CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), true, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

template <class R>
std::string first_mismatch(const ZSeries<R>& a, const ZSeries<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < n; ++i)
    if (!(a[i] == b[i])) return "z^" + std::to_string(i) + ": " + to_string(a[i]) + " vs " + to_string(b[i]);
  return {};
}

CheckResult check_oracle_vs_dp(std::size_t max_len) {
  const std::string name = "brute force vs automaton (length <= " + std::to_string(max_len) + ")";
  const auto states = run(max_len);
  for (std::size_t m = 0; m <= max_len; ++m) {
    const auto hist = brute_force_histograms(m);
    for (int k = 0; k <= static_cast<int>(m) + 1; ++k) {
      auto it = hist.find(k);
      const TPoly expected = it == hist.end() ? TPoly() : it->second;
      const TPoly got = states[m].at_level(k);
      if (!(got == expected))
        return fail(name, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + got.to_string() + " vs " +
                              expected.to_string());
    }
  }
  return pass(name);
}

template <class R>
CheckResult check_kernel_residual(std::size_t order) {
  const std::string name = std::string("kernel residual (") + std::string(mode_name(kernel_mode_of<R>)) + ")";
  const auto root = kernel_root<R>(order);
  const auto res = kernel_residual(root);
  if (!res.is_zero_mod_order()) return fail(name, "nonzero at z^" + std::to_string(res.valuation()));
  return pass(name, "mod z^" + std::to_string(order));
}

template <class R>
CheckResult check_total_identity(std::size_t order) {
  const std::string name = std::string("1+g0+h0+k0 = (1-z u1)/z^2 (") + std::string(mode_name(kernel_mode_of<R>)) + ")";
  return check_identity_total<R>(order) ? pass(name, "mod z^" + std::to_string(order)) : fail(name, "mismatch");
}

template <class R>
CheckResult check_level_gf_vs_dp(unsigned max_level, std::size_t max_len) {
  const std::string name = std::string("level gf vs automaton (") + std::string(mode_name(kernel_mode_of<R>)) +
                           ", k <= " + std::to_string(max_level) + ", m <= " + std::to_string(max_len) + ")";
  const auto states = run(max_len);
  for (unsigned k = 0; k <= max_level; ++k) {
    const auto gf = level_gf<R>(k, max_len + 1);
    for (std::size_t m = 0; m <= max_len; ++m) {
      const TPoly dp = states[m].at_level(static_cast<int>(k));
      R expected;
      if constexpr (is_tpoly_v<R>)
        expected = dp.cast<Rational>();
      else
        expected = Rational(dp.coeff(0));
      if (!(gf[m] == expected))
        return fail(name, "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + to_string(gf[m]) + " vs " +
                              to_string(expected));
    }
  }
  return pass(name);
}

CheckResult check_half_length_collapse(std::size_t order) {
  const std::string name = "level-0 gf at half-length equals cubic solutions";
  const auto uni = level_gf<Rational>(0, 2 * order - 1).compressed(2);
  if (auto d = first_mismatch(uni, avoidance_series(order)); !d.empty()) return fail(name, "univariate " + d);
  const auto bi = level_gf<RationalTPoly>(0, 2 * order - 1).compressed(2);
  if (auto d = first_mismatch(bi, marked_series(order)); !d.empty()) return fail(name, "bivariate " + d);
  return pass(name, std::to_string(order) + " terms");
}

CheckResult check_solver_methods(std::size_t order) {
  const std::string name = "Newton doubling = Newton incremental = undetermined coefficients";
  const auto a = avoidance_series(order, {SolveMethod::NewtonDoubling});
  const auto b = avoidance_series(order, {SolveMethod::NewtonIncremental});
  const auto c = avoidance_series(order, {SolveMethod::UndeterminedCoefficients});
  if (!(a == b) || !(a == c)) return fail(name, "univariate solutions differ");
  const auto ta = marked_series(order, {SolveMethod::NewtonDoubling});
  const auto tc = marked_series(order, {SolveMethod::UndeterminedCoefficients});
  if (!(ta == tc)) return fail(name, "bivariate solutions differ");
  return pass(name);
}

CheckResult check_integrality(std::size_t order) {
  const std::string name = "cubic solutions have integer coefficients";
  const auto uni = avoidance_series(order);
  for (const auto& c : uni.coefficients())
    if (!is_integral(c)) return fail(name, "univariate coefficient " + c.get_str());
  const auto bi = marked_series(order);
  for (const auto& p : bi.coefficients())
    for (const auto& c : p.coefficients())
      if (!is_integral(c) || sgn(c) < 0) return fail(name, "bivariate coefficient " + c.get_str());
  return pass(name);
}

CheckResult check_recurrence(std::size_t order) {
  const std::string name = "recurrence from (1,1,2,6) agrees with cubic";
  const std::size_t last = std::max<std::size_t>(order, 5) - 1;
  std::vector<Integer> ext;
  try {
    ext = extend({1, 1, 2, 6}, last);
  } catch (const NonIntegralStep& e) {
    return fail(name, e.what());
  }
  const auto s = avoidance_series(last + 1);
  for (std::size_t n = 0; n <= last; ++n)
    if (Rational(ext[n]) != s[n]) return fail(name, "first disagreement at n=" + std::to_string(n));
  return pass(name, "n <= " + std::to_string(last));
}

CheckResult check_ode(std::size_t order) {
  const std::string name = "ODE residual vanishes";
  const std::size_t n = std::max<std::size_t>(order, 5);
  const auto r = ode_residual(avoidance_series(n));
  if (!r.is_zero_mod_order()) return fail(name, "nonzero at z^" + std::to_string(r.valuation()));
  return pass(name, "mod z^" + std::to_string(r.order()));
}

CheckResult check_transformation_chain(std::size_t order) {
  const std::string name = "U = (1 - z u1)/z^2 solves the transformed cubic in Z = z^2";
  const auto u = level_gf<Rational>(0, 2 * order - 1).compressed(2);
  const auto r = residual(transformed_cubic(), u);
  if (!r.is_zero_mod_order()) return fail(name, "nonzero at Z^" + std::to_string(r.valuation()));
  return pass(name, "mod Z^" + std::to_string(order));
}

CheckResult check_constants() {
  const std::string name = "asymptotic constants";
  try {
    const auto c = constants();
    const double sqrt3 = std::sqrt(3.0);
    if (std::fabs(c.growth * c.z0 - 1) > 1e-14) return fail(name, "growth * z0 != 1");
    if (std::fabs(c.S0 - (1 + c.z0) / (3 * c.z0)) > 1e-12) return fail(name, "S0 off the branch curve");
    if (std::fabs(c.S0 - (1 + sqrt3 / 2)) > 1e-12) return fail(name, "S0 closed form");
    std::ostringstream d;
    d.precision(15);
    d << "z0=" << c.z0 << " growth=" << c.growth << " amplitude=" << c.amplitude;
    return pass(name, d.str());
  } catch (const std::exception& e) {
    return fail(name, e.what());
  }
}

CheckResult check_asymptotic_ratio() {
  const std::string name = "s_n / estimate(n) approaches 1";
  const std::vector<std::size_t> ns{50, 100, 200, 400, 800, 1600};
  const auto seq = extend({1, 1, 2, 6}, 1600);
  const auto rows = convergence_report(ns, seq);
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(std::fabs(rows[i].ratio - 1) < std::fabs(rows[i - 1].ratio - 1)))
      return fail(name, "deviation did not shrink at n=" + std::to_string(rows[i].n));
  std::ostringstream d;
  d.precision(8);
  d << "ratio(1600)=" << rows.back().ratio;
  return pass(name, d.str());
}

// Golden files list nonzero coefficients by power; unlisted powers are zero.
template <class R>
CheckResult compare_golden(const std::string& name, const GoldenTable& table,
                           const std::function<ZSeries<R>(std::size_t)>& compute) {
  if (table.rows.empty()) return fail(name, "empty golden table");
  std::size_t max_index = 0;
  for (const auto& row : table.rows) max_index = std::max(max_index, row.index);
  const ZSeries<R> s = compute(max_index + 1);
  std::vector<bool> listed(max_index + 1, false);
  for (const auto& row : table.rows) {
    R expected;
    if constexpr (is_tpoly_v<R>) {
      std::vector<Rational> v(row.values.begin(), row.values.end());
      expected = R(std::move(v));
    } else {
      expected = R(row.values.at(0));
    }
    if (!(s[row.index] == expected))
      return fail(name, "z^" + std::to_string(row.index) + ": " + to_string(s[row.index]) + " vs golden " +
                            to_string(expected));
    listed[row.index] = true;
  }
  for (std::size_t i = 0; i <= max_index; ++i)
    if (!listed[i] && !is_zero(s[i])) return fail(name, "z^" + std::to_string(i) + " should be zero");
  return pass(name, std::to_string(table.rows.size()) + " rows");
}

std::vector<Check> golden_checks(const std::filesystem::path& dir) {
  auto load = [dir](const char* file) { return load_golden(dir / file); };
  auto guarded = [](std::string name, std::function<CheckResult()> f) -> Check {
    return [name = std::move(name), f = std::move(f)]() {
      try {
        return f();
      } catch (const std::exception& e) {
        return fail(name, e.what());
      }
    };
  };
  std::vector<Check> checks;
  checks.push_back(guarded("golden: level-0 series", [=] {
    return compare_golden<Rational>("golden: level-0 series", load("level0_series.txt"),
                                    [](std::size_t n) { return level_gf<Rational>(0, n); });
  }));
  checks.push_back(guarded("golden: half-length series", [=] {
    return compare_golden<Rational>("golden: half-length series", load("half_length_series.txt"),
                                    [](std::size_t n) { return avoidance_series(n); });
  }));
  checks.push_back(guarded("golden: marked level-0 series", [=] {
    return compare_golden<RationalTPoly>("golden: marked level-0 series", load("marked_level0_series.txt"),
                                         [](std::size_t n) { return level_gf<RationalTPoly>(0, n); });
  }));
  checks.push_back(guarded("golden: kernel root", [=] {
    return compare_golden<Rational>("golden: kernel root", load("kernel_root.txt"),
                                    [](std::size_t n) { return kernel_root<Rational>(n).utilde; });
  }));
  checks.push_back(guarded("golden: A128729", [=] {
    return compare_golden<Rational>("golden: A128729", load("a128729.txt"),
                                    [](std::size_t n) { return avoidance_series(n); });
  }));
  checks.push_back(guarded("golden: A128728", [=] {
    return compare_golden<RationalTPoly>("golden: A128728", load("a128728.txt"),
                                         [](std::size_t n) { return marked_series(n); });
  }));
  return checks;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::size_t n = std::max<std::size_t>(options.order, 4);
  const std::size_t full = 2 * n;
  const std::size_t bf_len = std::min<std::size_t>(20, full);
  const std::size_t dp_len = std::min<std::size_t>(full, 40);

  std::vector<Check> checks{
      [=] { return check_oracle_vs_dp(bf_len); },
      [=] { return check_kernel_residual<Rational>(full); },
      [=] { return check_kernel_residual<RationalTPoly>(full); },
      [=] { return check_total_identity<Rational>(full); },
      [=] { return check_total_identity<RationalTPoly>(full); },
      [=] { return check_level_gf_vs_dp<Rational>(6, dp_len); },
      [=] { return check_level_gf_vs_dp<RationalTPoly>(6, dp_len); },
      [=] { return check_half_length_collapse(n); },
      [=] { return check_solver_methods(n); },
      [=] { return check_integrality(n); },
      [=] { return check_recurrence(n); },
      [=] { return check_ode(n); },
      [=] { return check_transformation_chain(n); },
      [] { return check_constants(); },
      [] { return check_asymptotic_ratio(); },
  };
  if (options.golden_dir) {
    auto g = golden_checks(*options.golden_dir);
    checks.insert(checks.end(), g.begin(), g.end());
  }

  auto safe = [](const Check& c, std::size_t i) {
    try {
      return c();
    } catch (const std::exception& e) {
      return fail("check #" + std::to_string(i + 1), e.what());
    }
  };
  std::vector<CheckResult> results(checks.size());
  if (options.parallel) {
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(checks.size());
    for (std::size_t i = 0; i < checks.size(); ++i)
      futures.push_back(std::async(std::launch::async, safe, std::cref(checks[i]), i));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = safe(checks[i], i);
  }
  return results;
}

}  // namespace skewdyck
