#include "skewdyck/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace skewdyck {

long double branch_condition(long double z) {
  const long double s = (1 + z) / (3 * z);
  return z * z * s * s * s - z * (2 - z) * s * s + (1 - z * z) * s - 1 + z + z * z;
}

namespace {

long double bisect_z0() {
  long double lo = 0.1L;
  long double hi = 0.3L;
  long double f_lo = branch_condition(lo);
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    const long double mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    const long double f_mid = branch_condition(mid);
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

AsymptoticConstants constants() {
  const long double sqrt3 = std::sqrt(3.0L);
  const long double pi = std::numbers::pi_v<long double>;
  AsymptoticConstants c{};
  c.z0 = static_cast<double>(2.0L / 11.0L * (3 * sqrt3 - 4));
  c.S0 = static_cast<double>(1 + sqrt3 / 2);
  c.growth = static_cast<double>(2 + 1.5L * sqrt3);
  c.amplitude = static_cast<double>(std::sqrt(2 + 8 * sqrt3 / 9) / (2 * std::sqrt(pi)));
  c.z0_bisection = static_cast<double>(bisect_z0());
  if (std::fabs(c.z0 - c.z0_bisection) > 1e-12)
    throw std::logic_error("closed-form z0 disagrees with bisection");
  return c;
}

double log_estimate(std::size_t n) {
  if (n == 0) throw std::invalid_argument("estimate needs n >= 1");
  static const AsymptoticConstants c = constants();
  const double dn = static_cast<double>(n);
  return std::log(c.amplitude) + dn * std::log(c.growth) - 1.5 * std::log(dn);
}

double estimate(std::size_t n) { return std::exp(log_estimate(n)); }

double log_of(const Integer& x) {
  if (sgn(x) <= 0) throw std::domain_error("log of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

std::vector<ConvergenceRow> convergence_report(const std::vector<std::size_t>& n_values,
                                               const std::vector<Integer>& coefficients) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t n : n_values) {
    if (n >= coefficients.size())
      throw MissingCoefficient("no exact coefficient for n = " + std::to_string(n) + " (have " +
                               std::to_string(coefficients.size()) + ")");
    ConvergenceRow row{n, coefficients[n], log_of(coefficients[n]), log_estimate(n), 0.0};
    row.ratio = std::exp(row.log_exact - row.log_estimate);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scientific_from_log(double ln_value, int digits) {
  const double log10_value = ln_value / std::numbers::ln10;
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  const double scale = std::pow(10.0, digits);
  if (std::round(mantissa * scale) >= 10.0 * scale) {
    mantissa /= 10.0;
    exponent += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%+d", digits, mantissa, static_cast<int>(exponent));
  return buf;
}

}  // namespace skewdyck
