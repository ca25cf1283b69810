#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdyck/numeric.hpp"

namespace skewdyck {

/// Singularity-analysis data of S(z), the half-length generating function
/// of up-down-red avoiding skew Dyck paths:
///   [z^n] S ~ amplitude * growth^n * n^(-3/2).
struct AsymptoticConstants {
  double z0;         // dominant singularity, (2/11)(3 sqrt 3 - 4)
  double S0;         // S(z0) = 1 + sqrt 3 / 2
  double amplitude;  // sqrt(2 + 8 sqrt 3 / 9) / (2 sqrt pi)
  double growth;     // 1 / z0 = 2 + (3/2) sqrt 3
  double z0_bisection;  // z0 located numerically on the branch-point curve
};

/// Closed forms, cross-checked against bisection; throws std::logic_error
/// if the two disagree by more than 1e-12.
AsymptoticConstants constants();

/// Branch-point condition: the cubic evaluated at S = (1 + z)/(3z), where
/// its S-derivative vanishes. z0 is the root of this in [0.1, 0.3].
long double branch_condition(long double z);

/// Natural log of the leading-order estimate.
double log_estimate(std::size_t n);
/// exp(log_estimate(n)); overflows to +inf for large n.
double estimate(std::size_t n);

/// Natural log of a positive big integer from its binary mantissa and
/// exponent, relative error below 1e-15.
double log_of(const Integer& x);

class MissingCoefficient : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ConvergenceRow {
  std::size_t n;
  Integer exact;
  double log_exact;
  double log_estimate;
  double ratio;  // exact / estimate
};

/// One row per requested n, in the given order. coefficients[n] must exist.
std::vector<ConvergenceRow> convergence_report(const std::vector<std::size_t>& n_values,
                                               const std::vector<Integer>& coefficients);

/// "1.234567e+1058" for a value given by its natural log.
std::string scientific_from_log(double ln_value, int digits = 6);

}  // namespace skewdyck
