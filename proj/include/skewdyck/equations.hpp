#pragma once

// The algebraic equations satisfied by the level-0 generating function,
// with z counting half-length.

#include "skewdyck/algebraic.hpp"
#include "skewdyck/tpoly.hpp"

namespace skewdyck {

/// z^2 S^3 - z(2 - z) S^2 + (1 - z^2) S - 1 + z + z^2 = 0  (OEIS A128729).
inline AlgEquation<Rational> avoidance_cubic() {
  using P = std::vector<Rational>;
  return AlgEquation<Rational>({
      P{-1, 1, 1},
      P{1, 0, -1},
      P{0, -2, 1},
      P{0, 0, 1},
  });
}

/// z^2 R^3 - z(2 - z) R^2 + (1 - z^2) R - 1 + z + z^2 - t z^2 = 0  (OEIS A128728).
inline AlgEquation<RationalTPoly> marked_cubic() {
  using T = RationalTPoly;
  using P = std::vector<T>;
  return AlgEquation<RationalTPoly>({
      P{T(-1), T(1), T(1) - T::t()},
      P{T(1), T(0), T(-1)},
      P{T(0), T(-2), T(1)},
      P{T(0), T(0), T(1)},
  });
}

/// 2 Z U^2 - U - Z^2 U^3 + 1 - Z^2 U^2 + Z^2 U - Z - Z^2 = 0, the equation
/// reached from the kernel by U = (1 - z u1)/z^2 and Z = z^2.
inline AlgEquation<Rational> transformed_cubic() {
  using P = std::vector<Rational>;
  return AlgEquation<Rational>({
      P{1, -1, -1},
      P{-1, 0, 1},
      P{0, 2, -1},
      P{0, 0, -1},
  });
}

/// Half-length avoidance series s_0..s_{order-1}.
inline ZSeries<Rational> avoidance_series(std::size_t order, SolveOptions options = {}) {
  return solve_algebraic(avoidance_cubic(), Rational(1), order, options);
}

/// Half-length series with t marking up-down-red occurrences.
inline ZSeries<RationalTPoly> marked_series(std::size_t order, SolveOptions options = {}) {
  return solve_algebraic(marked_cubic(), RationalTPoly(1), order, options);
}

}  // namespace skewdyck
