#pragma once

// Kernel-method generating functions for skew paths avoiding (or marking)
// up-down-red.
//
// The kernel -u^2 + z u^3 + 2zu - u^2 z^2 - u z^3 - z^4 (plus t z^4 when
// occurrences are marked) has one root u1 = 1/z - z - z^3 - ... that is a
// Laurent series. Everything here works with utilde = z * u1, a power series
// with constant term 1, so that every formula becomes a quotient of power
// series by a unit. Rewrites used (all exact):
//
//   g0 = z / u1                    = z^2 / ut
//   h0 = (1 - z^2 - z u1)/(z u1)   = (1 - z^2 - ut) / ut
//   k0 = (1 - z^2 - z u1)/(u1 (u1 - z))
//                                  = z^2 (1 - z^2 - ut) / (ut (ut - z^2))
//   k0 (marked) = (1 - z^2 - ut)(t ut - t z^2 + z^2) / (ut (ut + t z^2 - z^2))
//   [u^k] (F+G+H+K) = (1 - z u1) / (z^2 u1^k) = (1 - ut) z^(k-2) / ut^k

#include <cstddef>
#include <string_view>

#include "skewdyck/algebraic.hpp"
#include "skewdyck/series.hpp"
#include "skewdyck/tpoly.hpp"

namespace skewdyck {

enum class KernelMode { Univariate, Bivariate };

std::string_view mode_name(KernelMode m);

/// Coefficient ring for each mode.
template <KernelMode M>
using KernelRing = std::conditional_t<M == KernelMode::Univariate, Rational, RationalTPoly>;

template <class R>
inline constexpr KernelMode kernel_mode_of = is_tpoly_v<R> ? KernelMode::Bivariate : KernelMode::Univariate;

template <class R>
struct KernelRoot {
  ZSeries<R> utilde;  // z * u1, constant term 1
  static constexpr KernelMode mode = kernel_mode_of<R>;
};

template <class R>
struct BoundaryConstants {
  ZSeries<R> g0;
  ZSeries<R> h0;
  ZSeries<R> k0;
};

namespace detail {

template <class R>
R t_symbol() {
  if constexpr (is_tpoly_v<R>)
    return R::t();
  else
    return R(0);
}

template <class R>
std::vector<R> z_poly(std::initializer_list<std::pair<std::size_t, R>> terms) {
  std::size_t n = 0;
  for (const auto& [p, c] : terms) n = std::max(n, p + 1);
  std::vector<R> v(n, R(0));
  for (const auto& [p, c] : terms) v[p] += c;
  return v;
}

}  // namespace detail

/// ut^3 - (1 + z^2) ut^2 + (2 z^2 - z^4) ut - z^6 (+ t z^6 when bivariate):
/// the kernel after u = ut / z and multiplication by z^2.
template <class R>
AlgEquation<R> kernel_root_equation() {
  using detail::z_poly;
  return AlgEquation<R>({
      z_poly<R>({{6, R(-1) + detail::t_symbol<R>()}}),
      z_poly<R>({{2, R(2)}, {4, R(-1)}}),
      z_poly<R>({{0, R(-1)}, {2, R(-1)}}),
      z_poly<R>({{0, R(1)}}),
  });
}

/// The small kernel root, normalized as ut = z u1, modulo z^order.
template <class R>
KernelRoot<R> kernel_root(std::size_t order) {
  if (order < 2) throw std::invalid_argument("kernel_root needs order >= 2");
  return {solve_algebraic(kernel_root_equation<R>(), R(1), order)};
}

/// z^2 * kernel(u = ut/z, z), evaluated term by term from the kernel's
/// monomials u^a z^b (independent of kernel_root_equation).
template <class R>
ZSeries<R> kernel_residual(const KernelRoot<R>& root) {
  struct Term {
    long coeff;
    unsigned u_power;
    unsigned z_power;
    bool marked;
  };
  static constexpr Term kTerms[] = {
      {-1, 2, 0, false}, {1, 3, 1, false}, {2, 1, 1, false}, {-1, 2, 2, false},
      {-1, 1, 3, false}, {-1, 0, 4, false}, {1, 0, 4, true},
  };
  const ZSeries<R>& ut = root.utilde;
  ZSeries<R> acc(ut.order());
  for (const Term& term : kTerms) {
    if (term.marked && !is_tpoly_v<R>) continue;
    // u^a z^b * z^2 = ut^a z^(b + 2 - a)
    const std::size_t shift = term.z_power + 2 - term.u_power;
    R c(term.coeff);
    if (term.marked) c = c * detail::t_symbol<R>();
    acc += (pow(ut, term.u_power) * c).shifted_up(shift).truncated(ut.order());
  }
  return acc;
}

/// g0, h0, k0 of the kernel method, i.e. the generating functions of paths
/// returning to level 0 in layers G, H and K.
template <class R>
BoundaryConstants<R> boundary_constants(const KernelRoot<R>& root) {
  const ZSeries<R>& ut = root.utilde;
  const std::size_t n = ut.order();
  const auto one = ZSeries<R>::constant(R(1), n);
  const auto z2 = ZSeries<R>::monomial(R(1), 2, n);
  const ZSeries<R> inv_ut = reciprocal(ut);
  const ZSeries<R> rest = one - z2 - ut;  // 1 - z^2 - ut, valuation 4

  BoundaryConstants<R> bc;
  bc.g0 = z2 * inv_ut;
  bc.h0 = rest * inv_ut;
  if constexpr (kernel_mode_of<R> == KernelMode::Univariate) {
    bc.k0 = div(z2 * rest, ut * (ut - z2));
  } else {
    const R t = R::t();
    const ZSeries<R> tz2 = z2 * t;
    bc.k0 = div(rest * (ut * t - tz2 + z2), ut * (ut + tz2 - z2));
  }
  return bc;
}

template <class R>
BoundaryConstants<R> boundary_constants(std::size_t order) {
  return boundary_constants(kernel_root<R>(order));
}

/// (1 - ut) / z^2: the level-0 generating function; order drops by two.
template <class R>
ZSeries<R> level_zero_from_root(const KernelRoot<R>& root) {
  const ZSeries<R>& ut = root.utilde;
  return (ZSeries<R>::constant(R(1), ut.order()) - ut).shifted_down(2);
}

/// Generating function of paths ending at level k, modulo z^order.
template <class R>
ZSeries<R> level_gf(unsigned k, std::size_t order) {
  if (order < k + 2) throw std::invalid_argument("level_gf needs order >= k + 2");
  const KernelRoot<R> root = kernel_root<R>(order + k + 2);
  const ZSeries<R> base = level_zero_from_root(root);
  const ZSeries<R> scaled = base * pow(reciprocal(root.utilde), k);
  return scaled.shifted_up(k).truncated(order);
}

/// 1 + g0 + h0 + k0 == (1 - ut)/z^2 coefficientwise, at the common order.
template <class R>
bool check_identity_total(const KernelRoot<R>& root, std::size_t order) {
  const BoundaryConstants<R> bc = boundary_constants(root);
  const ZSeries<R> lhs = ZSeries<R>::constant(R(1), bc.g0.order()) + bc.g0 + bc.h0 + bc.k0;
  const ZSeries<R> rhs = level_zero_from_root(root);
  const std::size_t n = std::min({order, lhs.order(), rhs.order()});
  return lhs.truncated(n) == rhs.truncated(n);
}

template <class R>
bool check_identity_total(std::size_t order) {
  return check_identity_total(kernel_root<R>(order + 4), order);
}

}  // namespace skewdyck
