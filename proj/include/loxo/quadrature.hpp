#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "loxo/errors.hpp"

namespace loxo {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  int max_depth = 48;
};

namespace detail {

// One panel of adaptive Simpson with Richardson extrapolation.  `leftover`
// accumulates the error estimate of panels that hit the depth limit.
template <typename Scalar, typename F>
Scalar simpson_panel(const F& f, Scalar a, Scalar m, Scalar b, Scalar fa,
                     Scalar fm, Scalar fb, Scalar whole, Scalar tol, int depth,
                     Scalar& leftover) {
  const Scalar lm = (a + m) / 2;
  const Scalar rm = (m + b) / 2;
  const Scalar flm = f(lm);
  const Scalar frm = f(rm);
  const Scalar h12 = (b - a) / 12;
  const Scalar left = h12 * (fa + 4 * flm + fm);
  const Scalar right = h12 * (fm + 4 * frm + fb);
  const Scalar delta = left + right - whole;
  if (std::abs(delta) <= 15 * tol || depth <= 0) {
    if (depth <= 0 && std::abs(delta) > 15 * tol) {
      leftover += std::abs(delta) / 15;
    }
    return left + right + delta / 15;
  }
  return simpson_panel(f, a, lm, m, fa, flm, fm, left, tol / 2, depth - 1,
                       leftover) +
         simpson_panel(f, m, rm, b, fm, frm, fb, right, tol / 2, depth - 1,
                       leftover);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to an absolute tolerance.
// Throws numeric_error (with the achieved error estimate) if the recursion
// depth is exhausted before the tolerance is met.
template <typename Scalar, typename F>
Scalar integrate(const F& f, Scalar a, Scalar b, QuadratureOptions opt = {}) {
  static_assert(std::is_floating_point_v<Scalar>);
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw std::domain_error("integrate: limits must be finite");
  }
  if (a == b) return Scalar(0);
  Scalar sign(1);
  if (a > b) {
    std::swap(a, b);
    sign = Scalar(-1);
  }
  const Scalar m = (a + b) / 2;
  const Scalar fa = f(a);
  const Scalar fm = f(m);
  const Scalar fb = f(b);
  const Scalar whole = (b - a) / 6 * (fa + 4 * fm + fb);
  Scalar leftover(0);
  const Scalar value =
      detail::simpson_panel(f, a, m, b, fa, fm, fb, whole,
                            Scalar(opt.abs_tol), opt.max_depth, leftover);
  if (leftover > Scalar(opt.abs_tol)) {
    throw numeric_error("integrate: requested tolerance not reached",
                        static_cast<double>(leftover));
  }
  return sign * value;
}

}  // namespace loxo
