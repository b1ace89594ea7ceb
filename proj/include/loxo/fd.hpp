#pragma once

// Central finite differences of point functions, with the step scaled by the
// coordinate magnitude.  Stencils that leave the chart domain surface as
// domain errors from the evaluated function itself.

#include <cmath>
#include <type_traits>

#include "loxo/chart.hpp"

namespace loxo {
namespace fd {

// Step factors: first derivatives of frames and connections use 1e-5; the
// second-derivative-bearing curvature tensor uses 1e-4.
inline constexpr double kFirstDerivativeStep = 1e-5;
inline constexpr double kCurvatureStep = 1e-4;

template <typename Scalar>
Scalar scaled_step(const Point2<Scalar>& p, int mu, Scalar step) {
  return step * std::max(Scalar(1), std::abs(p.q[mu]));
}

// d/dq^mu of a scalar- or matrix-valued function of a point.
template <typename Scalar, typename F>
auto partial(const F& f, const Point2<Scalar>& p, int mu,
             Scalar step = Scalar(kFirstDerivativeStep)) {
  const Scalar h = scaled_step(p, mu, step);
  Point2<Scalar> plus = p;
  plus.q[mu] += h;
  Point2<Scalar> minus = p;
  minus.q[mu] -= h;
  using R = std::invoke_result_t<F, const Point2<Scalar>&>;
  if constexpr (std::is_floating_point_v<R>) {
    return (f(plus) - f(minus)) / (2 * h);
  } else {
    return ((f(plus) - f(minus)) / (2 * h)).eval();
  }
}

}  // namespace fd
}  // namespace loxo
