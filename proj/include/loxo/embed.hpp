#pragma once

// Cartesian embedding of the pseudosphere and the induced metric of an
// embedded surface by finite-difference Jacobians.

#include <cmath>
#include <stdexcept>

#include "loxo/chart.hpp"
#include "loxo/fd.hpp"

namespace loxo {

// (phi, u) -> (r(u) cos(phi), r(u) sin(phi), h(u)) with r(u) = R e^{-u/R}
// and h(u) = R atanh(w) - R w, w = sqrt(1 - e^{-2u/R}).  h is strictly
// increasing in u; h(0) = 0.
template <typename Scalar>
Vec3<Scalar> pseudosphere_embed(const Point2<Scalar>& p, Scalar radius) {
  expect_chart(p, Chart::Pseudosphere, "pseudosphere_embed");
  validate_point(p, "pseudosphere_embed");
  if (!(radius > Scalar(0))) {
    throw std::domain_error("pseudosphere_embed: requires R > 0");
  }
  const Scalar r = radius * std::exp(-p.b() / radius);
  const Scalar w = std::sqrt(Scalar(1) - std::exp(-2 * p.b() / radius));
  const Scalar h = radius * std::atanh(w) - radius * w;
  return {r * std::cos(p.a()), r * std::sin(p.a()), h};
}

// Induced metric g = J^T J of an embedding (Point2 -> Vec3), with the
// Jacobian J taken by central differences.
template <typename Scalar, typename EmbedFn>
Mat2<Scalar> induced_metric(const EmbedFn& embed, const Point2<Scalar>& p,
                            Scalar step = Scalar(fd::kFirstDerivativeStep)) {
  Eigen::Matrix<Scalar, 3, 2> jac;
  for (int mu = 0; mu < 2; ++mu) {
    const Scalar h = fd::scaled_step(p, mu, step);
    Point2<Scalar> plus = p;
    plus.q[mu] += h;
    Point2<Scalar> minus = p;
    minus.q[mu] -= h;
    jac.col(mu) = (embed(plus) - embed(minus)) / (2 * h);
  }
  return jac.transpose() * jac;
}

}  // namespace loxo
