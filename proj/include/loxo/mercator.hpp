#pragma once

// Mercator projection between the geographic sphere chart and the map plane,
// and the defining relation of the spherical loxodrome.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loxo/chart.hpp"
#include "loxo/specialfun.hpp"

namespace loxo {

namespace detail {

template <typename Scalar>
void require_radius(Scalar radius, const char* who) {
  if (!(radius > Scalar(0)) || !std::isfinite(radius)) {
    throw std::domain_error(std::string(who) + ": requires R > 0");
  }
}

}  // namespace detail

// (phi, theta) -> (x, y) = (R (phi - phi0), R gd_inv(theta)).
template <typename Scalar>
Point2<Scalar> mercator_forward(const Point2<Scalar>& p, Scalar radius,
                                Scalar phi0 = Scalar(0)) {
  expect_chart(p, Chart::SphereGeographic, "mercator_forward");
  detail::require_radius(radius, "mercator_forward");
  return {Chart::MercatorPlane,
          {radius * (p.a() - phi0), radius * gd_inv(p.b())}};
}

// (x, y) -> (phi, theta) = (phi0 + x/R, gd(y/R)); theta always lands in
// (-pi/2, pi/2) because gd is bounded.
template <typename Scalar>
Point2<Scalar> mercator_inverse(const Point2<Scalar>& p, Scalar radius,
                                Scalar phi0 = Scalar(0)) {
  expect_chart(p, Chart::MercatorPlane, "mercator_inverse");
  detail::require_radius(radius, "mercator_inverse");
  return {Chart::SphereGeographic, {phi0 + p.a() / radius, gd(p.b() / radius)}};
}

// Residual of the loxodrome relation theta = gd(cot(course) (phi - phi0));
// zero iff (phi, theta) lies on the loxodrome with the given course angle.
template <typename Scalar>
Scalar loxodrome_relation_sphere(Scalar phi, Scalar theta, Scalar phi0,
                                 Scalar course_angle) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (!(course_angle > Scalar(0)) || !(course_angle < pi) ||
      std::abs(course_angle - pi / 2) < Scalar(1e-12)) {
    throw std::domain_error(
        "loxodrome_relation_sphere: course angle must lie in (0, pi) and "
        "differ from pi/2");
  }
  const Scalar cot = Scalar(1) / std::tan(course_angle);
  return theta - gd(cot * (phi - phi0));
}

}  // namespace loxo
