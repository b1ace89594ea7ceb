#pragma once

// Auto-parallel (affine geodesic) curves of a torsionful connection:
//
//   d2q^rho/dt2 + sum_{mu,nu} Gamma^rho_{mu nu} dq^mu/dt dq^nu/dt = 0
//
// with the full double sum over ordered index pairs, integrated by classical
// fixed-step RK4; analytic loxodrome generators on the sphere and the
// pseudosphere; residual verification along sampled curves; and pointwise
// chart projection of curves.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "loxo/chart.hpp"
#include "loxo/connection.hpp"
#include "loxo/curve.hpp"
#include "loxo/errors.hpp"
#include "loxo/mercator.hpp"
#include "loxo/specialfun.hpp"

namespace loxo {

namespace detail {

template <typename Scalar>
Vec2<Scalar> geodesic_acceleration(const ConnectionCoeffs<Scalar>& gamma,
                                   const Vec2<Scalar>& v) {
  Vec2<Scalar> acc;
  for (int rho = 0; rho < 2; ++rho) {
    acc[rho] = -v.dot(gamma[rho] * v);  // -Gamma^rho_{mu nu} v^mu v^nu
  }
  return acc;
}

}  // namespace detail

// Integrates the auto-parallel equation from (q0, v0) to t_end with step dt
// (the step is rounded so an integral number of steps lands on t_end).  If
// the trajectory leaves the chart domain, the curve collected so far is
// returned with exited_domain set.
template <typename Scalar>
Curve2<Scalar> integrate_autoparallel(const ConnectionField<Scalar>& conn,
                                      const Point2<Scalar>& q0,
                                      const Vec2<Scalar>& v0, Scalar t_end,
                                      Scalar dt) {
  if (!(dt > Scalar(0)) || !(t_end > Scalar(0))) {
    throw std::invalid_argument(
        "integrate_autoparallel: requires dt > 0 and t_end > 0");
  }
  expect_chart(q0, conn.chart, "integrate_autoparallel");
  validate_point(q0, "integrate_autoparallel");

  const long n = std::max<long>(1, std::lround(t_end / dt));
  const Scalar h = t_end / Scalar(n);

  using State = Eigen::Matrix<Scalar, 4, 1>;  // (q, v)
  const auto rhs = [&conn](const State& y) {
    const Point2<Scalar> p{conn.chart, y.template head<2>()};
    validate_point(p, "integrate_autoparallel");
    State dy;
    dy.template head<2>() = y.template tail<2>();
    dy.template tail<2>() =
        detail::geodesic_acceleration(conn.gamma(p),
                                      Vec2<Scalar>(y.template tail<2>()));
    return dy;
  };

  Curve2<Scalar> out;
  out.chart = conn.chart;
  out.generator = CurveGenerator::Integrated;
  out.t.reserve(n + 1);
  out.points.reserve(n + 1);
  out.t.push_back(Scalar(0));
  out.points.push_back(q0);

  State y;
  y.template head<2>() = q0.q;
  y.template tail<2>() = v0;

  for (long k = 0; k < n; ++k) {
    State next;
    try {
      const State k1 = rhs(y);
      const State k2 = rhs(State(y + (h / 2) * k1));
      const State k3 = rhs(State(y + (h / 2) * k2));
      const State k4 = rhs(State(y + h * k3));
      next = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
      const Point2<Scalar> p{conn.chart, next.template head<2>()};
      validate_point(p, "integrate_autoparallel");
    } catch (const std::domain_error&) {
      out.exited_domain = true;
      return out;
    }
    y = next;
    out.t.push_back(Scalar(k + 1) * h);
    out.points.push_back({conn.chart, y.template head<2>()});
  }
  return out;
}

// Spherical loxodrome in the Mercator-line parametrization: theta = gd(t/R),
// phi = phi0 + tan(course) t/R.  Its Mercator image is the straight line
// (x, y) = (tan(course) t, t).
template <typename Scalar>
Curve2<Scalar> loxodrome_sphere_curve(const CourseAngle<Scalar>& course,
                                      Scalar phi0, Scalar radius,
                                      const std::vector<Scalar>& t_grid) {
  if (!(radius > Scalar(0))) {
    throw std::domain_error("loxodrome_sphere_curve: requires R > 0");
  }
  Curve2<Scalar> out;
  out.chart = Chart::SphereGeographic;
  out.generator = CurveGenerator::AnalyticLoxodrome;
  out.t = t_grid;
  out.points.reserve(t_grid.size());
  const Scalar tan_course = course.tan();
  for (Scalar t : t_grid) {
    out.points.push_back({Chart::SphereGeographic,
                          {phi0 + tan_course * t / radius, gd(t / radius)}});
  }
  validate_curve(out, "loxodrome_sphere_curve");
  return out;
}

// The same loxodrome in its affine (frame) parametrization theta = t/R,
// phi = phi0 + tan(course) gd_inv(t/R): this is the parametrization that
// satisfies the auto-parallel equation of the sphere connection, with
// constant frame velocity (tan(course), 1).
template <typename Scalar>
Curve2<Scalar> loxodrome_sphere_curve_frame(const CourseAngle<Scalar>& course,
                                            Scalar phi0, Scalar radius,
                                            const std::vector<Scalar>& t_grid) {
  if (!(radius > Scalar(0))) {
    throw std::domain_error("loxodrome_sphere_curve_frame: requires R > 0");
  }
  Curve2<Scalar> out;
  out.chart = Chart::SphereGeographic;
  out.generator = CurveGenerator::AnalyticLoxodrome;
  out.t = t_grid;
  out.points.reserve(t_grid.size());
  const Scalar tan_course = course.tan();
  for (Scalar t : t_grid) {
    out.points.push_back(
        {Chart::SphereGeographic,
         {phi0 + tan_course * gd_inv(t / radius), t / radius}});
  }
  validate_curve(out, "loxodrome_sphere_curve_frame");
  return out;
}

// Pseudosphere loxodrome u(t) = t, phi(t) = phi0 + tan(course) e^{t/R};
// affinely parametrized as written.
template <typename Scalar>
Curve2<Scalar> loxodrome_pseudosphere_curve(const CourseAngle<Scalar>& course,
                                            Scalar phi0, Scalar radius,
                                            const std::vector<Scalar>& t_grid) {
  if (!(radius > Scalar(0))) {
    throw std::domain_error("loxodrome_pseudosphere_curve: requires R > 0");
  }
  Curve2<Scalar> out;
  out.chart = Chart::Pseudosphere;
  out.generator = CurveGenerator::AnalyticLoxodrome;
  out.t = t_grid;
  out.points.reserve(t_grid.size());
  const Scalar tan_course = course.tan();
  for (Scalar t : t_grid) {
    if (t < Scalar(0)) {
      throw std::domain_error(
          "loxodrome_pseudosphere_curve: requires t >= 0 (u = t)");
    }
    out.points.push_back(
        {Chart::Pseudosphere,
         {phi0 + tan_course * std::exp(t / radius), t}});
  }
  validate_curve(out, "loxodrome_pseudosphere_curve");
  return out;
}

// Max-norm auto-parallel residual |q" ^rho + Gamma^rho_{mu nu} q'^mu q'^nu|
// over interior samples, with 4th-order central differences for q' and q".
// Requires at least 5 samples on a uniform grid.
template <typename Scalar>
Scalar autoparallel_residual(const Curve2<Scalar>& curve,
                             const ConnectionField<Scalar>& conn) {
  const std::size_t n = curve.size();
  if (n < 5) {
    throw std::invalid_argument(
        "autoparallel_residual: needs at least 5 samples");
  }
  if (curve.chart != conn.chart) {
    throw std::invalid_argument(
        "autoparallel_residual: curve and connection chart mismatch");
  }
  const Scalar h = curve.t[1] - curve.t[0];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (std::abs((curve.t[k + 1] - curve.t[k]) - h) >
        Scalar(1e-9) * std::max(Scalar(1), std::abs(h))) {
      throw std::invalid_argument(
          "autoparallel_residual: requires a uniform parameter grid");
    }
  }

  Scalar worst(0);
  for (std::size_t k = 2; k + 2 < n; ++k) {
    const Vec2<Scalar>& qm2 = curve.points[k - 2].q;
    const Vec2<Scalar>& qm1 = curve.points[k - 1].q;
    const Vec2<Scalar>& q0 = curve.points[k].q;
    const Vec2<Scalar>& qp1 = curve.points[k + 1].q;
    const Vec2<Scalar>& qp2 = curve.points[k + 2].q;
    const Vec2<Scalar> vel = (qm2 - 8 * qm1 + 8 * qp1 - qp2) / (12 * h);
    const Vec2<Scalar> acc =
        (-qm2 + 16 * qm1 - 30 * q0 + 16 * qp1 - qp2) / (12 * h * h);
    const ConnectionCoeffs<Scalar> gamma = conn.gamma(curve.points[k]);
    for (int rho = 0; rho < 2; ++rho) {
      worst = std::max(worst,
                       std::abs(acc[rho] + vel.dot(gamma[rho] * vel)));
    }
  }
  return worst;
}

// Pointwise chart map used by curve projection.  Supported pairs:
// sphere <-> mercator, pseudosphere <-> flattened (x~ = R phi,
// y~ = R e^{u/R}).
template <typename Scalar>
Point2<Scalar> project_point(const Point2<Scalar>& p, Chart target,
                             Scalar radius, Scalar phi0 = Scalar(0)) {
  if (p.chart == target) return p;
  if (p.chart == Chart::SphereGeographic && target == Chart::MercatorPlane) {
    return mercator_forward(p, radius, phi0);
  }
  if (p.chart == Chart::MercatorPlane && target == Chart::SphereGeographic) {
    return mercator_inverse(p, radius, phi0);
  }
  if (p.chart == Chart::Pseudosphere && target == Chart::FlattenedPlane) {
    validate_point(p, "project_point");
    return {Chart::FlattenedPlane,
            {radius * p.a(), radius * std::exp(p.b() / radius)}};
  }
  if (p.chart == Chart::FlattenedPlane && target == Chart::Pseudosphere) {
    if (!(p.b() > Scalar(0))) {
      throw std::domain_error(
          "project_point: flattened ordinate must be positive");
    }
    const Point2<Scalar> out{Chart::Pseudosphere,
                             {p.a() / radius,
                              radius * std::log(p.b() / radius)}};
    validate_point(out, "project_point");  // y~ < R would give u < 0
    return out;
  }
  throw unsupported_projection(
      std::string("project_point: no chart map from ") +
      chart_name(p.chart) + " to " + chart_name(target));
}

template <typename Scalar>
Curve2<Scalar> project_curve(const Curve2<Scalar>& curve, Chart target,
                             Scalar radius, Scalar phi0 = Scalar(0)) {
  Curve2<Scalar> out;
  out.chart = target;
  out.generator = CurveGenerator::Projected;
  out.exited_domain = curve.exited_domain;
  out.t = curve.t;
  out.points.reserve(curve.points.size());
  for (const auto& p : curve.points) {
    out.points.push_back(project_point(p, target, radius, phi0));
  }
  return out;
}

}  // namespace loxo
