#pragma once

// The Gaussian family as an information-geometric surface: density,
// Fisher-Rao metric, Poincare half-plane structure and its curvature,
// normalization onto the pseudosphere-admitted region, the pseudosphere
// coordinate change (pseudoradius sqrt(2)), and the conformally flattened
// plane (x~, y~) = (mu~, sqrt(2) sigma~).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "loxo/autoparallel.hpp"
#include "loxo/chart.hpp"
#include "loxo/connection.hpp"
#include "loxo/curvature.hpp"
#include "loxo/curve.hpp"

namespace loxo {

template <typename Scalar>
struct GaussParams {
  GaussParams(Scalar mu_, Scalar sigma_) : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !(sigma > Scalar(0))) {
      throw std::domain_error("GaussParams: requires finite mu and sigma > 0");
    }
  }

  Scalar mu;
  Scalar sigma;
};

// Scaling box for the normalization sigma~ = sigma/sigma_min,
// mu~ = pi mu/|mu_max|; the admitted region is sigma >= sigma_min,
// |mu| <= mu_max_abs.
template <typename Scalar>
struct NormalizationBox {
  Scalar sigma_min = Scalar(1);
  Scalar mu_max_abs = std::numbers::pi_v<Scalar>;
};

template <typename Scalar>
Scalar gauss_pdf(Scalar x, const GaussParams<Scalar>& p) {
  const Scalar z = (x - p.mu) / p.sigma;
  return std::exp(-z * z / 2) /
         std::sqrt(2 * std::numbers::pi_v<Scalar> * p.sigma * p.sigma);
}

// Fisher-Rao metric of the Gaussian family: diag(1, 2)/sigma^2.
template <typename Scalar>
Mat2<Scalar> fisher_rao_metric(const GaussParams<Scalar>& p) {
  Mat2<Scalar> g = Mat2<Scalar>::Zero();
  g(0, 0) = Scalar(1) / (p.sigma * p.sigma);
  g(1, 1) = Scalar(2) / (p.sigma * p.sigma);
  return g;
}

// Levi-Civita coefficients of the Fisher-Rao metric (any constant rescaling
// of the metric has the same connection): Gamma^mu_{mu sigma} = -1/sigma,
// Gamma^sigma_{mu mu} = 1/(2 sigma), Gamma^sigma_{sigma sigma} = -1/sigma.
template <typename Scalar>
ConnectionCoeffs<Scalar> fisher_rao_christoffels(Scalar sigma) {
  if (!(sigma > Scalar(0))) {
    throw std::domain_error("fisher_rao_christoffels: requires sigma > 0");
  }
  ConnectionCoeffs<Scalar> gamma = zero_connection_coeffs<Scalar>();
  gamma[0](0, 1) = Scalar(-1) / sigma;
  gamma[0](1, 0) = Scalar(-1) / sigma;
  gamma[1](0, 0) = Scalar(1) / (2 * sigma);
  gamma[1](1, 1) = Scalar(-1) / sigma;
  return gamma;
}

// Numeric Gaussian curvature of (a constant multiple of) the Fisher-Rao
// metric at a parameter point; -1/2 for the metric itself, -1/(2 c) for the
// metric scaled by c.
template <typename Scalar>
Scalar poincare_curvature(const GaussParams<Scalar>& at,
                          Scalar h = Scalar(fd::kCurvatureStep),
                          Scalar metric_scale = Scalar(1)) {
  ConnectionField<Scalar> levi_civita{
      Chart::GaussNormalized, [](const Point2<Scalar>& p) {
        validate_point(p, "poincare_curvature");
        return fisher_rao_christoffels(p.b());
      }};
  MetricField<Scalar> metric{
      Chart::GaussNormalized, [metric_scale](const Point2<Scalar>& p) {
        validate_point(p, "poincare_curvature");
        return Mat2<Scalar>(metric_scale *
                            fisher_rao_metric(GaussParams<Scalar>(
                                p.a(), p.b())));
      }};
  return gaussian_curvature(levi_civita, metric,
                            Point2<Scalar>{Chart::GaussNormalized,
                                           {at.mu, at.sigma}},
                            h);
}

// Normalized Poincare half-plane metric diag(1, 2)/sigma~^2 on the
// normalized chart.
template <typename Scalar>
MetricField<Scalar> poincare_metric_field() {
  return {Chart::GaussNormalized, [](const Point2<Scalar>& p) {
            validate_point(p, "poincare_metric_field");
            Mat2<Scalar> g = Mat2<Scalar>::Zero();
            g(0, 0) = Scalar(1) / (p.b() * p.b());
            g(1, 1) = Scalar(2) / (p.b() * p.b());
            return g;
          }};
}

template <typename Scalar>
Point2<Scalar> normalize(const GaussParams<Scalar>& p,
                         const NormalizationBox<Scalar>& box) {
  if (p.sigma < box.sigma_min) {
    throw std::domain_error("normalize: sigma below sigma_min");
  }
  if (std::abs(p.mu) > box.mu_max_abs) {
    throw std::domain_error("normalize: |mu| above mu_max_abs");
  }
  return {Chart::GaussNormalized,
          {std::numbers::pi_v<Scalar> * p.mu / box.mu_max_abs,
           p.sigma / box.sigma_min}};
}

template <typename Scalar>
GaussParams<Scalar> denormalize(const Point2<Scalar>& pn,
                                const NormalizationBox<Scalar>& box) {
  expect_chart(pn, Chart::GaussNormalized, "denormalize");
  return {pn.a() * box.mu_max_abs / std::numbers::pi_v<Scalar>,
          pn.b() * box.sigma_min};
}

// (mu~, sigma~) -> (phi, u) = (mu~/sqrt(2), sqrt(2) ln sigma~); an isometry
// between the normalized half-plane metric and the pseudosphere metric with
// pseudoradius sqrt(2).  Requires sigma~ >= 1 so that u >= 0.
template <typename Scalar>
Point2<Scalar> to_pseudosphere(const Point2<Scalar>& pn) {
  expect_chart(pn, Chart::GaussNormalized, "to_pseudosphere");
  constexpr Scalar sqrt2 = std::numbers::sqrt2_v<Scalar>;
  if (!(pn.b() >= Scalar(1))) {
    throw std::domain_error("to_pseudosphere: requires sigma~ >= 1");
  }
  return {Chart::Pseudosphere, {pn.a() / sqrt2, sqrt2 * std::log(pn.b())}};
}

template <typename Scalar>
Point2<Scalar> from_pseudosphere(const Point2<Scalar>& p) {
  expect_chart(p, Chart::Pseudosphere, "from_pseudosphere");
  validate_point(p, "from_pseudosphere");
  constexpr Scalar sqrt2 = std::numbers::sqrt2_v<Scalar>;
  return {Chart::GaussNormalized,
          {sqrt2 * p.a(), std::exp(p.b() / sqrt2)}};
}

// (mu~, sigma~) -> (x~, y~) = (mu~, sqrt(2) sigma~): the conformally
// flattened plane, affine in the normalized parameters.
template <typename Scalar>
Point2<Scalar> to_flattened(const Point2<Scalar>& pn) {
  expect_chart(pn, Chart::GaussNormalized, "to_flattened");
  if (!(pn.b() >= Scalar(1))) {
    throw std::domain_error("to_flattened: requires sigma~ >= 1");
  }
  return {Chart::FlattenedPlane,
          {pn.a(), std::numbers::sqrt2_v<Scalar> * pn.b()}};
}

template <typename Scalar>
struct GaussFamilyTrace {
  std::vector<Scalar> t;
  std::vector<GaussParams<Scalar>> params;
  bool exited_region = false;
};

// The one-parameter Gaussian family traced by a pseudosphere loxodrome with
// the given course angle; phi0 is chosen so the path starts at
// (mu, sigma) = (0, sigma_min).  Truncates (with the exit flag set) once the
// path leaves the admitted region |mu| <= mu_max_abs.
template <typename Scalar>
GaussFamilyTrace<Scalar> gauss_family_along_loxodrome(
    const CourseAngle<Scalar>& course, const NormalizationBox<Scalar>& box,
    const std::vector<Scalar>& t_grid) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  constexpr Scalar sqrt2 = std::numbers::sqrt2_v<Scalar>;
  const Curve2<Scalar> curve =
      loxodrome_pseudosphere_curve(course, -course.tan(), sqrt2, t_grid);

  GaussFamilyTrace<Scalar> trace;
  trace.t.reserve(curve.size());
  trace.params.reserve(curve.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    const Point2<Scalar> pn = from_pseudosphere(curve.points[k]);
    if (std::abs(pn.a()) > pi) {
      trace.exited_region = true;
      break;
    }
    trace.t.push_back(curve.t[k]);
    trace.params.push_back(denormalize(pn, box));
  }
  return trace;
}

}  // namespace loxo
