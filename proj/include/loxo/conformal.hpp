#pragma once

// Conformal transformation of a metric and an affine connection:
//
//   g~_{mu nu}      = e^{2 lambda} g_{mu nu}
//   Gamma~^rho_{mu nu} = Gamma^rho_{mu nu} + delta^rho_mu d_nu lambda
//                      + delta^rho_nu d_mu lambda - g_{mu nu} grad^rho lambda
//
// with grad^rho lambda = g^{rho sigma} d_sigma lambda.  Applying lambda and
// then -lambda restores the original pair exactly.

#include <cmath>
#include <functional>
#include <utility>

#include "loxo/chart.hpp"
#include "loxo/connection.hpp"
#include "loxo/errors.hpp"

namespace loxo {

template <typename Scalar>
using ScalarFieldFn = std::function<Scalar(const Point2<Scalar>&)>;
template <typename Scalar>
using GradientFieldFn = std::function<Vec2<Scalar>(const Point2<Scalar>&)>;

template <typename Scalar>
std::pair<MetricField<Scalar>, ConnectionField<Scalar>> conformal_transform(
    const MetricField<Scalar>& metric, const ConnectionField<Scalar>& conn,
    ScalarFieldFn<Scalar> lambda, GradientFieldFn<Scalar> grad_lambda) {
  MetricField<Scalar> metric_out{
      metric.chart,
      [g = metric.g, lambda](const Point2<Scalar>& p) {
        return Mat2<Scalar>(std::exp(2 * lambda(p)) * g(p));
      }};

  ConnectionField<Scalar> conn_out{
      conn.chart,
      [g = metric.g, gamma = conn.gamma, grad_lambda](const Point2<Scalar>& p) {
        const ConnectionCoeffs<Scalar> in = gamma(p);
        const Mat2<Scalar> gp = g(p);
        const Scalar det = gp.determinant();
        if (!(std::abs(det) > Scalar(1e-14) * (Scalar(1) + gp.norm()))) {
          throw numeric_error("conformal_transform: singular metric",
                              static_cast<double>(std::abs(det)));
        }
        const Vec2<Scalar> dl = grad_lambda(p);
        const Vec2<Scalar> raised = gp.inverse() * dl;  // grad^rho lambda
        ConnectionCoeffs<Scalar> out;
        for (int rho = 0; rho < 2; ++rho) {
          for (int mu = 0; mu < 2; ++mu) {
            for (int nu = 0; nu < 2; ++nu) {
              Scalar v = in[rho](mu, nu);
              if (rho == mu) v += dl[nu];
              if (rho == nu) v += dl[mu];
              v -= gp(mu, nu) * raised[rho];
              out[rho](mu, nu) = v;
            }
          }
        }
        return out;
      }};

  return {std::move(metric_out), std::move(conn_out)};
}

}  // namespace loxo
