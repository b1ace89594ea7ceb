#pragma once

// Riemann curvature of an affine connection by central finite differences,
// and the Gaussian (sectional) curvature of a 2D metric given its
// Levi-Civita connection.  A Weizenboeck connection is flat: every component
// vanishes to the finite-difference tolerance.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "loxo/chart.hpp"
#include "loxo/connection.hpp"

namespace loxo {

// R^rho_{sigma mu nu} = d_mu Gamma^rho_{nu sigma} - d_nu Gamma^rho_{mu sigma}
//                     + Gamma^rho_{mu g} Gamma^g_{nu sigma}
//                     - Gamma^rho_{nu g} Gamma^g_{mu sigma}
template <typename Scalar>
CurvatureCoeffs<Scalar> riemann_curvature(const ConnectionField<Scalar>& c,
                                          const Point2<Scalar>& p,
                                          Scalar h = Scalar(fd::kCurvatureStep)) {
  validate_point(p, "riemann_curvature");
  std::array<ConnectionCoeffs<Scalar>, 2> dgamma;  // dgamma[mu][rho](nu,sigma)
  for (int mu = 0; mu < 2; ++mu) {
    Point2<Scalar> plus = p;
    plus.q[mu] += h;
    Point2<Scalar> minus = p;
    minus.q[mu] -= h;
    const ConnectionCoeffs<Scalar> gp = c.gamma(plus);
    const ConnectionCoeffs<Scalar> gm = c.gamma(minus);
    for (int rho = 0; rho < 2; ++rho) {
      dgamma[mu][rho] = (gp[rho] - gm[rho]) / (2 * h);
    }
  }
  const ConnectionCoeffs<Scalar> gamma = c.gamma(p);

  CurvatureCoeffs<Scalar> riem;
  for (int rho = 0; rho < 2; ++rho) {
    for (int sigma = 0; sigma < 2; ++sigma) {
      for (int mu = 0; mu < 2; ++mu) {
        for (int nu = 0; nu < 2; ++nu) {
          Scalar r = dgamma[mu][rho](nu, sigma) - dgamma[nu][rho](mu, sigma);
          for (int g = 0; g < 2; ++g) {
            r += gamma[rho](mu, g) * gamma[g](nu, sigma) -
                 gamma[rho](nu, g) * gamma[g](mu, sigma);
          }
          riem[rho][sigma](mu, nu) = r;
        }
      }
    }
  }
  return riem;
}

template <typename Scalar>
Scalar max_abs(const CurvatureCoeffs<Scalar>& riem) {
  Scalar m(0);
  for (int rho = 0; rho < 2; ++rho) {
    for (int sigma = 0; sigma < 2; ++sigma) {
      m = std::max(m, riem[rho][sigma].template lpNorm<Eigen::Infinity>());
    }
  }
  return m;
}

// Gaussian curvature K = R_{0101} / det(g) of a 2D metric whose Levi-Civita
// connection is supplied alongside it.  For a metric of constant curvature
// -1/R^2 this returns -1/R^2 to the finite-difference tolerance.
template <typename Scalar>
Scalar gaussian_curvature(const ConnectionField<Scalar>& levi_civita,
                          const MetricField<Scalar>& metric,
                          const Point2<Scalar>& p,
                          Scalar h = Scalar(fd::kCurvatureStep)) {
  const CurvatureCoeffs<Scalar> riem = riemann_curvature(levi_civita, p, h);
  const Mat2<Scalar> g = metric.g(p);
  const Scalar det = g.determinant();
  if (!(std::abs(det) > Scalar(0))) {
    throw numeric_error("gaussian_curvature: singular metric", 0.0);
  }
  // R_{0101} = g_{0 lambda} R^lambda_{101}
  const Scalar lowered =
      g(0, 0) * riem[0][1](0, 1) + g(0, 1) * riem[1][1](0, 1);
  return lowered / det;
}

}  // namespace loxo
