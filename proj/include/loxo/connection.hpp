#pragma once

// Affine connections built from vielbeins (Weizenboeck connections), torsion,
// and metric fields.  Index convention, fixed project-wide:
//
//   Gamma^rho_{mu nu} = sum_i E_i^rho d_mu e^i_nu,   stored gamma[rho](mu, nu)
//
// with mu the differentiation index.  On the sphere this puts -tan(theta)
// in slot gamma[phi](theta, phi).

#include <cmath>
#include <functional>
#include <stdexcept>

#include "loxo/chart.hpp"
#include "loxo/fd.hpp"
#include "loxo/frame.hpp"

namespace loxo {

template <typename Scalar>
struct ConnectionField {
  Chart chart;
  std::function<ConnectionCoeffs<Scalar>(const Point2<Scalar>&)> gamma;
};

template <typename Scalar>
struct TorsionField {
  Chart chart;
  std::function<ConnectionCoeffs<Scalar>(const Point2<Scalar>&)> coeffs;
};

template <typename Scalar>
struct MetricField {
  Chart chart;
  std::function<Mat2<Scalar>(const Point2<Scalar>&)> g;
};

// Weizenboeck coefficients by central finite differences of the frame.
template <typename Scalar>
ConnectionCoeffs<Scalar> weizenbock_coeffs_fd(const Vielbein2<Scalar>& v,
                                              const Point2<Scalar>& p) {
  const std::array<Mat2<Scalar>, 2> de = {
      fd::partial(v.frame, p, 0),
      fd::partial(v.frame, p, 1)};  // de[mu](i, nu)
  const Mat2<Scalar> E = v.inverse_frame(p);
  ConnectionCoeffs<Scalar> gamma = zero_connection_coeffs<Scalar>();
  for (int rho = 0; rho < 2; ++rho) {
    for (int mu = 0; mu < 2; ++mu) {
      for (int nu = 0; nu < 2; ++nu) {
        Scalar s(0);
        for (int i = 0; i < 2; ++i) s += E(rho, i) * de[mu](i, nu);
        gamma[rho](mu, nu) = s;
      }
    }
  }
  return gamma;
}

// Finite-difference evaluation regardless of any attached closed form.
template <typename Scalar>
ConnectionField<Scalar> weizenbock_connection_fd(const Vielbein2<Scalar>& v) {
  return {v.chart, [v](const Point2<Scalar>& p) {
            return weizenbock_coeffs_fd(v, p);
          }};
}

// The connection field of a vielbein: closed form when the frame carries one
// (the two built-ins), finite differences otherwise.
template <typename Scalar>
ConnectionField<Scalar> weizenbock_connection(const Vielbein2<Scalar>& v) {
  if (v.analytic_connection) {
    return {v.chart, v.analytic_connection};
  }
  return weizenbock_connection_fd(v);
}

template <typename Scalar>
ConnectionCoeffs<Scalar> torsion_coeffs(const ConnectionCoeffs<Scalar>& gamma) {
  ConnectionCoeffs<Scalar> t;
  for (int rho = 0; rho < 2; ++rho) {
    t[rho] = gamma[rho] - gamma[rho].transpose();
  }
  return t;
}

// T^rho_{mu nu} = Gamma^rho_{mu nu} - Gamma^rho_{nu mu}; antisymmetric in
// (mu, nu) by construction.
template <typename Scalar>
TorsionField<Scalar> torsion(const ConnectionField<Scalar>& c) {
  return {c.chart, [gamma = c.gamma](const Point2<Scalar>& p) {
            return torsion_coeffs<Scalar>(gamma(p));
          }};
}

}  // namespace loxo
