#pragma once

// Vielbein (zweibein) frames: point-dependent nonsingular 2x2 matrices
// e^i_mu relating coordinate differentials to frame differentials
// dr^i = e^i_mu dq^mu, together with the built-in sphere and pseudosphere
// frames and the anholonomy (inexact-differential) coefficients.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "loxo/chart.hpp"
#include "loxo/fd.hpp"

namespace loxo {

// Frame matrices are stored with the frame index i as the row and the
// coordinate index mu as the column: frame(p)(i, mu) = e^i_mu(p).  The
// inverse frame is the literal matrix inverse, inverse_frame(p)(mu, i) =
// E_i^mu(p), so inverse_frame(p) * frame(p) = I.
template <typename Scalar>
struct Vielbein2 {
  Chart chart;
  Scalar radius;  // sphere radius or pseudoradius of the built-ins
  std::function<Mat2<Scalar>(const Point2<Scalar>&)> frame;
  std::function<Mat2<Scalar>(const Point2<Scalar>&)> inverse_frame;
  // Closed-form Weizenboeck coefficients, attached by the built-ins; empty
  // for user-supplied frames, which fall back to finite differences.
  std::function<ConnectionCoeffs<Scalar>(const Point2<Scalar>&)>
      analytic_connection;
};

// Wraps a user-supplied frame function; the inverse is computed pointwise,
// rejecting singular frames.
template <typename Scalar, typename FrameFn>
Vielbein2<Scalar> vielbein_from_frame(Chart chart, FrameFn frame,
                                      Scalar radius = Scalar(1)) {
  Vielbein2<Scalar> v;
  v.chart = chart;
  v.radius = radius;
  v.frame = [frame, chart](const Point2<Scalar>& p) {
    expect_chart(p, chart, "vielbein frame");
    validate_point(p, "vielbein frame");
    return Mat2<Scalar>(frame(p));
  };
  v.inverse_frame = [f = v.frame](const Point2<Scalar>& p) {
    const Mat2<Scalar> e = f(p);
    const Scalar det = e.determinant();
    if (!(std::abs(det) > Scalar(1e-14) * (Scalar(1) + e.norm()))) {
      throw std::domain_error("vielbein: frame is singular at this point");
    }
    return Mat2<Scalar>(e.inverse());
  };
  return v;
}

// e = diag(R cos(theta), R) on the geographic sphere chart; the single
// nonzero Weizenboeck coefficient is Gamma^phi_{theta phi} = -tan(theta).
template <typename Scalar>
Vielbein2<Scalar> sphere_vielbein(Scalar radius) {
  if (!(radius > Scalar(0))) {
    throw std::domain_error("sphere_vielbein: requires R > 0");
  }
  Vielbein2<Scalar> v;
  v.chart = Chart::SphereGeographic;
  v.radius = radius;
  v.frame = [radius](const Point2<Scalar>& p) {
    expect_chart(p, Chart::SphereGeographic, "sphere frame");
    validate_point(p, "sphere frame");
    Mat2<Scalar> e = Mat2<Scalar>::Zero();
    e(0, 0) = radius * std::cos(p.b());
    e(1, 1) = radius;
    return e;
  };
  v.inverse_frame = [radius](const Point2<Scalar>& p) {
    expect_chart(p, Chart::SphereGeographic, "sphere frame");
    validate_point(p, "sphere frame");
    Mat2<Scalar> E = Mat2<Scalar>::Zero();
    E(0, 0) = Scalar(1) / (radius * std::cos(p.b()));
    E(1, 1) = Scalar(1) / radius;
    return E;
  };
  v.analytic_connection = [](const Point2<Scalar>& p) {
    expect_chart(p, Chart::SphereGeographic, "sphere connection");
    validate_point(p, "sphere connection");
    ConnectionCoeffs<Scalar> gamma = zero_connection_coeffs<Scalar>();
    gamma[0](1, 0) = -std::tan(p.b());  // Gamma^phi_{theta phi}
    return gamma;
  };
  return v;
}

// e = diag(R exp(-u/R), 1) on the pseudosphere chart; the single nonzero
// Weizenboeck coefficient is Gamma^phi_{u phi} = -1/R.
template <typename Scalar>
Vielbein2<Scalar> pseudosphere_vielbein(Scalar radius) {
  if (!(radius > Scalar(0))) {
    throw std::domain_error("pseudosphere_vielbein: requires R > 0");
  }
  Vielbein2<Scalar> v;
  v.chart = Chart::Pseudosphere;
  v.radius = radius;
  v.frame = [radius](const Point2<Scalar>& p) {
    expect_chart(p, Chart::Pseudosphere, "pseudosphere frame");
    validate_point(p, "pseudosphere frame");
    Mat2<Scalar> e = Mat2<Scalar>::Zero();
    e(0, 0) = radius * std::exp(-p.b() / radius);
    e(1, 1) = Scalar(1);
    return e;
  };
  v.inverse_frame = [radius](const Point2<Scalar>& p) {
    expect_chart(p, Chart::Pseudosphere, "pseudosphere frame");
    validate_point(p, "pseudosphere frame");
    Mat2<Scalar> E = Mat2<Scalar>::Zero();
    E(0, 0) = std::exp(p.b() / radius) / radius;
    E(1, 1) = Scalar(1);
    return E;
  };
  v.analytic_connection = [radius](const Point2<Scalar>& p) {
    expect_chart(p, Chart::Pseudosphere, "pseudosphere connection");
    validate_point(p, "pseudosphere connection");
    ConnectionCoeffs<Scalar> gamma = zero_connection_coeffs<Scalar>();
    gamma[0](1, 0) = Scalar(-1) / radius;  // Gamma^phi_{u phi}
    return gamma;
  };
  return v;
}

// Antisymmetrized frame derivatives a[i](mu, nu) = d_mu e^i_nu - d_nu e^i_mu:
// the coefficients of the exterior derivative d(e^i_mu dq^mu).  Nonzero for
// an anholonomic frame, identically zero for a coordinate-induced one.
template <typename Scalar>
std::array<Mat2<Scalar>, 2> anholonomy_coefficients(const Vielbein2<Scalar>& v,
                                                    const Point2<Scalar>& p) {
  validate_point(p, "anholonomy_coefficients");
  const Mat2<Scalar> d0 = fd::partial(v.frame, p, 0);
  const Mat2<Scalar> d1 = fd::partial(v.frame, p, 1);
  std::array<Mat2<Scalar>, 2> de = {d0, d1};  // de[mu](i, nu)
  std::array<Mat2<Scalar>, 2> a;
  for (int i = 0; i < 2; ++i) {
    for (int mu = 0; mu < 2; ++mu) {
      for (int nu = 0; nu < 2; ++nu) {
        a[i](mu, nu) = de[mu](i, nu) - de[nu](i, mu);
      }
    }
  }
  return a;
}

}  // namespace loxo
