#pragma once

// Coordinate charts of the two-dimensional surfaces handled by the library,
// and the tagged point type shared by every field evaluation.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace loxo {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

// Affine connection coefficients Gamma^rho_{mu nu}, stored as one 2x2 matrix
// per upper index: coeffs[rho](mu, nu), with mu the differentiation index.
template <typename Scalar>
using ConnectionCoeffs = std::array<Mat2<Scalar>, 2>;

// Riemann tensor components R^rho_{sigma mu nu}: curv[rho][sigma](mu, nu).
template <typename Scalar>
using CurvatureCoeffs = std::array<std::array<Mat2<Scalar>, 2>, 2>;

template <typename Scalar>
ConnectionCoeffs<Scalar> zero_connection_coeffs() {
  return {Mat2<Scalar>::Zero(), Mat2<Scalar>::Zero()};
}

enum class Chart {
  SphereGeographic,  // (phi, theta): longitude, latitude in radians
  MercatorPlane,     // (x, y): map lengths
  Pseudosphere,      // (phi, u): angle, meridian arc length, u >= 0
  FlattenedPlane,    // (x~, y~): lengths on the conformally flattened plane
  GaussNormalized,   // (mu~, sigma~): normalized Gaussian parameters
};

// Frame evaluations on the sphere stay this far from the poles, where
// cos(theta) degenerates the frame.
inline constexpr double kSphereLatitudeGuard = 1e-6;

template <typename Scalar>
struct Point2 {
  Chart chart;
  Vec2<Scalar> q;

  Scalar a() const { return q[0]; }
  Scalar b() const { return q[1]; }
};

inline const char* chart_name(Chart c) {
  switch (c) {
    case Chart::SphereGeographic: return "sphere";
    case Chart::MercatorPlane: return "mercator";
    case Chart::Pseudosphere: return "pseudosphere";
    case Chart::FlattenedPlane: return "flattened";
    case Chart::GaussNormalized: return "gauss-normalized";
  }
  return "?";
}

inline std::pair<const char*, const char*> coordinate_names(Chart c) {
  switch (c) {
    case Chart::SphereGeographic: return {"phi", "theta"};
    case Chart::MercatorPlane: return {"x", "y"};
    case Chart::Pseudosphere: return {"phi", "u"};
    case Chart::FlattenedPlane: return {"x_tilde", "y_tilde"};
    case Chart::GaussNormalized: return {"mu_tilde", "sigma_tilde"};
  }
  return {"a", "b"};
}

// Angle coordinates (phi, mu~) are deliberately unconstrained: curves wind
// around the surface, and the inverse Mercator map can land outside one
// fundamental interval.  Only the transverse coordinate is range-checked.
template <typename Scalar>
bool in_chart_domain(const Point2<Scalar>& p) {
  if (!std::isfinite(p.a()) || !std::isfinite(p.b())) return false;
  switch (p.chart) {
    case Chart::SphereGeographic:
      return std::abs(p.b()) <=
             std::numbers::pi_v<Scalar> / 2 - Scalar(kSphereLatitudeGuard);
    case Chart::Pseudosphere:
      return p.b() >= Scalar(0);
    case Chart::GaussNormalized:
      return p.b() > Scalar(0);
    case Chart::MercatorPlane:
    case Chart::FlattenedPlane:
      return true;
  }
  return false;
}

template <typename Scalar>
void validate_point(const Point2<Scalar>& p, const char* who = "point") {
  if (!in_chart_domain(p)) {
    throw std::domain_error(std::string(who) + ": (" + std::to_string(p.a()) +
                            ", " + std::to_string(p.b()) +
                            ") outside the domain of chart " +
                            chart_name(p.chart));
  }
}

template <typename Scalar>
void expect_chart(const Point2<Scalar>& p, Chart c, const char* who) {
  if (p.chart != c) {
    throw std::invalid_argument(std::string(who) + ": expected a point in " +
                                chart_name(c) + ", got " +
                                chart_name(p.chart));
  }
}

}  // namespace loxo
