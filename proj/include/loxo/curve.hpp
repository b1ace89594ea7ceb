#pragma once

// Sampled parametrized curves in a chart, course angles, and total
// least-squares line fitting used for straightness checks.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "loxo/chart.hpp"

namespace loxo {

enum class CurveGenerator { AnalyticLoxodrome, Integrated, Projected };

template <typename Scalar>
struct Curve2 {
  Chart chart;
  std::vector<Scalar> t;              // strictly increasing
  std::vector<Point2<Scalar>> points;  // same length as t
  CurveGenerator generator = CurveGenerator::AnalyticLoxodrome;
  bool exited_domain = false;

  std::size_t size() const { return t.size(); }
};

template <typename Scalar>
void validate_curve(const Curve2<Scalar>& c, const char* who = "curve") {
  if (c.t.size() != c.points.size()) {
    throw std::invalid_argument(std::string(who) +
                                ": sample and parameter counts differ");
  }
  for (std::size_t k = 0; k + 1 < c.t.size(); ++k) {
    if (!(c.t[k] < c.t[k + 1])) {
      throw std::invalid_argument(std::string(who) +
                                  ": parameter values must increase strictly");
    }
  }
  for (const auto& p : c.points) validate_point(p, who);
}

// Course angle of a loxodrome: the constant angle against the meridians,
// in (0, pi) and distinct from pi/2 (a parallel is not a loxodrome).
template <typename Scalar>
class CourseAngle {
 public:
  explicit CourseAngle(Scalar radians) : phi_(radians) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    if (!(radians > Scalar(0)) || !(radians < pi) ||
        std::abs(radians - pi / 2) < Scalar(1e-12)) {
      throw std::domain_error(
          "CourseAngle: must lie in (0, pi) and differ from pi/2");
    }
  }

  Scalar radians() const noexcept { return phi_; }
  Scalar tan() const { return std::tan(phi_); }
  Scalar cot() const { return Scalar(1) / std::tan(phi_); }

 private:
  Scalar phi_;
};

// Total least-squares line through a point cloud: principal direction of the
// centered covariance, plus the largest perpendicular offset.
template <typename Scalar>
struct LineFit {
  Vec2<Scalar> centroid;
  Vec2<Scalar> direction;  // unit vector along the line
  Scalar max_abs_offset;   // max_k |(p_k - centroid) . normal|

  Scalar slope() const { return direction.y() / direction.x(); }
};

template <typename Scalar>
LineFit<Scalar> fit_line(const std::vector<Vec2<Scalar>>& pts) {
  if (pts.size() < 2) {
    throw std::invalid_argument("fit_line: needs at least two points");
  }
  Vec2<Scalar> centroid = Vec2<Scalar>::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= Scalar(pts.size());

  Mat2<Scalar> cov = Mat2<Scalar>::Zero();
  for (const auto& p : pts) {
    const Vec2<Scalar> d = p - centroid;
    cov += d * d.transpose();
  }

  Eigen::SelfAdjointEigenSolver<Mat2<Scalar>> eig(cov);
  const Vec2<Scalar> direction = eig.eigenvectors().col(1);  // largest
  const Vec2<Scalar> normal{-direction.y(), direction.x()};

  Scalar worst(0);
  for (const auto& p : pts) {
    worst = std::max(worst, std::abs(normal.dot(p - centroid)));
  }
  return {centroid, direction, worst};
}

template <typename Scalar>
LineFit<Scalar> fit_line(const Curve2<Scalar>& curve) {
  std::vector<Vec2<Scalar>> pts;
  pts.reserve(curve.points.size());
  for (const auto& p : curve.points) pts.push_back(p.q);
  return fit_line(pts);
}

}  // namespace loxo
