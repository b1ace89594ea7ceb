#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loxo/conformal.hpp"
#include "loxo/connection.hpp"
#include "loxo/curvature.hpp"
#include "loxo/embed.hpp"
#include "loxo/frame.hpp"
#include "testutil.hpp"

using loxo::Chart;
using loxo::ConnectionCoeffs;
using loxo::Mat2;
using loxo::Point2;
using std::numbers::pi;

namespace {

Point2<double> sphere_pt(double phi, double theta) {
  return {Chart::SphereGeographic, {phi, theta}};
}

Point2<double> pseudo_pt(double phi, double u) {
  return {Chart::Pseudosphere, {phi, u}};
}

// Levi-Civita fixture for the pseudosphere metric
// ds^2 = R^2 e^{-2u/R} dphi^2 + du^2: the nonzero coefficients are
// Gamma^phi_{phi u} = Gamma^phi_{u phi} = -1/R and Gamma^u_{phi phi}
// = R e^{-2u/R}.  Kept test-local: metric-to-connection derivation is not a
// public operation.
loxo::ConnectionField<double> pseudosphere_levi_civita(double radius) {
  return {Chart::Pseudosphere, [radius](const Point2<double>& p) {
            loxo::validate_point(p, "pseudosphere_levi_civita");
            ConnectionCoeffs<double> g = loxo::zero_connection_coeffs<double>();
            g[0](0, 1) = -1.0 / radius;
            g[0](1, 0) = -1.0 / radius;
            g[1](0, 0) = radius * std::exp(-2.0 * p.b() / radius);
            return g;
          }};
}

loxo::MetricField<double> pseudosphere_metric(double radius) {
  return {Chart::Pseudosphere, [radius](const Point2<double>& p) {
            loxo::validate_point(p, "pseudosphere_metric");
            Mat2<double> g = Mat2<double>::Zero();
            g(0, 0) = radius * radius * std::exp(-2.0 * p.b() / radius);
            g(1, 1) = 1.0;
            return g;
          }};
}

}  // namespace

TEST_CASE("Weizenboeck connections are flat") {
  const auto sphere_conn =
      loxo::weizenbock_connection(loxo::sphere_vielbein(1.0));
  CHECK(loxo::max_abs(loxo::riemann_curvature(sphere_conn,
                                              sphere_pt(0.3, 0.5))) < 1e-6);

  const auto pseudo_conn = loxo::weizenbock_connection(
      loxo::pseudosphere_vielbein(std::sqrt(2.0)));
  CHECK(loxo::max_abs(loxo::riemann_curvature(pseudo_conn,
                                              pseudo_pt(0.5, 1.0))) < 1e-6);

  SUBCASE("across a grid of points, both charts") {
    for (double phi : testutil::linspace(-2.0, 2.0, 5)) {
      for (double theta : testutil::linspace(-1.0, 1.0, 5)) {
        CHECK(loxo::max_abs(loxo::riemann_curvature(
                  sphere_conn, sphere_pt(phi, theta))) < 1e-6);
      }
      for (double u : testutil::linspace(0.2, 3.0, 5)) {
        CHECK(loxo::max_abs(loxo::riemann_curvature(
                  pseudo_conn, pseudo_pt(phi, u))) < 1e-6);
      }
    }
  }

  SUBCASE("also for a finite-difference generic frame") {
    const auto v = loxo::vielbein_from_frame<double>(
        Chart::MercatorPlane, [](const Point2<double>& p) {
          Mat2<double> e;
          e << 1.0 + 0.1 * std::sin(p.a()), 0.2 * p.b(),
              0.1 * p.a() * p.b(), 1.3 + 0.1 * std::cos(p.b());
          return e;
        });
    const auto conn = loxo::weizenbock_connection(v);
    CHECK(loxo::max_abs(loxo::riemann_curvature(
              conn, Point2<double>{Chart::MercatorPlane, {0.6, -0.3}})) <
          1e-6);
  }

  SUBCASE("antisymmetry in the last index pair is exact") {
    const auto r = loxo::riemann_curvature(sphere_conn, sphere_pt(0.1, 0.7));
    for (int rho = 0; rho < 2; ++rho) {
      for (int sigma = 0; sigma < 2; ++sigma) {
        CHECK(r[rho][sigma](0, 0) == 0.0);
        CHECK(r[rho][sigma](1, 1) == 0.0);
        CHECK(r[rho][sigma](0, 1) == -r[rho][sigma](1, 0));
      }
    }
  }

  SUBCASE("stencil leaving the chart domain") {
    CHECK_THROWS_AS(
        loxo::riemann_curvature(pseudo_conn, pseudo_pt(0.0, 0.0)),
        std::domain_error);
  }
}

TEST_CASE("negative control: constant-curvature metric is detected") {
  for (double radius : {1.0, std::sqrt(2.0), 2.0}) {
    const auto lc = pseudosphere_levi_civita(radius);
    const auto g = pseudosphere_metric(radius);
    for (double u : {0.5, 1.5}) {
      const double k =
          loxo::gaussian_curvature(lc, g, pseudo_pt(0.8, u));
      CHECK(std::abs(k + 1.0 / (radius * radius)) < 1e-4);
    }
  }
}

TEST_CASE("conformal transformation") {
  const double radius = std::sqrt(2.0);
  const auto conn =
      loxo::weizenbock_connection(loxo::pseudosphere_vielbein(radius));
  const auto metric = pseudosphere_metric(radius);

  SUBCASE("identity factor changes nothing") {
    auto [gt, ct] = loxo::conformal_transform<double>(
        metric, conn, [](const Point2<double>&) { return 0.0; },
        [](const Point2<double>&) { return loxo::Vec2<double>::Zero(); });
    const auto p = pseudo_pt(0.3, 0.9);
    CHECK((gt.g(p) - metric.g(p)).norm() == 0.0);
    const auto a = ct.gamma(p);
    const auto b = conn.gamma(p);
    for (int rho = 0; rho < 2; ++rho) CHECK((a[rho] - b[rho]).norm() == 0.0);
  }

  SUBCASE("lambda = u/R flattens the pseudosphere connection") {
    auto [gt, ct] = loxo::conformal_transform<double>(
        metric, conn,
        [radius](const Point2<double>& p) { return p.b() / radius; },
        [radius](const Point2<double>&) {
          return loxo::Vec2<double>{0.0, 1.0 / radius};
        });
    for (double u : {0.0, 0.7, 2.0}) {
      const auto g = ct.gamma(pseudo_pt(0.2, u));
      CHECK(std::abs(g[0](1, 0)) < 1e-12);                    // was -1/R
      CHECK(std::abs(g[0](0, 1) - 1.0 / radius) < 1e-12);     // now +1/R
      // Transformed metric: e^{2u/R} diag(R^2 e^{-2u/R}, 1).
      const auto gm = gt.g(pseudo_pt(0.2, u));
      CHECK(std::abs(gm(0, 0) - radius * radius) < 1e-12);
      CHECK(std::abs(gm(1, 1) - std::exp(2.0 * u / radius)) < 1e-12);
    }
  }

  SUBCASE("involution: lambda then -lambda restores the pair") {
    const auto lambda = [radius](const Point2<double>& p) {
      return p.b() / radius;
    };
    const auto grad = [radius](const Point2<double>&) {
      return loxo::Vec2<double>{0.0, 1.0 / radius};
    };
    auto [g1, c1] = loxo::conformal_transform<double>(metric, conn, lambda,
                                                      grad);
    auto [g2, c2] = loxo::conformal_transform<double>(
        g1, c1,
        [lambda](const Point2<double>& p) { return -lambda(p); },
        [grad](const Point2<double>& p) {
          return loxo::Vec2<double>(-grad(p));
        });
    for (double u : {0.1, 1.0, 2.5}) {
      const auto p = pseudo_pt(0.4, u);
      CHECK((g2.g(p) - metric.g(p)).norm() < 1e-10);
      const auto a = c2.gamma(p);
      const auto b = conn.gamma(p);
      for (int rho = 0; rho < 2; ++rho) {
        CHECK((a[rho] - b[rho]).norm() < 1e-10);
      }
    }
  }

  SUBCASE("singular metric is reported") {
    loxo::MetricField<double> degenerate{
        Chart::Pseudosphere,
        [](const Point2<double>&) { return Mat2<double>::Zero(); }};
    auto [gt, ct] = loxo::conformal_transform<double>(
        degenerate, conn, [](const Point2<double>&) { return 1.0; },
        [](const Point2<double>&) { return loxo::Vec2<double>{1.0, 0.0}; });
    CHECK_THROWS_AS(ct.gamma(pseudo_pt(0.0, 1.0)), loxo::numeric_error);
  }
}

TEST_CASE("pseudosphere embedding") {
  const double radius = std::sqrt(2.0);

  SUBCASE("rim circle at u = 0") {
    for (double phi : testutil::linspace(0.0, 2 * pi, 9)) {
      const auto x = loxo::pseudosphere_embed(pseudo_pt(phi, 0.0), radius);
      CHECK(x[0] == doctest::Approx(radius * std::cos(phi)).epsilon(1e-15));
      CHECK(x[1] == doctest::Approx(radius * std::sin(phi)).epsilon(1e-15));
      CHECK(x[2] == 0.0);
    }
  }

  SUBCASE("induced metric matches the surface metric") {
    const auto embed = [radius](const Point2<double>& p) {
      return loxo::pseudosphere_embed(p, radius);
    };
    const auto p = pseudo_pt(1.0, 0.8);
    const Mat2<double> g = loxo::induced_metric(embed, p);
    CHECK(std::abs(g(0, 0) -
                   radius * radius * std::exp(-2.0 * 0.8 / radius)) < 1e-6);
    CHECK(std::abs(g(1, 1) - 1.0) < 1e-6);
    CHECK(std::abs(g(0, 1)) < 1e-6);
  }

  SUBCASE("height is strictly increasing in u") {
    double prev = -1.0;
    for (double u : testutil::linspace(0.0, 3.0 * radius, 40)) {
      const double z = loxo::pseudosphere_embed(pseudo_pt(0.0, u), radius)[2];
      CHECK(z > prev);
      prev = z;
    }
  }

  SUBCASE("domain") {
    CHECK_THROWS_AS(loxo::pseudosphere_embed(pseudo_pt(0.0, -0.5), radius),
                    std::domain_error);
  }
}
