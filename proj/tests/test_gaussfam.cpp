#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loxo/autoparallel.hpp"
#include "loxo/gaussfam.hpp"
#include "loxo/quadrature.hpp"
#include "testutil.hpp"

using loxo::Chart;
using loxo::GaussParams;
using loxo::Mat2;
using loxo::NormalizationBox;
using loxo::Point2;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

// Fisher information by quadrature of the expected score outer product,
// independent of the closed form.
Mat2<double> fisher_information_by_quadrature(const GaussParams<double>& gp) {
  const auto score_mu = [&](double x) {
    return (x - gp.mu) / (gp.sigma * gp.sigma);
  };
  const auto score_sigma = [&](double x) {
    const double d = x - gp.mu;
    return -1.0 / gp.sigma + d * d / (gp.sigma * gp.sigma * gp.sigma);
  };
  loxo::QuadratureOptions opt;
  opt.abs_tol = 1e-10;
  const double lo = gp.mu - 12.0 * gp.sigma;
  const double hi = gp.mu + 12.0 * gp.sigma;
  Mat2<double> info;
  info(0, 0) = loxo::integrate(
      [&](double x) { return loxo::gauss_pdf(x, gp) * score_mu(x) * score_mu(x); },
      lo, hi, opt);
  info(0, 1) = loxo::integrate(
      [&](double x) {
        return loxo::gauss_pdf(x, gp) * score_mu(x) * score_sigma(x);
      },
      lo, hi, opt);
  info(1, 0) = info(0, 1);
  info(1, 1) = loxo::integrate(
      [&](double x) {
        return loxo::gauss_pdf(x, gp) * score_sigma(x) * score_sigma(x);
      },
      lo, hi, opt);
  return info;
}

// Finite-difference Jacobian of the half-plane -> pseudosphere map.
Mat2<double> to_pseudosphere_jacobian(const Point2<double>& pn) {
  Mat2<double> jac;
  const double h = 1e-5;
  for (int mu = 0; mu < 2; ++mu) {
    Point2<double> plus = pn;
    plus.q[mu] += h;
    Point2<double> minus = pn;
    minus.q[mu] -= h;
    jac.col(mu) =
        (loxo::to_pseudosphere(plus).q - loxo::to_pseudosphere(minus).q) /
        (2 * h);
  }
  return jac;
}

}  // namespace

TEST_CASE("gauss_pdf") {
  CHECK_THROWS_AS(GaussParams<double>(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(GaussParams<double>(0.0, -1.0), std::domain_error);

  const GaussParams<double> gp(2.0, 0.7);
  CHECK(loxo::gauss_pdf(2.0, gp) ==
        doctest::Approx(0.56991754343061811).epsilon(1e-15));
  CHECK(std::abs(loxo::gauss_pdf(2.0 + 1.3, gp) -
                 loxo::gauss_pdf(2.0 - 1.3, gp)) < 1e-15);

  loxo::QuadratureOptions opt;
  opt.abs_tol = 1e-12;
  const double mass = loxo::integrate(
      [&](double x) { return loxo::gauss_pdf(x, gp); }, 2.0 - 7.0,
      2.0 + 7.0, opt);
  CHECK(std::abs(mass - 1.0) < 1e-10);
}

TEST_CASE("Fisher-Rao metric") {
  const auto g1 = loxo::fisher_rao_metric(GaussParams<double>(0.0, 1.0));
  CHECK(g1(0, 0) == 1.0);
  CHECK(g1(1, 1) == 2.0);
  CHECK(g1(0, 1) == 0.0);

  // Line element (d mu^2 + 2 d sigma^2)/sigma^2 at sigma = 2, steps 0.1.
  const auto g2 = loxo::fisher_rao_metric(GaussParams<double>(5.0, 2.0));
  const loxo::Vec2<double> step{0.1, 0.1};
  CHECK(step.dot(g2 * step) == doctest::Approx(0.0075).epsilon(1e-15));

  SUBCASE("matches the quadrature Fisher information") {
    const GaussParams<double> pts[] = {{0.0, 1.0},
                                       {1.0, 0.5},
                                       {-2.0, 2.0},
                                       {3.0, 5.0},
                                       {0.3, 1.7}};
    for (const auto& gp : pts) {
      const Mat2<double> numeric = fisher_information_by_quadrature(gp);
      const Mat2<double> closed = loxo::fisher_rao_metric(gp);
      CHECK((numeric - closed).lpNorm<Eigen::Infinity>() < 1e-3);
    }
  }
}

TEST_CASE("half-plane curvature of the Fisher-Rao metric") {
  CHECK(std::abs(loxo::poincare_curvature(GaussParams<double>(0.0, 1.0)) +
                 0.5) < 1e-4);
  CHECK(std::abs(loxo::poincare_curvature(GaussParams<double>(3.0, 5.0)) +
                 0.5) < 1e-4);

  SUBCASE("constant across a grid") {
    for (double mu : testutil::linspace(-2.0, 2.0, 5)) {
      for (double sigma : testutil::linspace(1.0, 3.0, 5)) {
        CHECK(std::abs(loxo::poincare_curvature(
                  GaussParams<double>(mu, sigma)) + 0.5) < 1e-4);
      }
    }
  }

  SUBCASE("scaling control: 2 g has curvature -1/4") {
    CHECK(std::abs(loxo::poincare_curvature(GaussParams<double>(0.0, 1.0),
                                            1e-4, 2.0) +
                   0.25) < 1e-4);
  }

  SUBCASE("stencil crossing sigma <= 0 is a domain error") {
    CHECK_THROWS_AS(
        loxo::poincare_curvature(GaussParams<double>(0.0, 5e-5), 1e-4),
        std::domain_error);
  }
}

TEST_CASE("normalization") {
  const NormalizationBox<double> box{0.5, 2.0};

  const auto corner = loxo::normalize(GaussParams<double>(0.0, 0.5), box);
  CHECK(corner.chart == Chart::GaussNormalized);
  CHECK(corner.a() == 0.0);
  CHECK(corner.b() == 1.0);

  CHECK(loxo::normalize(GaussParams<double>(2.0, 1.0), box).a() ==
        doctest::Approx(pi).epsilon(1e-15));
  CHECK(loxo::normalize(GaussParams<double>(-2.0, 1.0), box).a() ==
        doctest::Approx(-pi).epsilon(1e-15));

  CHECK_THROWS_WITH_AS(loxo::normalize(GaussParams<double>(0.0, 0.4), box),
                       "normalize: sigma below sigma_min", std::domain_error);
  CHECK_THROWS_WITH_AS(loxo::normalize(GaussParams<double>(2.5, 1.0), box),
                       "normalize: |mu| above mu_max_abs", std::domain_error);

  SUBCASE("round trip is exact to 1e-14") {
    for (double mu : testutil::linspace(-1.9, 1.9, 7)) {
      for (double sigma : testutil::linspace(0.5, 4.0, 7)) {
        const GaussParams<double> gp(mu, sigma);
        const auto back = loxo::denormalize(loxo::normalize(gp, box), box);
        CHECK(std::abs(back.mu - gp.mu) < 1e-14);
        CHECK(std::abs(back.sigma - gp.sigma) < 1e-14);
      }
    }
  }
}

TEST_CASE("pseudosphere correspondence") {
  const auto base =
      loxo::to_pseudosphere(Point2<double>{Chart::GaussNormalized, {0.0, 1.0}});
  CHECK(base.chart == Chart::Pseudosphere);
  CHECK(base.a() == 0.0);
  CHECK(base.b() == 0.0);

  // Hand-inverted: (sqrt(2) * 0.5, e^{1/sqrt(2)}) -> (0.5, 1).
  const auto p = loxo::to_pseudosphere(Point2<double>{
      Chart::GaussNormalized, {sqrt2 * 0.5, 2.0281149816474725}});
  CHECK(p.a() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.b() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(loxo::to_pseudosphere(
                      Point2<double>{Chart::GaussNormalized, {0.0, 0.9}}),
                  std::domain_error);

  SUBCASE("from_pseudosphere inverts it") {
    const Point2<double> pn{Chart::GaussNormalized, {0.7, 2.3}};
    const auto back = loxo::from_pseudosphere(loxo::to_pseudosphere(pn));
    CHECK(std::abs(back.a() - pn.a()) < 1e-14);
    CHECK(std::abs(back.b() - pn.b()) < 1e-14);
  }

  SUBCASE("isometry: pullback of the pseudosphere metric") {
    const auto poincare = loxo::poincare_metric_field<double>();
    for (double mu_t : testutil::linspace(-1.0, 1.0, 5)) {
      for (double sigma_t : testutil::linspace(1.2, 3.0, 5)) {
        const Point2<double> pn{Chart::GaussNormalized, {mu_t, sigma_t}};
        const Mat2<double> jac = to_pseudosphere_jacobian(pn);
        const auto ps = loxo::to_pseudosphere(pn);
        Mat2<double> g_ps = Mat2<double>::Zero();
        g_ps(0, 0) = 2.0 * std::exp(-2.0 * ps.b() / sqrt2);
        g_ps(1, 1) = 1.0;
        const Mat2<double> pullback = jac.transpose() * g_ps * jac;
        CHECK((pullback - poincare.g(pn)).lpNorm<Eigen::Infinity>() < 1e-8);
      }
    }
  }
}

TEST_CASE("flattened plane") {
  const auto base =
      loxo::to_flattened(Point2<double>{Chart::GaussNormalized, {0.0, 1.0}});
  CHECK(base.chart == Chart::FlattenedPlane);
  CHECK(base.a() == 0.0);
  CHECK(base.b() == doctest::Approx(sqrt2).epsilon(1e-16));

  CHECK_THROWS_AS(loxo::to_flattened(
                      Point2<double>{Chart::GaussNormalized, {0.0, 0.5}}),
                  std::domain_error);

  SUBCASE("affine: midpoints map to midpoints exactly") {
    const Point2<double> p1{Chart::GaussNormalized, {-0.4, 1.5}};
    const Point2<double> p2{Chart::GaussNormalized, {0.8, 2.5}};
    const auto f1 = loxo::to_flattened(p1);
    const auto f2 = loxo::to_flattened(p2);
    const auto fm = loxo::to_flattened(Point2<double>{
        Chart::GaussNormalized,
        {(p1.a() + p2.a()) / 2, (p1.b() + p2.b()) / 2}});
    CHECK(fm.a() == (f1.a() + f2.a()) / 2);
    CHECK(fm.b() == (f1.b() + f2.b()) / 2);
  }

  SUBCASE("agrees with the pseudosphere flattening route") {
    for (double mu_t : testutil::linspace(-2.0, 2.0, 7)) {
      for (double sigma_t : testutil::linspace(1.0, 4.0, 7)) {
        const Point2<double> pn{Chart::GaussNormalized, {mu_t, sigma_t}};
        const auto direct = loxo::to_flattened(pn);
        const auto via_ps = loxo::project_point(
            loxo::to_pseudosphere(pn), Chart::FlattenedPlane, sqrt2);
        CHECK(std::abs(direct.a() - via_ps.a()) < 1e-13);
        CHECK(std::abs(direct.b() - via_ps.b()) < 1e-13);
      }
    }
  }

  SUBCASE("a pseudosphere loxodrome flattens to a straight line") {
    const loxo::CourseAngle<double> course(pi / 4);
    const auto curve = loxo::loxodrome_pseudosphere_curve(
        course, -course.tan(), sqrt2, testutil::linspace(0.0, 1.0, 80));
    std::vector<loxo::Vec2<double>> img;
    for (const auto& ps : curve.points) {
      img.push_back(loxo::to_flattened(loxo::from_pseudosphere(ps)).q);
    }
    const auto fit = loxo::fit_line(img);
    CHECK(fit.max_abs_offset < 1e-10);
  }
}

TEST_CASE("Gaussian family along a loxodrome") {
  const loxo::CourseAngle<double> course(pi / 4);
  const NormalizationBox<double> box;  // sigma_min = 1, mu_max = pi

  const auto trace = loxo::gauss_family_along_loxodrome(
      course, box, testutil::linspace(0.0, 1.0, 50));
  REQUIRE(trace.params.size() == 50);
  CHECK_FALSE(trace.exited_region);
  CHECK(trace.params.front().mu == 0.0);
  CHECK(trace.params.front().sigma == box.sigma_min);

  SUBCASE("sigma grows monotonically") {
    for (std::size_t k = 1; k < trace.params.size(); ++k) {
      CHECK(trace.params[k].sigma > trace.params[k - 1].sigma);
    }
  }

  SUBCASE("flattened image is a straight line") {
    std::vector<loxo::Vec2<double>> img;
    for (const auto& gp : trace.params) {
      img.push_back(loxo::to_flattened(loxo::normalize(gp, box)).q);
    }
    CHECK(loxo::fit_line(img).max_abs_offset < 1e-10);
  }

  SUBCASE("sigma_min rescales the sigma column exactly") {
    NormalizationBox<double> wide;
    wide.sigma_min = 2.0;
    const auto scaled = loxo::gauss_family_along_loxodrome(
        course, wide, testutil::linspace(0.0, 1.0, 50));
    REQUIRE(scaled.params.size() == trace.params.size());
    for (std::size_t k = 0; k < scaled.params.size(); ++k) {
      CHECK(scaled.params[k].sigma == 2.0 * trace.params[k].sigma);
      CHECK(scaled.params[k].mu == trace.params[k].mu);
    }
  }

  SUBCASE("leaving the admitted region truncates with a flag") {
    const loxo::CourseAngle<double> steep(1.5);  // tan ~ 14
    const auto cut = loxo::gauss_family_along_loxodrome(
        steep, box, testutil::linspace(0.0, 3.0, 100));
    CHECK(cut.exited_region);
    CHECK(cut.params.size() < 100);
    for (const auto& gp : cut.params) {
      CHECK(std::abs(gp.mu) <= box.mu_max_abs + 1e-12);
    }
  }
}
