#pragma once

// Scalar special functions: the Gudermannian family and the kappa-deformed
// exponential / logarithm family.
//
// gd(x)        = atan(sinh x), the Gudermannian; odd, maps R onto (-pi/2, pi/2)
// gd_inv(t)    = asinh(tan t), its inverse on (-pi/2, pi/2)
// exp_kappa    = [kx + sqrt(1 + k^2 x^2)]^(1/k), k-exponential
// ln_kappa     = (x^k - x^-k)/(2k) = sinh(k ln x)/k, its inverse
// u_kappa      = (x^k + x^-k)/2 = cosh(k ln x)
// ln_phi       = (1/k) gd(k ln x), the phi-logarithm with phi(s) = s u_kappa(s)
//
// kappa = 0 selects the analytic limit (exp, ln, 1, ln) in every case.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "loxo/quadrature.hpp"

namespace loxo {

namespace detail {

template <typename Scalar>
void require_finite(Scalar x, const char* who) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(who) + ": argument must be finite");
  }
}

template <typename Scalar>
void require_positive(Scalar x, const char* who) {
  if (!(x > Scalar(0)) || !std::isfinite(x)) {
    throw std::domain_error(std::string(who) + ": argument must be positive");
  }
}

}  // namespace detail

// Half-width of the excluded band around |theta| = pi/2 where the inverse
// Gudermannian (and the Mercator ordinate) blow up.
inline constexpr double kPoleGuard = 1e-12;

template <typename Scalar>
Scalar gd(Scalar x) {
  static_assert(std::is_floating_point_v<Scalar>);
  detail::require_finite(x, "gd");
  return std::atan(std::sinh(x));
}

template <typename Scalar>
Scalar gd_derivative(Scalar x) {
  detail::require_finite(x, "gd_derivative");
  return Scalar(1) / std::cosh(x);
}

template <typename Scalar>
Scalar gd_inv(Scalar theta) {
  static_assert(std::is_floating_point_v<Scalar>);
  detail::require_finite(theta, "gd_inv");
  constexpr Scalar limit =
      std::numbers::pi_v<Scalar> / 2 - Scalar(kPoleGuard);
  if (!(std::abs(theta) < limit)) {
    throw std::domain_error("gd_inv: |theta| too close to pi/2 (pole)");
  }
  return std::asinh(std::tan(theta));
}

template <typename Scalar>
Scalar gd_inv_derivative(Scalar theta) {
  detail::require_finite(theta, "gd_inv_derivative");
  constexpr Scalar limit =
      std::numbers::pi_v<Scalar> / 2 - Scalar(kPoleGuard);
  if (!(std::abs(theta) < limit)) {
    throw std::domain_error(
        "gd_inv_derivative: |theta| too close to pi/2 (pole)");
  }
  return Scalar(1) / std::cos(theta);
}

// Deformation parameter of the kappa family.  kappa = 0 is admitted and
// selects the undeformed limit functions.
template <typename Scalar>
class Kappa {
 public:
  explicit Kappa(Scalar k) : k_(k) {
    if (!std::isfinite(k) || k < Scalar(0)) {
      throw std::domain_error("Kappa: requires kappa >= 0");
    }
  }

  Scalar value() const noexcept { return k_; }
  bool zero() const noexcept { return k_ == Scalar(0); }

 private:
  Scalar k_;
};

template <typename Scalar>
Scalar exp_kappa(Scalar x, Kappa<Scalar> kappa) {
  detail::require_finite(x, "exp_kappa");
  if (kappa.zero()) return std::exp(x);
  const Scalar k = kappa.value();
  // [kx + sqrt(1 + k^2 x^2)]^(1/k) evaluated as exp(asinh(kx)/k), which is
  // stable for small k.
  return std::exp(std::asinh(k * x) / k);
}

template <typename Scalar>
Scalar ln_kappa(Scalar x, Kappa<Scalar> kappa) {
  detail::require_positive(x, "ln_kappa");
  if (kappa.zero()) return std::log(x);
  const Scalar k = kappa.value();
  return std::sinh(k * std::log(x)) / k;
}

template <typename Scalar>
Scalar u_kappa(Scalar x, Kappa<Scalar> kappa) {
  detail::require_positive(x, "u_kappa");
  if (kappa.zero()) return Scalar(1);
  return std::cosh(kappa.value() * std::log(x));
}

// phi-logarithm for phi(s) = s u_kappa(s); closed form.
template <typename Scalar>
Scalar ln_phi(Scalar x, Kappa<Scalar> kappa) {
  detail::require_positive(x, "ln_phi");
  if (kappa.zero()) return std::log(x);
  const Scalar k = kappa.value();
  return gd(k * std::log(x)) / k;
}

// phi-logarithm evaluated from its defining integral of 1/(s u_kappa(s));
// agrees with ln_phi to the quadrature tolerance.
template <typename Scalar>
Scalar ln_phi_quadrature(Scalar x, Kappa<Scalar> kappa,
                         QuadratureOptions opt = {}) {
  detail::require_positive(x, "ln_phi_quadrature");
  return integrate([kappa](Scalar s) { return 1 / (s * u_kappa(s, kappa)); },
                   Scalar(1), x, opt);
}

// Mercator ordinate as a function of chi = R tan(theta): y = R asinh(chi/R).
// With kappa = 1/R this is ln(exp_kappa(chi)); it tends to chi as R -> inf.
template <typename Scalar>
Scalar deformed_mercator_y(Scalar chi, Scalar radius) {
  detail::require_finite(chi, "deformed_mercator_y");
  if (!(radius > Scalar(0)) || !std::isfinite(radius)) {
    throw std::domain_error("deformed_mercator_y: requires R > 0");
  }
  return radius * std::asinh(chi / radius);
}

}  // namespace loxo
