#include "lst/special.hpp"

#include "lst/core.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lst::special {

double integrate(const std::function<double(double)>& f, double a, double b, double tol, double abs_floor) {
  if (a == b) return 0.0;
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  if (abs_floor > 0.0) {
    double err = 0.0;
    double l1 = 0.0;
    const double v = gk::integrate(f, a, b, 0, tol, &err, &l1);
    if (err <= abs_floor) return v;
    if (l1 > 0.0) tol = std::max(tol, abs_floor / l1);
  }
  return gk::integrate(f, a, b, 15, tol);
}

double hyp2f1_family(double eta, double z) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  if (z > 0.0) throw DomainError("argument must be non-positive");
  if (eta == 1.0) return 1.0;
  // y = t^2 removes the y^{3/2} endpoint singularity
  auto f = [eta, z](double t) {
    const double t2 = t * t;
    return 2.0 * t2 * t2 * std::pow(1.0 - z * t2, eta - 1.0);
  };
  return 2.5 * integrate(f, 0.0, 1.0);
}

double integral_I_w(double w, double eta) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  if (w < 0.0 || w > 1.0) throw DomainError("w must lie in [0,1]");
  if (w == 0.0) return 2.0 / (2.0 * eta + 3.0);
  if (w == 1.0) return 0.0;
  return 0.4 * std::pow(1.0 - w, 2.5) * std::pow(w, eta - 1.0) * hyp2f1_family(eta, (w - 1.0) / w);
}

double integral_I_w_quadrature(double w, double eta) { return integral_I_ab_quadrature(w, 1.0, eta); }

double integral_I_half(double eta) {
  return 3.0 * std::sqrt(std::numbers::pi) * gamma(eta) / (std::pow(2.0, eta + 3.5) * gamma(eta + 2.5));
}

double integral_I_ab_quadrature(double a, double b, double eta) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  if (a < 0.0 || !(b > a)) {
    if (a >= 0.0 && a == b) return 0.0;
    throw DomainError("bounds must satisfy 0 <= a < b");
  }
  // x = a + t^2
  auto f = [a, eta](double t) {
    const double t2 = t * t;
    return 2.0 * t2 * t2 * std::pow(a + t2, eta - 1.0);
  };
  return integrate(f, 0.0, std::sqrt(b - a));
}

std::optional<double> integral_I_ab_closed(double a, double b, double eta) {
  if (a < 0.0 || b < a) throw DomainError("bounds must satisfy 0 <= a <= b");
  const double d = b - a;
  const double d52 = d * d * std::sqrt(d);
  if (eta == 1.0) return 0.4 * d52;
  if (eta == 2.0) return 2.0 / 35.0 * d52 * (2.0 * a + 5.0 * b);
  if (eta == 3.0) return 2.0 / 315.0 * d52 * (8.0 * a * a + 20.0 * a * b + 35.0 * b * b);
  if (eta == 0.5) {
    const double lead = 0.25 * std::sqrt(d) * (2.0 * b - 5.0 * a) * std::sqrt(b);
    if (a == 0.0) return lead;
    if (d < 0.1 * a) {
      // a^2 * sum_k C(-1/2,k) s^(k+5/2)/(k+5/2), s = d/a
      const double s = d / a;
      double term = s * s * std::sqrt(s);
      double c = 1.0;
      double sum = 0.0;
      for (int k = 0; k < 60 && std::abs(c * term) > 1e-18 * std::abs(sum); ++k) {
        sum += c * term / (k + 2.5);
        c *= -(k + 0.5) / (k + 1);
        term *= s;
      }
      return a * a * sum;
    }
    return lead + 0.75 * a * a * std::acosh(std::sqrt(b / a));
  }
  return std::nullopt;
}

double integral_I_ab(double a, double b, double eta) {
  if (auto c = integral_I_ab_closed(a, b, eta)) return *c;
  return integral_I_ab_quadrature(a, b, eta);
}

double gamma(double x) { return boost::math::tgamma(x); }

double beta(double a, double b) { return boost::math::beta(a, b); }

}  // namespace lst::special
