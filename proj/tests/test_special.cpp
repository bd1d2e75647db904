#include "lst/core.hpp"
#include "lst/special.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using doctest::Approx;
namespace sp = lst::special;

namespace {

// binomial expansion of x^{n-1} = ((x - w) + w)^{n-1}
double poly_oracle(double w, int n) {
  double s = 0.0;
  double c = 1.0;
  for (int k = 0; k < n; ++k) {
    s += c * std::pow(w, n - 1 - k) * std::pow(1.0 - w, k + 2.5) / (k + 2.5);
    c = c * (n - 1 - k) / (k + 1);
  }
  return s;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("integer exponents reduce to polynomials") {
  for (int n = 1; n <= 4; ++n)
    for (double w : {0.0, 0.01, 0.1, 0.25, 0.5, 0.7, 0.9, 0.99}) {
      CHECK(rel_close(sp::integral_I_w(w, n), poly_oracle(w, n), 1e-12));
    }
  CHECK(sp::integral_I_w(0.3, 1) == Approx(0.4 * std::pow(0.7, 2.5)).epsilon(1e-14));
}

TEST_CASE("endpoints and the half point") {
  for (double eta : {0.5, 1.0, 1.7, 2.0, 3.0, 4.5}) {
    CHECK(sp::integral_I_w(0.0, eta) == Approx(1.0 / (eta + 1.5)).epsilon(1e-14));
    CHECK(sp::integral_I_w(1.0, eta) == 0.0);
    const double simpson = oracle::simpson([eta](double x) { return std::pow(x - 0.5, 1.5) * std::pow(x, eta - 1); }, 0.5,
                                           1.0, 200000);
    CHECK(std::abs(sp::integral_I_w(0.5, eta) - simpson) < 1e-10);
    // the Gamma form integrates (x - 1/2)^{3/2} (1 - x)^{eta - 1}
    const double mirrored = oracle::simpson(
        [eta](double x) { return std::pow(x - 0.5, 1.5) * std::pow(1.0 - x, eta - 1); }, 0.5, 1.0, 200000);
    if (eta >= 1.0) CHECK(std::abs(sp::integral_I_half(eta) - mirrored) < 1e-10);
  }
  CHECK(std::abs(sp::integral_I_half(1.0) - sp::integral_I_w(0.5, 1.0)) < 1e-14);
  CHECK(std::abs(sp::integral_I_half(2.0) - sp::integral_I_w(0.5, 2.0)) > 0.05);
  CHECK(sp::gamma(5.0) == Approx(24.0));
  CHECK(sp::beta(2.0, 3.0) == Approx(1.0 / 12.0));
}

TEST_CASE("hypergeometric form agrees with quadrature") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double w = u(rng);
    const double eta = 0.2 + 4.0 * u(rng);
    CHECK(std::abs(sp::integral_I_w(w, eta) - sp::integral_I_w_quadrature(w, eta)) < 1e-12);
  }
  CHECK(sp::hyp2f1_family(1.0, -0.5) == Approx(1.0));
}

TEST_CASE("continuity near the special points") {
  for (double eta : {0.5, 1.0, 2.5}) {
    CHECK(std::abs(sp::integral_I_w(1e-9, eta) - sp::integral_I_w(0.0, eta)) < 1e-8);
    CHECK(sp::integral_I_w(1.0 - 1e-9, eta) < 1e-20);
    CHECK(sp::integral_I_w(1.0 - 1e-9, eta) >= 0.0);
  }
}

TEST_CASE("two-sided integral closed forms") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double eta : {0.5, 1.0, 2.0, 3.0}) {
    for (int k = 0; k < 100; ++k) {
      const double a = 0.001 + 0.9 * u(rng);
      const double b = a + (1.0 - a) * u(rng);
      const auto closed = sp::integral_I_ab_closed(a, b, eta);
      REQUIRE(closed.has_value());
      CHECK(std::abs(*closed - sp::integral_I_ab_quadrature(a, b, eta)) < 1e-8);
    }
  }
  CHECK(std::abs(*sp::integral_I_ab_closed(0.8684, 0.8698, 0.5) / 3.146083766079720e-08 - 1.0) < 1e-12);
  CHECK(std::abs(*sp::integral_I_ab_closed(0.5, 0.5 + 1e-6, 0.5) / sp::integral_I_ab_quadrature(0.5, 0.5 + 1e-6, 0.5) - 1.0) < 1e-10);
  CHECK_FALSE(sp::integral_I_ab_closed(0.2, 0.6, 1.3).has_value());
  CHECK(sp::integral_I_ab(0.2, 0.6, 1.3) == Approx(sp::integral_I_ab_quadrature(0.2, 0.6, 1.3)));
  CHECK(sp::integral_I_ab(0.3, 1.0, 2.0) == Approx(sp::integral_I_w(0.3, 2.0)).epsilon(1e-12));
  CHECK(sp::integral_I_ab(0.4, 0.4, 2.0) == 0.0);
}

TEST_CASE("two-sided integral is monotone in its limits") {
  for (double eta : {0.5, 1.0, 2.0, 3.0}) {
    double prev = -1.0;
    for (double b = 0.2; b <= 1.0 + 1e-12; b += 0.05) {
      const double v = sp::integral_I_ab(0.2, b, eta);
      CHECK(v >= prev);
      prev = v;
    }
    prev = 1e9;
    for (double a = 0.0; a <= 0.8; a += 0.05) {
      const double v = sp::integral_I_ab(a, 0.8, eta);
      CHECK(v <= prev);
      prev = v;
    }
  }
}
