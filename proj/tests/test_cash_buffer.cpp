#include "lst/cash_buffer.hpp"
#include "lst/core.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using doctest::Approx;
using namespace lst::buffer;

namespace {

CostParams defaults(double eta = 1.0) {
  CostParams p;
  p.spread = 20e-4;
  p.cash_cost = 1e-4;
  p.impact = 0.4;
  p.sigma = CostParams::daily_vol(0.20);
  p.eta = eta;
  return p;
}

CostParams stressed(double xplus, double eta) {
  CostParams p;
  p.spread = 50e-4;
  p.cash_cost = 0.0;
  p.impact = 0.4;
  p.sigma = CostParams::daily_vol(0.80);
  p.trading_limit = xplus;
  p.eta = eta;
  return p;
}

// piecewise Simpson of LG(R) eta R^{eta-1} with breaks at every kink
double lg_oracle(const CostParams& p, double w) {
  std::vector<double> br{0.0, 1.0, w};
  if (p.trading_limit < 1.0)
    for (int k = 1; k * p.trading_limit < 1.0; ++k) {
      br.push_back(k * p.trading_limit);
      if (w + k * p.trading_limit < 1.0) br.push_back(w + k * p.trading_limit);
    }
  std::sort(br.begin(), br.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < br.size(); ++k) {
    if (br[k + 1] - br[k] < 1e-12) continue;
    // R = a + (b - a) t^4 smooths the density and the 3/2-power kinks at a
    const double a = br[k];
    const double d = br[k + 1] - br[k];
    const bool below = br[k + 1] <= w;
    auto lg = [&](double r) { return below ? tc_asset(p, r) - tc_cash(p, r) : tc_asset(p, r) - tc_asset(p, r - w); };
    total += oracle::simpson(
        [&](double t) {
          const double t3 = t * t * t;
          const double r = a + d * t3 * t;
          if (r <= 0.0) return 0.0;
          return lg(r) * p.eta * std::pow(r, p.eta - 1.0) * 4.0 * d * t3;
        },
        0.0, 1.0, 4000);
  }
  return total;
}

}  // namespace

TEST_CASE("portfolio analytics") {
  MarketParams m{0.06, 0.01, 0.20, 0.0, 0.0, 0.0};
  auto a = analytics(m, 0.0);
  CHECK(a.expected_return == 0.06);
  CHECK(a.te_vol == 0.0);
  CHECK(a.beta == 1.0);
  CHECK(a.volatility == Approx(0.20));
  a = analytics(m, 1.0);
  CHECK(a.volatility == 0.0);
  CHECK(a.expected_return == Approx(0.01));
  CHECK_FALSE(a.sharpe.has_value());
  for (double w : {0.05, 0.3, 0.9}) {
    a = analytics(m, w);
    REQUIRE(a.information.has_value());
    CHECK(*a.information == Approx(-(0.06 - 0.01) / 0.20).epsilon(1e-14));
    CHECK(a.te_mean == Approx(-w * 0.05));
    CHECK(a.te_vol == Approx(w * 0.20));
    CHECK(a.beta == Approx(1.0 - w));
  }
  MarketParams z{0.05, 0.05, 0.1, 0.1, 1.0, 0.0};
  CHECK_FALSE(analytics(z, 0.4).information.has_value());
  CHECK_THROWS_AS(analytics(m, 1.5), lst::DomainError);
  CHECK_THROWS_AS(analytics({0, 0, 0.1, 0.1, 2.0, 0}, 0.5), lst::DomainError);
}

TEST_CASE("asset transaction cost") {
  auto p = defaults();
  CHECK(tc_asset(p, 0.0) == 0.0);
  const double full = tc_asset(p, 1.0);
  CHECK(full > 0.0);
  CHECK(full <= 70e-4);
  p.trading_limit = 0.10;
  const double b = 0.4 * p.sigma;
  const double by_hand = 0.25 * p.spread + 2 * b * std::pow(0.10, 1.5) + b * std::pow(0.05, 1.5);
  CHECK(tc_asset(p, 0.25) == Approx(by_hand).epsilon(1e-13));
  CHECK(tc_asset(p, 0.3) >= tc_asset(p, 0.29));
  CHECK(tc_cash(p, 0.3) == Approx(0.3e-4));
}

TEST_CASE("exact expected gain against a quadrature oracle") {
  for (double eta : {0.5, 1.0, 2.0, 3.0}) {
    const auto p = defaults(eta);
    for (double w : {0.0, 0.1, 0.4, 0.8, 0.97, 1.0}) {
      CHECK(expected_lg_exact(p, w) == Approx(lg_oracle(p, w)).epsilon(1e-9).scale(1e-6));
      CHECK(expected_lg_exact(p, w) == Approx(expected_lg_quadrature(p, w)).epsilon(1e-9));
    }
  }
  for (double x : {0.10, 0.16, 0.35}) {
    const auto p = stressed(x, 1.0);
    for (double w : {0.05, 0.1, 0.23, 0.6})
      CHECK(expected_lg_exact(p, w) == Approx(lg_oracle(p, w)).epsilon(1e-9).scale(1e-6));
  }
  CHECK(expected_lg_exact(defaults(), 0.0) == 0.0);
  CHECK(expected_lg_approx(defaults(), 0.0) == 0.0);
  const auto law = RedemptionLaw::power(2.0);
  CHECK(expected_lg_quadrature(defaults(2.0), 0.3, law) == Approx(expected_lg_exact(defaults(2.0), 0.3)).epsilon(1e-9));
}

TEST_CASE("published closed form") {
  const auto p = defaults(1.0);
  for (double w : {0.0, 0.3, 0.9}) CHECK(std::isfinite(expected_lg_published(p, w)));
  // coincides with the exact form at eta = 1 up to the spread term
  CHECK_THROWS_AS(expected_lg_published(stressed(0.1, 1.0), 0.2), lst::DomainError);
}

TEST_CASE("decomposition") {
  for (double x : {1.0, 0.1}) {
    auto p = x < 1.0 ? stressed(x, 1.0) : defaults(2.0);
    for (double w : {0.0, 0.2, 0.5, 1.0}) {
      const auto c = expected_lg_components(p, w);
      CHECK(c.cash + c.asset == Approx(expected_lg_exact(p, w)).epsilon(1e-9).scale(1e-9));
    }
    CHECK(expected_lg_components(p, 0.0).asset == Approx(0.0).scale(1e-15));
    CHECK(expected_lg_components(p, 1.0).asset == 0.0);
  }
}

TEST_CASE("derivatives") {
  for (double eta : {0.5, 1.0, 3.0}) {
    const auto p = defaults(eta);
    for (double w : {0.05, 0.3, 0.7, 0.95}) {
      CHECK(d_expected_lg(p, w, LgMethod::approximate) ==
            Approx(d_expected_lg_numeric(p, w, LgMethod::approximate)).epsilon(1e-6));
      CHECK(d_expected_lg(p, w, LgMethod::approximate) >= 0.0);
      CHECK(d_expected_lg(p, w, LgMethod::exact) ==
            Approx(d_expected_lg_numeric(p, w, LgMethod::exact)).epsilon(1e-5));
    }
    CHECK(d_expected_lg(p, 0.0, LgMethod::exact) > 0.0);
    CHECK(d_expected_lg(p, 0.5, LgMethod::exact) > 0.0);
    CHECK(d_expected_lg(p, 1.0 - 1e-3, LgMethod::exact) < 0.0);
  }
  const auto lim = stressed(0.1, 1.0);
  CHECK(d_expected_lg(lim, 0.25, LgMethod::approximate) ==
        Approx(d_expected_lg_numeric(lim, 0.25, LgMethod::approximate)).epsilon(1e-6));
}

TEST_CASE("Monte-Carlo expected gain") {
  for (auto p : {defaults(1.0), stressed(0.1, 2.0)}) {
    const double w = 0.3;
    const auto mc = monte_carlo_lg(p, w, 1000000, 42);
    CHECK(std::abs(mc.mean - expected_lg_exact(p, w)) < 3.0 * mc.std_error);
    CHECK(mc.std_error > 0.0);
  }
  CHECK_THROWS_AS(monte_carlo_lg(defaults(), 0.3, 1, 1), lst::DomainError);
}

TEST_CASE("approximation error") {
  for (double x : {0.10, 0.20, 0.30}) {
    auto p = defaults();
    p.trading_limit = x;
    for (double w = 0.0; w <= 1.0 - x; w += 0.013)
      for (int k = 1; w + k * x <= 1.0 - x; ++k)
        CHECK(std::abs(approximation_error(p, w + k * x) - approximation_error(p, w)) < 1e-12);
  }
  auto p = defaults();
  p.trading_limit = 0.16;
  CHECK(max_approximation_error(p) * 1e4 <= 1.0);
  p.trading_limit = 0.17;
  CHECK(max_approximation_error(p) * 1e4 > 1.0);
  for (double x : {0.05, 0.3, 0.7}) {
    p.trading_limit = x;
    double grid = 0.0;
    for (int i = 0; i <= 20000; ++i) grid = std::max(grid, approximation_error(p, i / 20000.0));
    CHECK(max_approximation_error(p) >= grid - 1e-15);
    CHECK(max_approximation_error(p) == Approx(grid).epsilon(1e-6));
  }
}

TEST_CASE("optimal buffer") {
  MarketParams m;
  const double published[] = {97.40, 96.67, 93.55};
  const double etas[] = {0.5, 1.0, 2.0};
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(100 * optimal_cash_buffer(m, defaults(etas[k]), LgMethod::published).w - published[k]) < 0.1);
  CHECK(std::abs(100 * optimal_cash_buffer(m, defaults(1.0), LgMethod::exact).w - 96.67) < 0.1);

  MarketParams neg;
  neg.mu_asset = -0.01;
  CHECK(optimal_cash_buffer(neg, defaults(1.0)).w == Approx(1.0));

  MarketParams big;
  big.mu_asset = 0.025;
  CHECK(optimal_cash_buffer(big, stressed(0.10, 1.0)).w == 0.0);
  MarketParams huge;
  huge.mu_asset = 0.5;
  CHECK(optimal_cash_buffer(huge, defaults(1.0)).w == 0.0);
  CHECK(net_buffer_cost(m, defaults(), 0.0) == 0.0);

  MarketParams one;
  one.mu_asset = 0.01;
  CHECK(std::abs(optimal_cash_buffer(one, stressed(0.10, 1.0), LgMethod::approximate).w - 0.10) < 1e-3);
  CHECK(std::abs(optimal_cash_buffer(one, stressed(0.10, 1.0), LgMethod::exact).w - 0.10) < 0.02);
  CHECK(std::abs(optimal_cash_buffer(one, stressed(1.0, 0.23 / 0.77), LgMethod::exact).w - 0.10) < 0.02);
}

TEST_CASE("break-even premium") {
  MarketParams m{0.0, 0.0, 0.2, 0.05, 0.3, 0.0};
  const auto p = defaults(1.0);
  const double r0 = break_even_premium(m, p, 0.0);
  m.lambda = 5.0;
  CHECK(break_even_premium(m, p, 0.0) == r0);
  m.lambda = 0.0;
  for (double w : {0.1, 0.5, 0.9})
    CHECK(break_even_premium(m, p, w, LgMethod::approximate) ==
          Approx(tc_asset_derivative(p, w) * (1.0 - w)).epsilon(1e-14));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    MarketParams mk{0.0, 0.0, 0.1 + 0.2 * u(rng), 0.02 * u(rng), u(rng), 1.0 + 4.0 * u(rng)};
    auto pk = defaults(0.5 + 2.0 * u(rng));
    const double w0 = 0.02 + 0.3 * u(rng);
    mk.mu_asset = break_even_premium(mk, pk, w0, LgMethod::approximate);
    const auto opt = optimal_cash_buffer(mk, pk, LgMethod::approximate);
    CHECK(std::abs(opt.w - w0) < 1e-3);
  }
}
