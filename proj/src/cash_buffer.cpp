#include "lst/cash_buffer.hpp"

#include "lst/core.hpp"
#include "lst/special.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace lst::buffer {

namespace {

constexpr double kAbsFloor = 1e-15;

bool unlimited(const CostParams& p) { return p.trading_limit >= 1.0; }

double pow15(double x) { return x * std::sqrt(x); }

void check_w(double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("cash ratio must lie in [0,1]");
}

struct Split {
  int kappa;
  double residual;
};

Split split(const CostParams& p, double x) {
  if (unlimited(p)) return {0, x};
  const int k = static_cast<int>(std::floor(x / p.trading_limit));
  return {k, std::max(0.0, x - k * p.trading_limit)};
}

std::vector<double> knots(const CostParams& p, double lo, double hi, double w) {
  std::vector<double> pts{lo, hi};
  if (w > lo && w < hi) pts.push_back(w);
  if (!unlimited(p)) {
    for (int j = 1; j * p.trading_limit < hi; ++j) {
      const double k = j * p.trading_limit;
      if (k > lo) pts.push_back(k);
      if (w + k > lo && w + k < hi) pts.push_back(w + k);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](double a, double b) { return b - a < 1e-12; }), pts.end());
  pts.back() = hi;
  return pts;
}

// integral of g(R) dF(R) over [lo, hi] for F(x) = x^eta, via u = R^eta
double integrate_power(const CostParams& p, double lo, double hi, double w, const std::function<double(double)>& g) {
  const auto pts = knots(p, lo, hi, w);
  const double inv = 1.0 / p.eta;
  auto h = [&](double u) { return g(std::pow(u, inv)); };
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    total += special::integrate(h, std::pow(pts[k], p.eta), std::pow(pts[k + 1], p.eta), 1e-10, kAbsFloor);
  return total;
}

}  // namespace

double MarketParams::te_variance() const {
  return sigma_cash * sigma_cash + sigma_asset * sigma_asset - 2.0 * rho * sigma_cash * sigma_asset;
}

double CostParams::daily_vol(double annual, double days_per_year) { return annual / std::sqrt(days_per_year); }

void validate(const MarketParams& m) {
  if (m.sigma_asset < 0.0 || m.sigma_cash < 0.0) throw DomainError("volatilities must be non-negative");
  if (m.rho < -1.0 || m.rho > 1.0) throw DomainError("correlation must lie in [-1,1]");
  if (m.lambda < 0.0) throw DomainError("tracking-error aversion must be non-negative");
}

void validate(const CostParams& p) {
  if (p.spread < 0.0 || p.cash_cost < 0.0 || p.impact < 0.0 || p.sigma < 0.0)
    throw DomainError("cost parameters must be non-negative");
  if (!(p.trading_limit > 0.0)) throw DomainError("trading limit must be positive");
  if (!(p.eta > 0.0)) throw DomainError("eta must be positive");
}

Analytics analytics(const MarketParams& m, double w, double risk_free) {
  validate(m);
  check_w(w);
  const double sa = m.sigma_asset;
  const double sc = m.sigma_cash;
  Analytics a;
  a.expected_return = m.mu_asset - w * m.premium();
  const double var = w * w * sc * sc + (1.0 - w) * (1.0 - w) * sa * sa + 2.0 * w * (1.0 - w) * m.rho * sc * sa;
  a.volatility = std::sqrt(std::max(0.0, var));
  a.te_mean = -w * m.premium();
  const double active = std::sqrt(std::max(0.0, m.te_variance()));
  a.te_vol = w * active;
  a.beta = sa > 0.0 ? 1.0 - (w / (sa * sa)) * (sa * sa - m.rho * sc * sa) : 0.0;
  const double cov = w * m.rho * sc * sa + (1.0 - w) * sa * sa;
  a.correlation = a.volatility > 0.0 && sa > 0.0 ? cov / (a.volatility * sa) : 0.0;
  if (a.volatility > 0.0) a.sharpe = (a.expected_return - risk_free) / a.volatility;
  if (active > 0.0) a.information = -m.premium() / active;
  return a;
}

double tc_asset(const CostParams& p, double x) {
  if (x <= 0.0) return 0.0;
  const auto [k, r] = split(p, x);
  const double b = p.impact * p.sigma;
  if (unlimited(p)) return x * p.spread + b * pow15(x);
  return x * p.spread + k * b * pow15(p.trading_limit) + b * pow15(r);
}

double tc_asset_derivative(const CostParams& p, double x) {
  if (x <= 0.0) return p.spread;
  const auto [k, r] = split(p, x);
  return p.spread + 1.5 * p.impact * p.sigma * std::sqrt(r);
}

double tc_cash(const CostParams& p, double x) { return p.cash_cost * std::max(0.0, x); }

double liquidation_gain(const CostParams& p, double w, double redemption) {
  if (redemption < w) return tc_asset(p, redemption) - tc_cash(p, redemption);
  return tc_asset(p, redemption) - tc_asset(p, redemption - w);
}

RedemptionLaw RedemptionLaw::power(double eta) {
  return {[eta](double x) { return std::pow(x, eta); }, [eta](double x) { return eta * std::pow(x, eta - 1.0); }};
}

double expected_lg_quadrature(const CostParams& p, double w) {
  validate(p);
  check_w(w);
  auto g = [&](double r) { return liquidation_gain(p, w, r); };
  return integrate_power(p, 0.0, 1.0, w, g);
}

double expected_lg_quadrature(const CostParams& p, double w, const RedemptionLaw& law) {
  validate(p);
  check_w(w);
  const auto pts = knots(p, 0.0, 1.0, w);
  auto g = [&](double r) { return liquidation_gain(p, w, r) * law.pdf(r); };
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) total += special::integrate(g, pts[k], pts[k + 1], 1e-10, kAbsFloor);
  return total;
}

double expected_lg_exact(const CostParams& p, double w) {
  validate(p);
  check_w(w);
  if (!unlimited(p)) return expected_lg_quadrature(p, w);
  const double e = p.eta;
  const double b = p.impact * p.sigma;
  return (p.spread - p.cash_cost) * e / (e + 1.0) * std::pow(w, e + 1.0) + p.spread * w * (1.0 - std::pow(w, e)) +
         b * (e / (e + 1.5) - e * special::integral_I_w(w, e));
}

double expected_lg_published(const CostParams& p, double w) {
  validate(p);
  check_w(w);
  if (!unlimited(p)) throw DomainError("published closed form requires an unlimited trading limit");
  const double e = p.eta;
  const double b = p.impact * p.sigma;
  return e * (p.spread - p.cash_cost) / (e + 1.0) * std::pow(w, e + 1.0) + 2.0 * e * b / (2.0 * e + 3.0) +
         e * p.spread * w * (1.0 - w) - e * b * special::integral_I_w(w, e);
}

double expected_lg_approx(const CostParams& p, double w) {
  validate(p);
  check_w(w);
  const double e = p.eta;
  const double s = p.spread;
  const double b = p.impact * p.sigma;
  const double we = std::pow(w, e);
  if (unlimited(p)) {
    return s * w + b * pow15(w) - s / (e + 1.0) * w * we - 3.0 * b / (2.0 * e + 3.0) * pow15(w) * we;
  }
  const double x = p.trading_limit;
  const auto [kappa, r] = split(p, w);
  double hsum = 0.0;
  double isum = 0.0;
  for (int k = 1; k <= kappa; ++k) {
    hsum += (k - 1) * (std::pow(k * x, e) - std::pow((k - 1) * x, e));
    isum += special::integral_I_ab((k - 1) * x, k * x, e);
  }
  hsum += kappa * (we - std::pow(kappa * x, e));
  if (r > 0.0) isum += special::integral_I_ab(kappa * x, w, e);
  return e * s * w * we / (e + 1.0) + b * pow15(x) * hsum + e * b * isum + s * (w - w * we) +
         kappa * b * pow15(x) * (1.0 - we) + b * pow15(r) * (1.0 - we);
}

double expected_lg(const CostParams& p, double w, LgMethod method) {
  switch (method) {
    case LgMethod::exact: return expected_lg_exact(p, w);
    case LgMethod::approximate: return expected_lg_approx(p, w);
    case LgMethod::published: return expected_lg_published(p, w);
  }
  throw DomainError("unknown method");
}

LgSplit expected_lg_components(const CostParams& p, double w) {
  validate(p);
  check_w(w);
  LgSplit out;
  if (w > 0.0)
    out.cash = integrate_power(p, 0.0, w, w, [&](double r) { return tc_asset(p, r) - tc_cash(p, r); });
  if (w < 1.0)
    out.asset = integrate_power(p, w, 1.0, w, [&](double r) { return tc_asset(p, r) - tc_asset(p, r - w); });
  return out;
}

double d_expected_lg_numeric(const CostParams& p, double w, LgMethod method, double h) {
  check_w(w);
  const double lo = std::max(0.0, w - h);
  const double hi = std::min(1.0, w + h);
  return (expected_lg(p, hi, method) - expected_lg(p, lo, method)) / (hi - lo);
}

double d_expected_lg(const CostParams& p, double w, LgMethod method) {
  validate(p);
  check_w(w);
  switch (method) {
    case LgMethod::approximate:
      return tc_asset_derivative(p, w) * (1.0 - std::pow(w, p.eta));
    case LgMethod::exact: {
      const double cash = tc_cash(p, w) * p.eta * std::pow(w, p.eta - 1.0);
      if (w >= 1.0) return -cash;
      const double asset =
          integrate_power(p, w, 1.0, w, [&](double r) { return tc_asset_derivative(p, std::max(0.0, r - w)); });
      return asset - (w > 0.0 ? cash : 0.0);
    }
    case LgMethod::published:
      return d_expected_lg_numeric(p, w, method);
  }
  throw DomainError("unknown method");
}

double net_buffer_cost(const MarketParams& m, const CostParams& p, double w, LgMethod method) {
  validate(m);
  return w * m.premium() + 0.5 * m.lambda * w * w * m.te_variance() - expected_lg(p, w, method);
}

double break_even_premium(const MarketParams& m, const CostParams& p, double w, LgMethod method) {
  validate(m);
  return d_expected_lg(p, w, method) - m.lambda * w * m.te_variance();
}

Optimum optimal_cash_buffer(const MarketParams& m, const CostParams& p, LgMethod method, double grid_step) {
  validate(m);
  validate(p);
  if (!(grid_step > 0.0 && grid_step <= 0.5)) throw DomainError("grid step must lie in (0, 0.5]");
  const int n = static_cast<int>(std::round(1.0 / grid_step));
  auto nbc = [&](double w) { return net_buffer_cost(m, p, w, method); };
  Optimum best{0.0, nbc(0.0)};
  for (int i = 1; i <= n; ++i) {
    const double w = std::min(1.0, i * grid_step);
    const double v = nbc(w);
    if (v < best.nbc) best = {w, v};
  }
  const double lo = std::max(0.0, best.w - grid_step);
  const double hi = std::min(1.0, best.w + grid_step);
  const auto [w, v] = boost::math::tools::brent_find_minima(nbc, lo, hi, 40);
  if (v < best.nbc) best = {w, v};
  return best;
}

double approximation_error(const CostParams& p, double w) {
  validate(p);
  check_w(w);
  const double x = std::min(p.trading_limit, 1.0);
  const double u = unlimited(p) ? w : w - std::floor(w / x) * x;
  const double vmax = std::min(x, 1.0 - w);
  const double v = std::min(vmax, x - u);
  const double h = pow15(u + v) - pow15(u) - pow15(v);
  return p.impact * p.sigma * std::max(0.0, h);
}

double max_approximation_error(const CostParams& p) {
  validate(p);
  const double x = std::min(p.trading_limit, 1.0);
  const double peak = p.impact * p.sigma * pow15(x) * (1.0 - 1.0 / std::sqrt(2.0));
  if (x <= 0.5) return peak;
  double best = 0.0;
  auto neg = [&](double w) { return -approximation_error(p, w); };
  const int n = 2000;
  int arg = 0;
  for (int i = 0; i <= n; ++i) {
    const double v = approximation_error(p, static_cast<double>(i) / n);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  const auto r = boost::math::tools::brent_find_minima(neg, std::max(0.0, (arg - 1.0) / n),
                                                        std::min(1.0, (arg + 1.0) / n), 40);
  return std::max(best, -r.second);
}

MonteCarlo monte_carlo_lg(const CostParams& p, double w, std::size_t draws, std::uint64_t seed) {
  validate(p);
  check_w(w);
  if (draws < 2) throw DomainError("at least two draws are needed");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < draws; ++k) {
    const double r = std::pow(unif(rng), 1.0 / p.eta);
    const double x = liquidation_gain(p, w, r);
    const double d = x - mean;
    mean += d / static_cast<double>(k + 1);
    m2 += d * (x - mean);
  }
  const double var = m2 / static_cast<double>(draws - 1);
  return {mean, std::sqrt(var / static_cast<double>(draws))};
}

}  // namespace lst::buffer
