#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace lst::buffer {

struct MarketParams {
  double mu_asset = 0.0;
  double mu_cash = 0.0;
  double sigma_asset = 0.0;
  double sigma_cash = 0.0;
  double rho = 0.0;
  double lambda = 0.0;

  double premium() const { return mu_asset - mu_cash; }
  double te_variance() const;
};

struct CostParams {
  double spread = 0.0;
  double cash_cost = 0.0;
  double impact = 0.4;
  double sigma = 0.0;  // daily
  double trading_limit = 1.0;
  double eta = 1.0;

  static double daily_vol(double annual, double days_per_year = 260.0);
};

void validate(const MarketParams& m);
void validate(const CostParams& p);

struct Analytics {
  double expected_return = 0.0;
  double volatility = 0.0;
  double te_mean = 0.0;
  double te_vol = 0.0;
  double beta = 0.0;
  double correlation = 0.0;
  std::optional<double> sharpe;       // undefined when volatility is zero
  std::optional<double> information;  // undefined when the active risk is zero
};

Analytics analytics(const MarketParams& m, double w, double risk_free = 0.0);

double tc_asset(const CostParams& p, double x);
double tc_asset_derivative(const CostParams& p, double x);
double tc_cash(const CostParams& p, double x);

double liquidation_gain(const CostParams& p, double w, double redemption);

enum class LgMethod { exact, approximate, published };

struct RedemptionLaw {
  std::function<double(double)> cdf;
  std::function<double(double)> pdf;
  static RedemptionLaw power(double eta);
};

double expected_lg(const CostParams& p, double w, LgMethod method = LgMethod::exact);
double expected_lg_exact(const CostParams& p, double w);
double expected_lg_approx(const CostParams& p, double w);
double expected_lg_published(const CostParams& p, double w);
double expected_lg_quadrature(const CostParams& p, double w);
double expected_lg_quadrature(const CostParams& p, double w, const RedemptionLaw& law);

struct LgSplit {
  double cash = 0.0;
  double asset = 0.0;
};

LgSplit expected_lg_components(const CostParams& p, double w);

double d_expected_lg(const CostParams& p, double w, LgMethod method = LgMethod::exact);
double d_expected_lg_numeric(const CostParams& p, double w, LgMethod method = LgMethod::exact, double h = 1e-6);

double net_buffer_cost(const MarketParams& m, const CostParams& p, double w, LgMethod method = LgMethod::exact);
double break_even_premium(const MarketParams& m, const CostParams& p, double w, LgMethod method = LgMethod::exact);

struct Optimum {
  double w = 0.0;
  double nbc = 0.0;
};

Optimum optimal_cash_buffer(const MarketParams& m, const CostParams& p, LgMethod method = LgMethod::exact,
                            double grid_step = 1e-3);

double approximation_error(const CostParams& p, double w);
double max_approximation_error(const CostParams& p);

struct MonteCarlo {
  double mean = 0.0;
  double std_error = 0.0;
};

MonteCarlo monte_carlo_lg(const CostParams& p, double w, std::size_t draws, std::uint64_t seed);

}  // namespace lst::buffer
