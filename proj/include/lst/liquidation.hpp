#pragma once

#include "lst/core.hpp"

#include <iosfwd>
#include <vector>

namespace lst {

inline constexpr int kDefaultMaxDays = 260;

struct LiquidationSchedule {
  std::vector<std::vector<double>> sold;  // sold[h - 1][i]
  RedemptionPortfolio source;
  std::vector<double> prices;
  bool complete = true;
  std::vector<std::size_t> never_liquidated;  // held assets with a zero limit

  int horizon() const { return static_cast<int>(sold.size()); }
  std::vector<double> cumulative(int h) const;
  double amount(int h) const;  // value sold over days 1..h
  double source_value() const;
};

LiquidationSchedule build_schedule(const Portfolio& p, const RedemptionPortfolio& q,
                                   int max_days = kDefaultMaxDays, double limit_multiplier = 1.0);

double liquidation_ratio(const LiquidationSchedule& s, int h);
Days liquidation_time(const LiquidationSchedule& s, double prob);

struct DailyLiquidationProfile {
  std::vector<double> daily;      // W(h), h = 1..H
  std::vector<double> shortfall;  // LS(h), h = 0..H
  double residual = 0.0;
};

// Full redemption under waterfall selling, closed form.
double full_redemption_shortfall(const Portfolio& p, double h);
DailyLiquidationProfile daily_liquidation_profile(const Portfolio& p, int max_days = 100000);

struct IlliquidAssets {
  int h_star = 0;
  double fraction = 0.0;
};

IlliquidAssets illiquid_assets(const Portfolio& p, double w_star);

void write_schedule_csv(std::ostream& os, const Portfolio& p, const LiquidationSchedule& s);

}  // namespace lst
