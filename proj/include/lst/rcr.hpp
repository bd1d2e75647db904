#pragma once

#include "lst/core.hpp"
#include "lst/liquidation.hpp"

#include <vector>

namespace lst {

struct RcrRow {
  int day = 0;
  double lr = 0.0;
  double amount = 0.0;
  double rcr = 0.0;
  double ls = 0.0;
};

struct RcrReport {
  RedemptionShock shock;
  double redemption_value = 0.0;
  std::vector<RcrRow> rows;
};

// horizon <= 0 reports every day of the schedule.
RcrReport rcr_report(const Portfolio& p, const RedemptionShock& shock, const RedemptionPortfolio& q,
                     int horizon = 0, int max_days = kDefaultMaxDays);
RcrReport rcr_report(const RedemptionShock& shock, const LiquidationSchedule& s, int horizon);

RedemptionPortfolio pro_rata_portfolio(const Portfolio& p, double rate);

struct OptimalProRata {
  double phi = 0.0;
  RedemptionPortfolio q;
  double max_shock = 0.0;  // A(tau) in currency
};

OptimalProRata optimal_pro_rata(const Portfolio& p, int tau);

RedemptionPortfolio waterfall_portfolio(const Portfolio& p);

Days time_to_liquidity(const RcrReport& report, double prob);

}  // namespace lst
