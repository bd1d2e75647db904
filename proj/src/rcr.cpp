#include "lst/rcr.hpp"

#include <algorithm>
#include <limits>

namespace lst {

RcrReport rcr_report(const RedemptionShock& shock, const LiquidationSchedule& s, int horizon) {
  if (!(shock.amount > 0.0)) throw DomainError("redemption shock must be positive");
  RcrReport r;
  r.shock = shock;
  r.redemption_value = s.source_value();
  const int last = horizon > 0 ? horizon : s.horizon();
  for (int h = 1; h <= last; ++h) {
    RcrRow row;
    row.day = h;
    row.lr = r.redemption_value > 0.0 ? liquidation_ratio(s, h) : 0.0;
    row.amount = s.complete && h >= s.horizon() ? r.redemption_value : s.amount(h);
    row.rcr = row.amount / shock.amount;
    row.ls = shock.rate * std::max(0.0, 1.0 - row.rcr);
    r.rows.push_back(row);
  }
  return r;
}

RcrReport rcr_report(const Portfolio& p, const RedemptionShock& shock, const RedemptionPortfolio& q,
                     int horizon, int max_days) {
  return rcr_report(shock, build_schedule(p, q, max_days), horizon);
}

RedemptionPortfolio pro_rata_portfolio(const Portfolio& p, double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError("redemption rate must lie in [0,1]");
  RedemptionPortfolio q;
  q.reserve(p.size());
  for (const auto& s : p.securities) q.push_back(rate * s.shares);
  return q;
}

OptimalProRata optimal_pro_rata(const Portfolio& p, int tau) {
  if (tau < 1) throw DomainError("horizon must be at least one day");
  double phi = 1.0;
  for (const auto& s : p.securities) {
    if (s.shares <= 0.0) continue;
    phi = std::min(phi, std::min(tau * s.daily_limit / s.shares, 1.0));
  }
  OptimalProRata out;
  out.phi = phi;
  out.q = pro_rata_portfolio(p, phi);
  out.max_shock = phi * tna(p);
  return out;
}

RedemptionPortfolio waterfall_portfolio(const Portfolio& p) { return p.shares(); }

Days time_to_liquidity(const RcrReport& report, double prob) {
  if (!(prob > 0.0)) throw DomainError("coverage threshold must be positive");
  for (const auto& row : report.rows)
    if (row.rcr >= prob - 1e-12) return Days::finite(row.day);
  return Days::never();
}

}  // namespace lst
