#include "lst/liquidation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace lst {

std::vector<double> LiquidationSchedule::cumulative(int h) const {
  std::vector<double> out(source.size(), 0.0);
  const int last = std::min(h, horizon());
  for (int d = 0; d < last; ++d)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sold[d][i];
  return out;
}

double LiquidationSchedule::amount(int h) const {
  const auto c = cumulative(h);
  double a = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) a += c[i] * prices[i];
  return a;
}

double LiquidationSchedule::source_value() const {
  double v = 0.0;
  for (std::size_t i = 0; i < source.size(); ++i) v += source[i] * prices[i];
  return v;
}

LiquidationSchedule build_schedule(const Portfolio& p, const RedemptionPortfolio& q, int max_days,
                                   double limit_multiplier) {
  validate_redemption(p, q);
  if (max_days < 1) throw DomainError("max_days must be at least 1");
  if (limit_multiplier < 0.0) throw DomainError("limit multiplier must be non-negative");

  LiquidationSchedule s;
  s.source = q;
  s.prices = p.prices();
  const std::size_t n = q.size();
  std::vector<double> limit(n);
  for (std::size_t i = 0; i < n; ++i) {
    limit[i] = p.securities[i].daily_limit * limit_multiplier;
    if (q[i] > 0.0 && limit[i] <= 0.0) s.never_liquidated.push_back(i);
  }

  std::vector<double> remaining = q;
  auto pending = [&] {
    for (std::size_t i = 0; i < n; ++i)
      if (remaining[i] > 0.0 && limit[i] > 0.0) return true;
    return false;
  };
  while (pending() && s.horizon() < max_days) {
    std::vector<double> day(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      day[i] = std::min(remaining[i], limit[i]);
      remaining[i] -= day[i];
      if (remaining[i] < 1e-9 * std::max(1.0, q[i])) remaining[i] = 0.0;
    }
    s.sold.push_back(std::move(day));
  }
  s.complete = std::all_of(remaining.begin(), remaining.end(), [](double r) { return r == 0.0; });
  return s;
}

double liquidation_ratio(const LiquidationSchedule& s, int h) {
  const double v = s.source_value();
  if (!(v > 0.0)) throw DomainError("redemption portfolio has zero value");
  if (h <= 0) return 0.0;
  if (s.complete && h >= s.horizon()) return 1.0;
  return s.amount(h) / v;
}

Days liquidation_time(const LiquidationSchedule& s, double prob) {
  if (!(prob > 0.0 && prob <= 1.0)) throw DomainError("probability must lie in (0,1]");
  for (int h = 1; h <= s.horizon(); ++h)
    if (liquidation_ratio(s, h) >= prob - 1e-12) return Days::finite(h);
  return Days::never();
}

double full_redemption_shortfall(const Portfolio& p, double h) {
  const double t = tna(p);
  double sold = 0.0;
  for (const auto& sec : p.securities) {
    const double w = sec.shares * sec.price / t;
    const double psi = sec.daily_limit * sec.price / t;
    sold += std::min(h * psi, w);
  }
  return std::max(0.0, 1.0 - sold);
}

DailyLiquidationProfile daily_liquidation_profile(const Portfolio& p, int max_days) {
  validate(p);
  double horizon = 0.0;
  bool any_stuck = false;
  for (const auto& sec : p.securities) {
    if (sec.shares <= 0.0) continue;
    if (sec.daily_limit <= 0.0) {
      any_stuck = true;
      continue;
    }
    horizon = std::max(horizon, std::ceil(sec.shares / sec.daily_limit - 1e-12));
  }
  const int last = std::min(max_days, static_cast<int>(horizon));
  DailyLiquidationProfile out;
  out.shortfall.push_back(full_redemption_shortfall(p, 0.0));
  for (int h = 1; h <= last; ++h) {
    out.shortfall.push_back(full_redemption_shortfall(p, h));
    out.daily.push_back(out.shortfall[h - 1] - out.shortfall[h]);
  }
  out.residual = any_stuck || last < horizon ? out.shortfall.back() : 0.0;
  return out;
}

IlliquidAssets illiquid_assets(const Portfolio& p, double w_star) {
  if (!(w_star > 0.0 && w_star < 1.0)) throw DomainError("threshold must lie in (0,1)");
  validate(p);
  for (int h = 1;; ++h) {
    const double prev = full_redemption_shortfall(p, h - 1);
    const double daily = prev - full_redemption_shortfall(p, h);
    if (daily <= w_star) return {h, prev};
  }
}

void write_schedule_csv(std::ostream& os, const Portfolio& p, const LiquidationSchedule& s) {
  os << "day";
  for (const auto& sec : p.securities) os << ',' << sec.id;
  os << ",cumulative_value\n";
  for (int h = 1; h <= s.horizon(); ++h) {
    os << h;
    for (double x : s.sold[h - 1]) os << ',' << fmt::format("{:.6g}", x);
    os << ',' << fmt::format("{:.6g}", s.amount(h)) << '\n';
  }
}

}  // namespace lst
