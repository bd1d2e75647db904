#include "lst/reverse_stress.hpp"

#include "lst/liquidation.hpp"
#include "lst/rcr.hpp"

#include <boost/math/tools/roots.hpp>

#include <cstdint>

namespace lst {

LiabilityRst liability_rst(const Portfolio& p, const std::vector<double>& alpha, double rcr_floor, int tau) {
  if (!(rcr_floor > 0.0)) throw DomainError("coverage floor must be positive");
  if (tau < 1) throw DomainError("horizon must be at least one day");
  if (alpha.size() != p.size()) throw DomainError("alpha vector size mismatch");
  RedemptionPortfolio q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (alpha[i] < 0.0 || alpha[i] > 1.0) throw DomainError("alpha must lie in [0,1]");
    q[i] = alpha[i] * p.securities[i].shares;
  }
  const auto s = build_schedule(p, q, tau);
  LiabilityRst out;
  out.tau = tau;
  out.amount = s.amount(tau) / rcr_floor;
  out.rate = out.amount / tna(p);
  out.feasible = out.rate <= 1.0;
  return out;
}

double liability_floor_bound(const Portfolio& p, const std::vector<double>& alpha) {
  if (alpha.size() != p.size()) throw DomainError("alpha vector size mismatch");
  const auto w = weights(p);
  double b = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) b += alpha[i] * w[i];
  return b;
}

double rcr_scaled(const Portfolio& p, double rate_star, int tau, double multiplier) {
  const auto shock = make_shock(p, rate_star);
  const auto q = pro_rata_portfolio(p, rate_star);
  const auto s = build_schedule(p, q, tau, multiplier);
  return s.amount(tau) / shock.amount;
}

AssetRst asset_rst(const Portfolio& p, double rate_star, double rcr_floor, int tau, double tol, int max_iter) {
  if (!(rate_star > 0.0 && rate_star <= 1.0)) throw DomainError("standard redemption rate must lie in (0,1]");
  if (!(rcr_floor > 0.0)) throw DomainError("coverage floor must be positive");
  if (tau < 1) throw DomainError("horizon must be at least one day");
  auto f = [&](double m) { return rcr_scaled(p, rate_star, tau, m) - rcr_floor; };

  AssetRst out;
  if (f(1.0) <= 0.0) {
    out.status = AssetRstStatus::breached_at_full_volume;
    return out;
  }
  if (f(tol) > 0.0) {
    out.status = AssetRstStatus::never_breached;
    return out;
  }
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  auto done = [tol](double a, double b) { return b - a <= tol; };
  const auto [lo, hi] = boost::math::tools::bisect(f, 0.0, 1.0, done, iters);
  out.multiplier = 0.5 * (lo + hi);
  out.iterations = static_cast<int>(iters);
  return out;
}

}  // namespace lst
