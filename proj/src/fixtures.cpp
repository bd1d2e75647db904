#include "lst/fixtures.hpp"

#include <array>

namespace lst::fixtures {

Portfolio reference_fund() {
  constexpr std::array<double, 7> shares{435100, 300100, 50400, 200500, 75500, 17500, 1800};
  constexpr std::array<double, 7> prices{89, 123, 488, 102, 167, 319, 1589};
  constexpr std::array<double, 7> limits{20000, 20000, 10000, 20000, 20000, 2000, 1000};
  Portfolio p;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    Security s;
    s.id = "#" + std::to_string(i + 1);
    s.shares = shares[i];
    s.price = prices[i];
    s.daily_limit = limits[i];
    p.securities.push_back(s);
  }
  return p;
}

Portfolio reference_fund_illiquid() {
  auto p = reference_fund();
  p.securities.back().daily_limit = 20;
  return p;
}

Portfolio reference_fund_market() {
  constexpr std::array<double, 7> vol{0.20, 0.18, 0.15, 0.15, 0.22, 0.30, 0.35};
  constexpr std::array<double, 7> spread_bp{5, 3, 5, 8, 12, 15, 15};
  auto p = reference_fund();
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto& s = p.securities[i];
    s.daily_volume = 10.0 * s.daily_limit;
    s.volatility = vol[i];
    s.spread = spread_bp[i] * 1e-4;
  }
  Eigen::MatrixXd rho(7, 7);
  rho << 1.0, 0.1, 0.4, 0.5, 0.3, 0.3, 0.3,
         0.1, 1.0, 0.7, 0.4, 0.3, 0.3, 0.3,
         0.4, 0.7, 1.0, 0.8, 0.5, 0.5, 0.5,
         0.5, 0.4, 0.8, 1.0, 0.5, 0.5, 0.5,
         0.3, 0.3, 0.5, 0.5, 1.0, 0.7, 0.7,
         0.3, 0.3, 0.5, 0.5, 0.7, 1.0, 0.7,
         0.3, 0.3, 0.5, 0.5, 0.7, 0.7, 1.0;
  p.correlation = rho;
  return p;
}

std::vector<RedemptionPortfolio> mixing_candidates() {
  return {
      {43510, 30010, 5040, 20050, 7550, 1750, 180},
      {0, 27000, 22238, 0, 0, 0, 0},
      {0, 0, 0, 0, 34315, 17500, 1800},
      {20000, 20000, 10000, 20000, 18044, 0, 0},
      {29404, 24004, 8016, 20020, 13846, 700, 72},
  };
}

}  // namespace lst::fixtures
