#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lst::hqla {

enum class AssetClass { cash, sovereign, corporate, securitization, equity };
enum class Rating { aa_minus_to_aaa, a_minus_to_a_plus, bbb_minus_to_bbb_plus, below_bbb_minus };

AssetClass parse_asset_class(std::string_view s);
Rating parse_rating(std::string_view s);
std::string_view to_string(AssetClass c);
std::string_view to_string(Rating r);

double ccf_static(AssetClass c, Rating r);
double ccf_static(AssetClass c);  // classes whose factor does not depend on rating

struct Bucket {
  std::string name;
  std::optional<double> ccf_static;
  double lambda = 0.0;  // per day
  double eta_dd = 0.0;  // per sqrt(day)
  double mdd = 0.0;
};

struct SpecificRiskParams {
  double tna_star = 1.0;
  double h_star = 0.01;
  double xi_size = 0.0;
  double xi_conc = 0.0;
  double sf_cap = 1.0;
};

enum class DrawdownRule { half_horizon, full_horizon };

void validate(const Bucket& b);
void validate(const SpecificRiskParams& sf);

double liquidity_factor(const Bucket& b, double tau);
double drawdown_factor(const Bucket& b, double tau);
double specific_risk_factor(const SpecificRiskParams& sf, double tna, double herfindahl);
double ccf_parametric(const Bucket& b, const SpecificRiskParams& sf, double tau, double tna, double herfindahl,
                      DrawdownRule rule = DrawdownRule::half_horizon);

struct Coverage {
  double rcr = 0.0;
  double ls = 0.0;
};

// (weight, ccf) pairs
Coverage rcr_hqla(const std::vector<std::pair<double, double>>& buckets, double rate);

}  // namespace lst::hqla
