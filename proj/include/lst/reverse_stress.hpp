#pragma once

#include "lst/core.hpp"

#include <vector>

namespace lst {

struct LiabilityRst {
  int tau = 0;
  double amount = 0.0;  // R^RST in currency
  double rate = 0.0;    // R^RST as a fraction of TNA
  bool feasible = true; // rate <= 1
};

LiabilityRst liability_rst(const Portfolio& p, const std::vector<double>& alpha, double rcr_floor, int tau);
double liability_floor_bound(const Portfolio& p, const std::vector<double>& alpha);

enum class AssetRstStatus { solved, breached_at_full_volume, never_breached };

struct AssetRst {
  AssetRstStatus status = AssetRstStatus::solved;
  double multiplier = 0.0;
  int iterations = 0;
};

double rcr_scaled(const Portfolio& p, double rate_star, int tau, double multiplier);
AssetRst asset_rst(const Portfolio& p, double rate_star, double rcr_floor, int tau, double tol = 1e-6,
                   int max_iter = 200);

}  // namespace lst
