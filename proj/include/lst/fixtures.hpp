#pragma once

#include "lst/core.hpp"

#include <vector>

namespace lst::fixtures {

// Seven-asset reference fund: holdings, prices and daily limits.
Portfolio reference_fund();

// Same fund with the last asset's daily limit cut to 20 shares.
Portfolio reference_fund_illiquid();

// Reference fund with volumes (10x the limits), volatilities, spreads and a correlation matrix.
Portfolio reference_fund_market();

// Five candidate redemption portfolios for a 10% shock.
std::vector<RedemptionPortfolio> mixing_candidates();

}  // namespace lst::fixtures
