#pragma once

#include "lst/core.hpp"
#include "lst/liquidation.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace lst {

enum class ImpactRegime { square_root, square_root_linear };

struct CostModel {
  double impact_coeff = 0.4;
  double kink = 0.05;
  double max_participation = 0.10;
  double days_per_year = 260.0;
  ImpactRegime regime = ImpactRegime::square_root_linear;
  // Optional replacement for the impact term: (participation, daily volatility) -> unit cost.
  std::function<double(double, double)> custom_impact;

  double daily_vol(const Security& s) const;
  double impact(const Security& s, double x) const;
  double unit_cost(const Security& s, double x) const { return s.spread + impact(s, x); }
  // d/dx [x * unit_cost(x)]
  double marginal_cost(const Security& s, double x) const;
};

void validate(const CostModel& cm);

struct CostBreakdown {
  double total = 0.0;
  double spread = 0.0;
  double impact = 0.0;
};

// Currency amounts.
CostBreakdown transaction_cost(const Portfolio& p, const CostModel& cm, const LiquidationSchedule& s);

double tracking_risk_equity(const Portfolio& p, const RedemptionPortfolio& q);

struct BondRiskSpec {
  std::vector<int> sector;
  std::vector<int> bucket;
  std::vector<double> modified_duration;
  std::vector<double> dts;
};

struct BondRisk {
  double weight = 0.0;
  double duration = 0.0;
  double dts = 0.0;
  double total() const { return weight + duration + dts; }
};

BondRisk tracking_risk_bond(const Portfolio& p, const RedemptionPortfolio& q, const BondRiskSpec& spec);

struct PolicyEvaluation {
  double tr = 0.0;
  double tc = 0.0;         // fraction of the redemption value
  double tc_spread = 0.0;
  double tc_impact = 0.0;
  double ls = 0.0;         // 1 - LR(q; h)
};

PolicyEvaluation evaluate_policy(const Portfolio& p, const CostModel& cm, const RedemptionPortfolio& q, int h,
                                 const BondRiskSpec* bonds = nullptr);

enum class OptimizeStatus { optimal, infeasible };
enum class BindingConstraint { none, value, shortfall, tracking_and_shortfall };

struct OptimizeResult {
  OptimizeStatus status = OptimizeStatus::optimal;
  BindingConstraint binding = BindingConstraint::none;
  RedemptionPortfolio q;
  PolicyEvaluation evaluation;
};

struct OptimizeOptions {
  int outer_iterations = 30;
  int inner_iterations = 400;
  double tolerance = 1e-8;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

OptimizeResult optimize_policy(const Portfolio& p, const CostModel& cm, const RedemptionShock& shock, double tr_max,
                               double ls_max, int h, const OptimizeOptions& opt = {});

}  // namespace lst
