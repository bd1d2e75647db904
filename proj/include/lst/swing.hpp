#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lst::swing {

struct FundState {
  double nav = 0.0;
  double units = 0.0;
};

struct FlowEvent {
  double subscriptions = 0.0;  // units
  double redemptions = 0.0;    // units
  double asset_return = 0.0;
  double cost = 0.0;  // currency

  double net() const { return subscriptions - redemptions; }
};

struct NavStep {
  FundState next;
  double dilution = 0.0;  // per unit
};

NavStep nav_step(const FundState& f, const FlowEvent& e);

enum class Mode { none, full, partial, dual, dynamic };
enum class Adjustment { cost, factor };

struct Config {
  Mode mode = Mode::full;
  Adjustment adjustment = Adjustment::cost;
  double threshold = 0.0;
  double factor = 0.0;
  double product = 0.0;
  double gamma = 1.0;
};

struct SwingResult {
  double nav_gross = 0.0;
  bool activated = false;
  bool no_flow = false;
  std::optional<double> nav_swing;
  std::optional<double> nav_bid;
  std::optional<double> nav_ask;
  double alpha = 0.0;
};

double dynamic_threshold(double product, double factor);
double flow_ratio(const FundState& f, const FlowEvent& e);
SwingResult swing_nav(const FundState& f, const FlowEvent& e, const Config& cfg);

enum class AdlRule { netted, gross, pro_rata };

struct AdlFees {
  double entry = 0.0;
  double exit = 0.0;
  bool degenerate = false;
};

AdlFees adl_fees(double n_plus, double n_minus, double cost, AdlRule rule);

struct GateRequest {
  int day = 0;
  std::string investor;
  double rate = 0.0;
};

struct GateFill {
  int day = 0;
  std::string investor;
  double rate = 0.0;
  double share_of_request = 0.0;
};

std::vector<GateFill> gate_schedule(const std::vector<GateRequest>& requests, double daily_cap);

}  // namespace lst::swing
