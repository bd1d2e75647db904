#include "lst/swing.hpp"

#include "lst/core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace lst::swing {

namespace {

void check(const FundState& f, const FlowEvent& e) {
  if (!(f.units > 0.0)) throw DomainError("unit count must be positive");
  if (e.subscriptions < 0.0 || e.redemptions < 0.0) throw DomainError("flows must be non-negative");
  if (e.cost < 0.0) throw DomainError("transaction cost must be non-negative");
  if (!(f.units + e.net() > 0.0)) throw DomainError("unit count after the flow must be positive");
}

}  // namespace

NavStep nav_step(const FundState& f, const FlowEvent& e) {
  check(f, e);
  const double after = f.units + e.net();
  const double gross = (1.0 + e.asset_return) * f.nav;
  NavStep s;
  s.next.units = after;
  if (e.net() == 0.0) {
    s.next.nav = gross;
    return s;
  }
  const double charged_units = e.net() > 0.0 ? after : f.units;
  s.next.nav = gross - e.cost / charged_units;
  s.dilution = e.cost / std::max(f.units, after);
  return s;
}

double dynamic_threshold(double product, double factor) {
  if (!(factor > 0.0)) throw DomainError("swing factor must be positive");
  if (product < 0.0) throw DomainError("swing product must be non-negative");
  return product / factor;
}

double flow_ratio(const FundState& f, const FlowEvent& e) {
  check(f, e);
  return std::abs(e.net()) / std::min(f.units, f.units + e.net());
}

SwingResult swing_nav(const FundState& f, const FlowEvent& e, const Config& cfg) {
  check(f, e);
  if (cfg.threshold < 0.0 || cfg.factor < 0.0 || cfg.product < 0.0) throw DomainError("swing parameters must be non-negative");
  SwingResult r;
  r.nav_gross = (1.0 + e.asset_return) * f.nav;

  if (cfg.mode == Mode::dual) {
    if (!(cfg.gamma >= 1.0)) throw DomainError("gamma must be at least 1");
    const double total = e.subscriptions + cfg.gamma * e.redemptions;
    r.activated = total > 0.0;
    r.no_flow = !r.activated;
    r.alpha = total > 0.0 ? e.subscriptions / total : 0.0;
    if (e.subscriptions > 0.0) r.nav_ask = r.nav_gross + r.alpha * e.cost / e.subscriptions;
    if (e.redemptions > 0.0) r.nav_bid = r.nav_gross - (1.0 - r.alpha) * e.cost / e.redemptions;
    return r;
  }

  const double dn = e.net();
  if (dn == 0.0) {
    r.no_flow = true;
    return r;
  }
  if (cfg.mode == Mode::none) return r;

  double threshold = 0.0;
  Adjustment adj = cfg.adjustment;
  if (cfg.mode == Mode::partial) threshold = cfg.threshold;
  if (cfg.mode == Mode::dynamic) {
    threshold = dynamic_threshold(cfg.product, cfg.factor);
    adj = Adjustment::factor;
  }
  r.activated = flow_ratio(f, e) >= threshold;
  if (!r.activated) {
    r.nav_swing = r.nav_gross;
    return r;
  }
  if (adj == Adjustment::cost)
    r.nav_swing = r.nav_gross + e.cost / dn;
  else
    r.nav_swing = (1.0 + (dn > 0.0 ? cfg.factor : -cfg.factor)) * r.nav_gross;
  return r;
}

AdlFees adl_fees(double n_plus, double n_minus, double cost, AdlRule rule) {
  if (n_plus < 0.0 || n_minus < 0.0) throw DomainError("flows must be non-negative");
  if (!(n_plus + n_minus > 0.0)) throw DomainError("at least one flow must be positive");
  if (cost < 0.0) throw DomainError("transaction cost must be non-negative");
  AdlFees f;
  const double dn = n_plus - n_minus;
  switch (rule) {
    case AdlRule::pro_rata:
      f.entry = n_plus > 0.0 ? cost / (n_plus + n_minus) : 0.0;
      f.exit = n_minus > 0.0 ? cost / (n_plus + n_minus) : 0.0;
      break;
    case AdlRule::gross:
      if (dn > 0.0) f.entry = cost / n_plus;
      else if (dn < 0.0) f.exit = cost / n_minus;
      else f.degenerate = true;
      break;
    case AdlRule::netted:
      if (dn > 0.0) f.entry = cost / dn;
      else if (dn < 0.0) f.exit = -cost / dn;
      else f.degenerate = true;
      break;
  }
  return f;
}

std::vector<GateFill> gate_schedule(const std::vector<GateRequest>& requests, double daily_cap) {
  if (!(daily_cap > 0.0 && daily_cap <= 1.0)) throw DomainError("gate cap must lie in (0,1]");
  for (const auto& r : requests)
    if (r.rate < 0.0) throw DomainError("requested rate must be non-negative");

  std::vector<std::size_t> order(requests.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return requests[a].day < requests[b].day; });

  struct Pending {
    std::size_t index;
    double left;
  };
  std::deque<Pending> queue;
  std::vector<GateFill> fills;
  constexpr double eps = 1e-15;
  std::size_t next = 0;
  int day = order.empty() ? 0 : requests[order.front()].day;
  while (next < order.size() || !queue.empty()) {
    if (queue.empty() && next < order.size()) day = std::max(day, requests[order[next]].day);
    while (next < order.size() && requests[order[next]].day <= day) {
      queue.push_back({order[next], requests[order[next]].rate});
      ++next;
    }
    double capacity = daily_cap;
    while (!queue.empty() && capacity > eps) {
      auto& head = queue.front();
      const double x = std::min(head.left, capacity);
      const auto& req = requests[head.index];
      if (x > 0.0) fills.push_back({day, req.investor, x, x / req.rate});
      head.left -= x;
      capacity -= x;
      if (head.left <= eps) queue.pop_front();
    }
    ++day;
  }
  return fills;
}

}  // namespace lst::swing
