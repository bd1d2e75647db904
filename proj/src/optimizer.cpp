#include "lst/optimizer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

namespace lst {

double CostModel::daily_vol(const Security& s) const { return s.volatility / std::sqrt(days_per_year); }

double CostModel::impact(const Security& s, double x) const {
  if (x <= 0.0) return 0.0;
  const double sd = daily_vol(s);
  if (custom_impact) return custom_impact(x, sd);
  if (regime == ImpactRegime::square_root || x <= kink) return impact_coeff * sd * std::sqrt(x);
  return impact_coeff * sd * x / std::sqrt(kink);
}

double CostModel::marginal_cost(const Security& s, double x) const {
  if (x <= 0.0) return s.spread;
  if (custom_impact) {
    const double h = std::max(1e-9, 1e-6 * x);
    const double lo = std::max(0.0, x - h);
    return s.spread + ((x + h) * impact(s, x + h) - lo * impact(s, lo)) / (x + h - lo);
  }
  const double sd = daily_vol(s);
  if (regime == ImpactRegime::square_root || x <= kink) return s.spread + 1.5 * impact_coeff * sd * std::sqrt(x);
  return s.spread + 2.0 * impact_coeff * sd * x / std::sqrt(kink);
}

void validate(const CostModel& cm) {
  if (cm.impact_coeff < 0.0) throw DomainError("impact coefficient must be non-negative");
  if (!(cm.max_participation > 0.0 && cm.max_participation <= 1.0))
    throw DomainError("participation cap must lie in (0,1]");
  if (cm.kink < 0.0 || cm.kink > cm.max_participation)
    throw DomainError("impact kink must lie in [0, participation cap]");
  if (cm.regime == ImpactRegime::square_root_linear && !(cm.kink > 0.0) && !cm.custom_impact)
    throw DomainError("two-regime impact needs a positive kink");
  if (!(cm.days_per_year > 0.0)) throw DomainError("days per year must be positive");
}

CostBreakdown transaction_cost(const Portfolio& p, const CostModel& cm, const LiquidationSchedule& s) {
  validate(cm);
  CostBreakdown out;
  for (const auto& day : s.sold) {
    for (std::size_t i = 0; i < day.size(); ++i) {
      if (day[i] <= 0.0) continue;
      const auto& sec = p.securities[i];
      if (!(sec.daily_volume > 0.0))
        throw DomainError(fmt::format("security '{}' trades with zero daily volume", sec.id));
      const double x = day[i] / sec.daily_volume;
      if (x > cm.max_participation * (1.0 + 1e-9))
        throw DomainError(fmt::format("security '{}': participation {:.4g} exceeds the cap", sec.id, x));
      const double notional = day[i] * sec.price;
      out.spread += notional * sec.spread;
      out.impact += notional * cm.impact(sec, x);
    }
  }
  out.total = out.spread + out.impact;
  return out;
}

namespace {

Eigen::MatrixXd covariance(const Portfolio& p) {
  if (!p.correlation) throw DomainError("tracking risk needs a correlation matrix");
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::VectorXd sig(n);
  for (Eigen::Index i = 0; i < n; ++i) sig(i) = p.securities[static_cast<std::size_t>(i)].volatility;
  return sig.asDiagonal() * (*p.correlation) * sig.asDiagonal();
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

double tracking_risk_equity(const Portfolio& p, const RedemptionPortfolio& q) {
  const auto sigma = covariance(p);
  const auto dw = to_eigen(weight_distortion(p, q).delta);
  return std::sqrt(std::max(0.0, dw.dot(sigma * dw)));
}

BondRisk tracking_risk_bond(const Portfolio& p, const RedemptionPortfolio& q, const BondRiskSpec& spec) {
  const std::size_t n = p.size();
  if (spec.sector.size() != n || spec.bucket.size() != n || spec.modified_duration.size() != n ||
      spec.dts.size() != n)
    throw DomainError("bond risk spec does not cover every bond");
  const auto dw = weight_distortion(p, q).delta;
  std::map<int, double> w_by_sector;
  std::map<int, double> dts_by_sector;
  std::map<std::pair<int, int>, double> md_by_cell;
  for (std::size_t i = 0; i < n; ++i) {
    w_by_sector[spec.sector[i]] += dw[i];
    dts_by_sector[spec.sector[i]] += dw[i] * spec.dts[i];
    md_by_cell[{spec.sector[i], spec.bucket[i]}] += dw[i] * spec.modified_duration[i];
  }
  BondRisk r;
  for (const auto& [k, v] : w_by_sector) r.weight += std::abs(v);
  for (const auto& [k, v] : md_by_cell) r.duration += std::abs(v);
  for (const auto& [k, v] : dts_by_sector) r.dts += std::abs(v);
  return r;
}

PolicyEvaluation evaluate_policy(const Portfolio& p, const CostModel& cm, const RedemptionPortfolio& q, int h,
                                 const BondRiskSpec* bonds) {
  if (h < 1) throw DomainError("horizon must be at least one day");
  const auto s = build_schedule(p, q, 100000);
  const double v = s.source_value();
  if (!(v > 0.0)) throw DomainError("redemption portfolio has zero value");
  PolicyEvaluation e;
  e.tr = bonds ? tracking_risk_bond(p, q, *bonds).total() : tracking_risk_equity(p, q);
  const auto tc = transaction_cost(p, cm, s);
  e.tc = tc.total / v;
  e.tc_spread = tc.spread / v;
  e.tc_impact = tc.impact / v;
  e.ls = std::max(0.0, 1.0 - liquidation_ratio(s, h));
  return e;
}

namespace {

// Optimization in value space: y_i = q_i P_i / R, sum y = 1, 0 <= y <= u.
struct Problem {
  const Portfolio& p;
  const CostModel& cm;
  double redemption;
  double tr_max;
  double ls_max;
  std::size_t n;
  Eigen::VectorXd w;
  Eigen::VectorXd upper;
  Eigen::VectorXd reach;     // value sellable within the horizon
  Eigen::MatrixXd quad;      // k^2 * Sigma
  double cost_scale = 1.0;

  bool tr_active() const { return std::isfinite(tr_max); }
  bool ls_active() const { return ls_max < 1.0; }

  double tr2(const Eigen::VectorXd& y) const {
    const Eigen::VectorXd d = w - y;
    return std::max(0.0, d.dot(quad * d));
  }

  double sold(const Eigen::VectorXd& y) const {
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) a += std::min(y(i), reach(i));
    return a;
  }

  double c_tr(const Eigen::VectorXd& y) const { return tr2(y) / (tr_max * tr_max) - 1.0; }
  double c_ls(const Eigen::VectorXd& y) const { return (1.0 - ls_max) - sold(y); }

  bool feasible(const Eigen::VectorXd& y) const {
    if (tr_active() && std::sqrt(tr2(y)) > tr_max * (1.0 + 1e-9)) return false;
    if (ls_active() && c_ls(y) > 1e-12) return false;
    return true;
  }

  double cost(const Eigen::VectorXd& y, Eigen::VectorXd* grad) const {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = p.securities[i];
      const double shares = std::max(0.0, y(i)) * redemption / s.price;
      double g = s.spread;
      if (shares > 0.0) {
        const double lim = s.daily_limit;
        double full = 0.0;
        double rest = shares;
        if (lim > 0.0) {
          full = std::floor(shares / lim);
          rest = std::max(0.0, shares - full * lim);
        }
        const double v = s.daily_volume;
        total += full * lim * s.price * cm.unit_cost(s, lim / v) + rest * s.price * cm.unit_cost(s, rest / v);
        g = cm.marginal_cost(s, rest / v);
      }
      if (grad) (*grad)(static_cast<Eigen::Index>(i)) = g / cost_scale;
    }
    return total / redemption / cost_scale;
  }

  Eigen::VectorXd project(const Eigen::VectorXd& z) const {
    auto total = [&](double t) { return (z.array() - t).max(0.0).min(upper.array()).sum(); };
    double lo = z.minCoeff() - upper.maxCoeff() - 1.0;
    double hi = z.maxCoeff();
    for (int k = 0; k < 200 && hi - lo > 1e-16; ++k) {
      const double mid = 0.5 * (lo + hi);
      (total(mid) > 1.0 ? lo : hi) = mid;
    }
    return (z.array() - 0.5 * (lo + hi)).max(0.0).min(upper.array()).matrix();
  }

  Eigen::VectorXd max_liquidity_point() const {
    Eigen::VectorXd y = upper.cwiseMin(reach);
    const double left = 1.0 - y.sum();
    if (left > 0.0) {
      const Eigen::VectorXd room = upper - y;
      const double r = room.sum();
      if (r > 0.0) y += room * (left / r);
    }
    return project(y);
  }
};

struct Phase1 {
  Eigen::VectorXd y;
  double value;
};

// minimize max(TR/TR+ - 1, shortfall gap) by projected subgradient
Phase1 find_feasible(const Problem& pb, const Eigen::VectorXd& start) {
  auto score = [&](const Eigen::VectorXd& y, Eigen::VectorXd* g) {
    const double tr = std::sqrt(pb.tr2(y));
    const double a = pb.tr_active() ? tr / pb.tr_max - 1.0 : -kUnbounded;
    const double b = pb.ls_active() ? pb.c_ls(y) : -kUnbounded;
    if (g) {
      if (a >= b) {
        *g = tr > 0.0 ? Eigen::VectorXd(-(pb.quad * (pb.w - y)) / (tr * pb.tr_max)) : Eigen::VectorXd::Zero(y.size());
      } else {
        g->resize(y.size());
        for (Eigen::Index i = 0; i < y.size(); ++i) (*g)(i) = y(i) < pb.reach(i) ? -1.0 : 0.0;
      }
    }
    return std::max(a, b);
  };
  Phase1 best{start, score(start, nullptr)};
  Eigen::VectorXd y = start;
  Eigen::VectorXd g(y.size());
  for (int k = 1; k <= 20000 && best.value > -1e-6; ++k) {
    score(y, &g);
    const double gn = g.norm();
    if (gn == 0.0) break;
    y = pb.project(y - (0.05 / std::sqrt(static_cast<double>(k))) * g / gn);
    const double v = score(y, nullptr);
    if (v < best.value) best = {y, v};
  }
  return best;
}

Eigen::VectorXd augmented_lagrangian(const Problem& pb, Eigen::VectorXd y, const OptimizeOptions& opt) {
  double mu_tr = 0.0;
  double mu_ls = 0.0;
  double rho = 10.0;
  auto lagrangian = [&](const Eigen::VectorXd& x, Eigen::VectorXd* g) {
    double val = pb.cost(x, g);
    if (pb.tr_active()) {
      const double t = std::max(0.0, pb.c_tr(x) + mu_tr / rho);
      val += 0.5 * rho * t * t;
      if (g && t > 0.0) *g += rho * t * (-2.0 * (pb.quad * (pb.w - x)) / (pb.tr_max * pb.tr_max));
    }
    if (pb.ls_active()) {
      const double t = std::max(0.0, pb.c_ls(x) + mu_ls / rho);
      val += 0.5 * rho * t * t;
      if (g && t > 0.0)
        for (Eigen::Index i = 0; i < x.size(); ++i)
          if (x(i) < pb.reach(i)) (*g)(i) -= rho * t;
    }
    return val;
  };

  double prev_violation = kUnbounded;
  Eigen::VectorXd g(y.size());
  for (int outer = 0; outer < opt.outer_iterations; ++outer) {
    double step = 0.1;
    double val = lagrangian(y, &g);
    for (int inner = 0; inner < opt.inner_iterations; ++inner) {
      bool moved = false;
      for (int bt = 0; bt < 50; ++bt) {
        const Eigen::VectorXd cand = pb.project(y - step * g);
        const double cv = lagrangian(cand, nullptr);
        if (cv <= val - 1e-4 * g.dot(y - cand)) {
          moved = (cand - y).norm() > 1e-14;
          y = cand;
          val = lagrangian(y, &g);
          step = std::min(step * 2.0, 1.0);
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    const double v_tr = pb.tr_active() ? std::max(0.0, pb.c_tr(y)) : 0.0;
    const double v_ls = pb.ls_active() ? std::max(0.0, pb.c_ls(y)) : 0.0;
    if (pb.tr_active()) mu_tr = std::max(0.0, mu_tr + rho * pb.c_tr(y));
    if (pb.ls_active()) mu_ls = std::max(0.0, mu_ls + rho * pb.c_ls(y));
    const double violation = std::max(v_tr, v_ls);
    if (violation < opt.tolerance && outer > 2) break;
    if (violation > 0.25 * prev_violation) rho = std::min(rho * 4.0, 1e9);
    prev_violation = violation;
  }
  return y;
}

Eigen::VectorXd repair(const Problem& pb, const Eigen::VectorXd& y, const Eigen::VectorXd& anchor) {
  if (pb.feasible(y)) return y;
  double lo = 0.0;
  double hi = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double mid = 0.5 * (lo + hi);
    (pb.feasible((1.0 - mid) * y + mid * anchor) ? hi : lo) = mid;
  }
  return (1.0 - hi) * y + hi * anchor;
}

RedemptionPortfolio to_shares(const Problem& pb, const Eigen::VectorXd& y) {
  RedemptionPortfolio q(pb.n);
  for (std::size_t i = 0; i < pb.n; ++i) {
    const auto& s = pb.p.securities[i];
    q[i] = std::clamp(y(static_cast<Eigen::Index>(i)) * pb.redemption / s.price, 0.0, s.shares);
  }
  return q;
}

}  // namespace

OptimizeResult optimize_policy(const Portfolio& p, const CostModel& cm, const RedemptionShock& shock, double tr_max,
                               double ls_max, int h, const OptimizeOptions& opt) {
  validate(p);
  validate(cm);
  if (h < 1) throw DomainError("horizon must be at least one day");
  if (!(tr_max >= 0.0)) throw DomainError("tracking-risk limit must be non-negative");
  if (!(ls_max >= 0.0 && ls_max <= 1.0)) throw DomainError("shortfall limit must lie in [0,1]");
  if (!(shock.amount > 0.0)) throw DomainError("redemption shock must be positive");

  OptimizeResult res;
  const double total = tna(p);
  if (shock.amount >= total * (1.0 - 1e-12)) {
    res.status = OptimizeStatus::infeasible;
    res.binding = BindingConstraint::value;
    return res;
  }

  const std::size_t n = p.size();
  Problem pb{p, cm, shock.amount, tr_max, ls_max, n, {}, {}, {}, {}};
  pb.w = to_eigen(weights(p));
  pb.upper.resize(static_cast<Eigen::Index>(n));
  pb.reach.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = p.securities[i];
    pb.upper(static_cast<Eigen::Index>(i)) = s.shares * s.price / shock.amount;
    pb.reach(static_cast<Eigen::Index>(i)) = std::min(s.shares, h * s.daily_limit) * s.price / shock.amount;
  }
  const double k = shock.amount / (total - shock.amount);
  pb.quad = k * k * covariance(p);
  const double base = pb.cost(pb.w, nullptr);
  pb.cost_scale = base > 0.0 ? base : 1.0;

  auto finish = [&](const Eigen::VectorXd& y) {
    res.q = to_shares(pb, y);
    res.evaluation = evaluate_policy(p, cm, res.q, h);
    return res;
  };

  const bool shortfall_possible = !pb.ls_active() || pb.upper.cwiseMin(pb.reach).sum() >= 1.0 - ls_max - 1e-12;
  if (tr_max == 0.0) {
    pb.tr_max = kUnbounded;
    if (pb.ls_active() && pb.c_ls(pb.w) > 1e-12) {
      res.status = OptimizeStatus::infeasible;
      res.binding = shortfall_possible ? BindingConstraint::tracking_and_shortfall : BindingConstraint::shortfall;
      return res;
    }
    return finish(pb.w);
  }
  if (!shortfall_possible) {
    res.status = OptimizeStatus::infeasible;
    res.binding = BindingConstraint::shortfall;
    return res;
  }

  Eigen::VectorXd anchor = pb.w;
  if (!pb.feasible(anchor)) {
    const auto ph = find_feasible(pb, pb.w);
    const auto ph2 = find_feasible(pb, pb.max_liquidity_point());
    const auto& best = ph.value <= ph2.value ? ph : ph2;
    if (!pb.feasible(best.y)) {
      res.status = OptimizeStatus::infeasible;
      res.binding = BindingConstraint::tracking_and_shortfall;
      return res;
    }
    anchor = best.y;
  }

  std::vector<Eigen::VectorXd> starts{anchor, pb.w, pb.max_liquidity_point(),
                                      pb.project(0.5 * (anchor + pb.max_liquidity_point()))};
  Eigen::VectorXd inv_cost(static_cast<Eigen::Index>(n));
  pb.cost(pb.w, &inv_cost);
  inv_cost = pb.upper.cwiseQuotient(inv_cost.cwiseMax(1e-12));
  starts.push_back(pb.project(inv_cost / inv_cost.sum()));

  Eigen::VectorXd best = anchor;
  double best_cost = pb.cost(anchor, nullptr);
  if (pb.feasible(pb.w) && pb.cost(pb.w, nullptr) < best_cost) {
    best = pb.w;
    best_cost = pb.cost(pb.w, nullptr);
  }
  for (const auto& s : starts) {
    const auto y = repair(pb, augmented_lagrangian(pb, s, opt), anchor);
    const double c = pb.cost(y, nullptr);
    if (pb.feasible(y) && c < best_cost) {
      best = y;
      best_cost = c;
    }
  }
  return finish(best);
}

}  // namespace lst
