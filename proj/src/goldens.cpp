#include "lst/goldens.hpp"

#include "lst/cash_buffer.hpp"
#include "lst/fixtures.hpp"
#include "lst/hqla.hpp"
#include "lst/io.hpp"
#include "lst/liquidation.hpp"
#include "lst/optimizer.hpp"
#include "lst/rcr.hpp"
#include "lst/reverse_stress.hpp"
#include "lst/swing.hpp"

#include <fmt/format.h>

#include <array>
#include <sstream>

namespace lst {

namespace {

std::string mn(double x) { return fmt::format("{:.3f}", x / 1e6); }
std::string bp(double x) { return fmt::format("{:.1f}", x * 1e4); }

std::string rcr_rows(const RcrReport& r) {
  std::string out;
  for (const auto& row : r.rows)
    out += fmt::format("{},{},{},{},{}\n", row.day, io::pct2(row.lr), mn(row.amount), io::pct2(row.rcr), io::pct2(row.ls));
  return out;
}

std::string schedule_table(const Portfolio& p, const LiquidationSchedule& s) {
  std::ostringstream os;
  os << "day";
  for (const auto& sec : p.securities) os << ',' << sec.id;
  os << '\n';
  for (int h = 1; h <= s.horizon(); ++h) {
    os << h;
    for (double x : s.sold[h - 1]) os << ',' << io::fmt6(round_shares(x));
    os << '\n';
  }
  os << "total";
  for (double x : s.cumulative(s.horizon())) os << ',' << io::fmt6(round_shares(x));
  os << '\n';
  return os.str();
}

std::string weight_header(const Portfolio& p) {
  std::string out = "day";
  for (const auto& sec : p.securities) out += "," + sec.id;
  return out + "\n";
}

std::string sold_weights(const Portfolio& p, const LiquidationSchedule& s, int days) {
  std::string out = weight_header(p);
  for (int h = 1; h <= days; ++h) {
    out += std::to_string(h);
    for (double w : weights_of(p, s.cumulative(h))) out += "," + io::pct2(w);
    out += "\n";
  }
  return out;
}

std::string residual_weights(const Portfolio& p, const LiquidationSchedule& s, int days) {
  std::string out = weight_header(p);
  const auto omega = p.shares();
  for (int h = 0; h <= days; ++h) {
    auto left = omega;
    const auto c = s.cumulative(h);
    for (std::size_t i = 0; i < left.size(); ++i) left[i] -= c[i];
    out += std::to_string(h);
    for (double w : weights_of(p, left)) out += "," + io::pct2(w);
    out += "\n";
  }
  return out;
}

}  // namespace

std::vector<GoldenTable> golden_tables() {
  std::vector<GoldenTable> t;
  const auto fund = fixtures::reference_fund();
  const auto shock = make_shock(fund, 0.20);

  {
    const auto q = pro_rata_portfolio(fund, 0.20);
    const auto s = build_schedule(fund, q);
    t.push_back({"pro_rata_rcr", "day,lr,amount_mn,rcr,ls\n" + rcr_rows(rcr_report(shock, s, 6))});
    t.push_back({"pro_rata_schedule", schedule_table(fund, s)});
    t.push_back({"pro_rata_sold_weights", sold_weights(fund, s, 6)});
    t.push_back({"pro_rata_residual_weights", residual_weights(fund, s, 6)});
  }
  {
    std::string out = "tau,phi,day,lr,amount_mn,rcr,ls\n";
    for (int tau = 1; tau <= 5; ++tau) {
      const auto opt = optimal_pro_rata(fund, tau);
      for (const auto& row : rcr_report(fund, shock, opt.q, tau).rows)
        out += fmt::format("{},{},{},{},{},{},{}\n", tau, io::pct2(opt.phi), row.day, io::pct2(row.lr), mn(row.amount),
                           io::pct2(row.rcr), io::pct2(row.ls));
    }
    t.push_back({"optimal_pro_rata_rcr", out});
    std::string q1 = weight_header(fund);
    q1 += "1";
    for (double x : optimal_pro_rata(fund, 1).q) q1 += "," + io::fmt6(round_shares(x));
    t.push_back({"optimal_pro_rata_portfolio", q1 + "\n"});
  }
  {
    const auto s = build_schedule(fund, waterfall_portfolio(fund));
    t.push_back({"waterfall_rcr", "day,lr,amount_mn,rcr,ls\n" + rcr_rows(rcr_report(shock, s, 6))});
    t.push_back({"waterfall_schedule", schedule_table(fund, s)});
    t.push_back({"waterfall_sold_weights", sold_weights(fund, s, 6)});
    t.push_back({"waterfall_residual_weights", residual_weights(fund, s, 6)});
  }
  {
    std::string out = "q7_limit,probability,days\n";
    for (auto p : {fund, fixtures::reference_fund_illiquid()}) {
      const auto s = build_schedule(p, p.shares(), 1000);
      for (double prob : {0.95, 0.99, 1.0})
        out += fmt::format("{},{},{}\n", p.securities.back().daily_limit, io::pct2(prob),
                           liquidation_time(s, prob).value());
    }
    const auto ill = fixtures::reference_fund_illiquid();
    out += "w_star,h_star,illiquid\n";
    for (double ws : {0.01, 0.005}) {
      const auto r = illiquid_assets(ill, ws);
      out += fmt::format("{},{},{}\n", io::pct2(ws), r.h_star, io::pct2(r.fraction));
    }
    t.push_back({"liquidation_time", out});
  }
  {
    const std::vector<double> alpha{0.20, 0.30, 0.0, 0.15, 0.0, 0.0, 0.0};
    std::string out = "tau,floor,amount_mn,rate\n";
    for (int tau = 1; tau <= 5; ++tau)
      for (double floor : {0.25, 0.50, 0.75, 1.0}) {
        const auto r = liability_rst(fund, alpha, floor, tau);
        out += fmt::format("{},{},{:.1f},{:.1f}\n", tau, io::pct2(floor), r.amount / 1e6, 100.0 * r.rate);
      }
    t.push_back({"liability_rst", out});
  }
  {
    hqla::Bucket b{"equity", std::nullopt, 0.05, 0.0625, 0.5};
    hqla::SpecificRiskParams sf{1.0, 0.01, 0.10, 0.25, 0.80};
    std::string out = "tau,herfindahl,tna_bn,rcr\n";
    for (double tau : {1.0, 5.0, 10.0, 20.0, 60.0})
      for (double h : {0.01, 0.04})
        for (double size : {1.0, 5.0, 7.0, 10.0})
          out += fmt::format("{},{},{},{:.2f}\n", tau, h, size, hqla::ccf_parametric(b, sf, tau, size, h) / 0.40);
    t.push_back({"hqla_parametric", out});
    std::string st = "class,rating,ccf\n";
    for (auto c : {hqla::AssetClass::cash, hqla::AssetClass::sovereign, hqla::AssetClass::corporate,
                   hqla::AssetClass::securitization, hqla::AssetClass::equity})
      for (auto r : {hqla::Rating::aa_minus_to_aaa, hqla::Rating::a_minus_to_a_plus, hqla::Rating::bbb_minus_to_bbb_plus,
                     hqla::Rating::below_bbb_minus})
        st += fmt::format("{},{},{}\n", hqla::to_string(c), hqla::to_string(r), io::pct2(hqla::ccf_static(c, r)));
    t.push_back({"hqla_static", st});
  }
  {
    const auto mkt = fixtures::reference_fund_market();
    std::string out = "portfolio,tr_bp,tc_bp,tc_spread_bp,tc_impact_bp,ls\n";
    CostModel sqrl;
    CostModel sqrt_only;
    sqrt_only.regime = ImpactRegime::square_root;
    int k = 1;
    for (const auto& q : fixtures::mixing_candidates()) {
      const auto e = evaluate_policy(mkt, sqrl, q, 1);
      out += fmt::format("{},{},{},{},{},{}\n", k++, bp(e.tr), bp(e.tc), bp(e.tc_spread), bp(e.tc_impact), io::pct2(e.ls));
    }
    out += "portfolio,square_root_tc_bp\n";
    k = 1;
    for (const auto& q : fixtures::mixing_candidates())
      out += fmt::format("{},{}\n", k++, bp(evaluate_policy(mkt, sqrt_only, q, 1).tc));
    t.push_back({"mixing_evaluation", out});
  }
  {
    buffer::CostParams cp;
    cp.spread = 20e-4;
    cp.cash_cost = 1e-4;
    cp.impact = 0.4;
    cp.sigma = buffer::CostParams::daily_vol(0.20);
    buffer::MarketParams m;
    std::string out = "eta,published,exact\n";
    for (double eta : {0.5, 1.0, 2.0, 3.0}) {
      cp.eta = eta;
      out += fmt::format("{},{},{}\n", eta, io::pct2(optimal_cash_buffer(m, cp, buffer::LgMethod::published).w),
                         io::pct2(optimal_cash_buffer(m, cp, buffer::LgMethod::exact).w));
    }
    cp.eta = 1.0;
    out += "trading_limit,max_error_bp\n";
    for (double x : {0.05, 0.10, 0.16, 0.17, 0.25, 0.50, 1.0}) {
      cp.trading_limit = x;
      out += fmt::format("{},{:.3f}\n", io::pct2(x), buffer::max_approximation_error(cp) * 1e4);
    }
    t.push_back({"cash_buffer", out});
  }
  {
    using namespace swing;
    std::string out = "case,value\n";
    const FundState f{100.0, 10.0};
    out += fmt::format("no_flow,{}\n", io::fmt6(nav_step(f, {0, 0, 0.05, 0}).next.nav));
    out += fmt::format("subscription,{}\n", io::fmt6(nav_step(f, {5, 0, 0.05, 30}).next.nav));
    out += fmt::format("redemption,{}\n", io::fmt6(nav_step(f, {0, 5, 0.05, 30}).next.nav));
    Config full;
    out += fmt::format("swing_subscription,{}\n", io::fmt6(*swing_nav(f, {5, 0, 0.05, 30}, full).nav_swing));
    out += fmt::format("swing_redemption,{}\n", io::fmt6(*swing_nav(f, {0, 5, 0.05, 30}, full).nav_swing));
    for (double g : {1.0, 2.0}) {
      Config dual{Mode::dual, Adjustment::cost, 0, 0, 0, g};
      const auto r = swing_nav(f, {10, 5, 0.05, 30}, dual);
      out += fmt::format("dual_ask_gamma{},{}\n", g, io::fmt6(*r.nav_ask));
      out += fmt::format("dual_bid_gamma{},{}\n", g, io::fmt6(*r.nav_bid));
    }
    out += fmt::format("threshold_40bp,{}\n", io::pct2(dynamic_threshold(2e-4, 40e-4)));
    out += fmt::format("threshold_60bp,{}\n", io::pct2(dynamic_threshold(2e-4, 60e-4)));
    t.push_back({"swing", out});

    std::string g = "cap,day,investor,rate,share\n";
    const std::vector<GateRequest> req{{0, "A", 0.05}, {1, "B", 0.02}};
    for (double cap : {1.0, 0.02})
      for (const auto& fill : gate_schedule(req, cap))
        g += fmt::format("{},{},{},{},{}\n", io::pct2(cap), fill.day, fill.investor, io::pct2(fill.rate),
                         io::pct2(fill.share_of_request));
    t.push_back({"gate", g});
  }
  return t;
}

}  // namespace lst
