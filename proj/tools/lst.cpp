#include "lst/cash_buffer.hpp"
#include "lst/fixtures.hpp"
#include "lst/goldens.hpp"
#include "lst/hqla.hpp"
#include "lst/io.hpp"
#include "lst/liquidation.hpp"
#include "lst/optimizer.hpp"
#include "lst/rcr.hpp"
#include "lst/reverse_stress.hpp"
#include "lst/swing.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { ok = 0, infeasible = 1, invalid = 2 };

class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("invalid JSON config: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    walk(j, {}, items);
    return items;
  }

 private:
  static void walk(const json& j, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object()) {
        auto p = parents;
        p.push_back(key);
        walk(val, p, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (val.is_array()) {
        for (const auto& e : val) item.inputs.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      } else if (val.is_boolean()) {
        item.inputs = {val.get<bool>() ? "true" : "false"};
      } else {
        item.inputs = {val.is_string() ? val.get<std::string>() : val.dump()};
      }
      items.push_back(std::move(item));
    }
  }
};

struct Output {
  std::string path;
  bool raw = false;
  std::string format = "csv";

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw lst::DomainError(fmt::format("cannot write '{}'", path));
    out << text;
  }

  std::string pct(double x) const { return raw ? lst::io::raw(x) : lst::io::pct2(x); }
  std::string num(double x) const { return raw ? lst::io::raw(x) : lst::io::fmt6(x); }
};

std::string csv_to_json(const std::string& csv) {
  std::istringstream is(csv);
  const auto rows = lst::io::read_csv(is);
  json arr = json::array();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    json obj;
    for (std::size_t c = 0; c < rows[0].size() && c < rows[r].size(); ++c) obj[rows[0][c]] = rows[r][c];
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

void write(const Output& out, const std::string& csv) { out.emit(out.format == "json" ? csv_to_json(csv) : csv); }

struct PortfolioArgs {
  std::string portfolio;
  std::string corr;
  bool reference = false;

  void add(CLI::App* app) {
    app->add_option("--portfolio", portfolio, "portfolio CSV or JSON")->check(CLI::ExistingFile);
    app->add_option("--corr", corr, "correlation matrix CSV")->check(CLI::ExistingFile);
    app->add_flag("--reference", reference, "use the built-in seven-asset fund");
  }

  lst::Portfolio load() const {
    lst::Portfolio p;
    if (reference) {
      p = lst::fixtures::reference_fund_market();
    } else {
      if (portfolio.empty()) throw lst::DomainError("--portfolio or --reference is required");
      p = lst::io::read_portfolio(portfolio);
    }
    if (!corr.empty()) p.correlation = lst::io::read_matrix_csv(corr);
    lst::validate(p);
    return p;
  }
};

double fraction(const std::string& s) {
  if (s == "inf" || s == "none") return lst::kUnbounded;
  return lst::io::parse_fraction(s);
}

std::vector<int> parse_days(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<int>(lst::io::parse_number(part)));
      continue;
    }
    const int a = static_cast<int>(lst::io::parse_number(part.substr(0, dots)));
    const int b = static_cast<int>(lst::io::parse_number(part.substr(dots + 2)));
    for (int d = a; d <= b; ++d) out.push_back(d);
  }
  if (out.empty()) throw lst::DomainError("empty day list");
  return out;
}

std::vector<double> parse_fractions(const std::vector<std::string>& v) {
  std::vector<double> out;
  for (const auto& s : v) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(lst::io::parse_fraction(part));
  }
  return out;
}

std::string days_str(const lst::Days& d) { return d.is_finite() ? std::to_string(d.value()) : "inf"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lst: liquidity stress testing for investment funds"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON scenario file; command-line flags take precedence");
  app.require_subcommand(1);
  Output out;
  app.add_flag("--raw", out.raw, "full-precision fractions instead of rounded percentages");
  app.add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out.path, "output file (default stdout)");

  // rcr
  auto* rcr = app.add_subcommand("rcr", "redemption coverage ratio by time to liquidation");
  PortfolioArgs rcr_pf;
  rcr_pf.add(rcr);
  std::string rcr_shock = "0.20";
  std::string rcr_policy = "prorata";
  int rcr_tau = 1;
  int rcr_horizon = 0;
  int rcr_max_days = lst::kDefaultMaxDays;
  std::string rcr_schedule;
  std::vector<std::string> rcr_ttl;
  rcr->add_option("--shock", rcr_shock, "redemption rate");
  rcr->add_option("--policy", rcr_policy)->check(CLI::IsMember({"prorata", "optimal", "waterfall"}));
  rcr->add_option("--tau", rcr_tau, "horizon for the optimal pro-rata portfolio");
  rcr->add_option("--horizon", rcr_horizon, "number of days reported (0 = whole schedule)");
  rcr->add_option("--max-days", rcr_max_days);
  rcr->add_option("--schedule-out", rcr_schedule, "write the day-by-day schedule CSV");
  rcr->add_option("--ttl", rcr_ttl, "coverage thresholds for time to liquidity");

  // hqla
  auto* hq = app.add_subcommand("hqla", "redemption coverage ratio by HQLA buckets");
  std::string hq_class;
  std::string hq_rating = "aaa";
  double hq_lambda = 0.05;
  double hq_eta = 0.0625;
  double hq_mdd = 0.5;
  lst::hqla::SpecificRiskParams hq_sf{1.0, 0.01, 0.10, 0.25, 0.80};
  std::vector<double> hq_tau{1, 5, 10, 20, 60};
  std::vector<double> hq_tna{1.0};
  std::vector<double> hq_h{0.01};
  std::string hq_rate = "0.40";
  bool hq_conservative = false;
  hq->add_option("--class", hq_class, "static lookup: asset class");
  hq->add_option("--rating", hq_rating, "static lookup: rating");
  hq->add_option("--lambda", hq_lambda);
  hq->add_option("--eta-dd", hq_eta);
  hq->add_option("--mdd", hq_mdd);
  hq->add_option("--tna-star", hq_sf.tna_star);
  hq->add_option("--h-star", hq_sf.h_star);
  hq->add_option("--xi-size", hq_sf.xi_size);
  hq->add_option("--xi-conc", hq_sf.xi_conc);
  hq->add_option("--sf-cap", hq_sf.sf_cap);
  hq->add_option("--tau", hq_tau)->delimiter(',');
  hq->add_option("--tna", hq_tna)->delimiter(',');
  hq->add_option("--herfindahl", hq_h)->delimiter(',');
  hq->add_option("--shock", hq_rate);
  hq->add_flag("--conservative", hq_conservative, "drawdown over the full horizon");

  // rst
  auto* rst = app.add_subcommand("rst", "reverse stress testing");
  PortfolioArgs rst_pf;
  rst_pf.add(rst);
  std::string rst_mode = "liability";
  std::vector<std::string> rst_alpha;
  std::vector<std::string> rst_floor{"0.25"};
  std::string rst_tau = "1..5";
  std::string rst_rate = "0.30";
  rst->add_option("--mode", rst_mode)->check(CLI::IsMember({"liability", "asset"}));
  rst->add_option("--alpha", rst_alpha, "saleable proportions, or a CSV file with one value per line");
  rst->add_option("--floor", rst_floor, "coverage floors");
  rst->add_option("--tau", rst_tau, "horizons, e.g. 1..5");
  rst->add_option("--rate-star", rst_rate, "standard redemption rate (asset mode)");

  // optimize
  auto* opt = app.add_subcommand("optimize", "mixed liquidation portfolio");
  PortfolioArgs opt_pf;
  opt_pf.add(opt);
  std::string opt_shock = "0.10";
  std::string opt_tr = "20bp";
  std::string opt_ls = "0.10";
  int opt_h = 1;
  std::string opt_regime = "sqrl";
  lst::CostModel cm;
  opt->add_option("--shock", opt_shock);
  opt->add_option("--tr-max", opt_tr, "tracking-risk limit (inf for none)");
  opt->add_option("--ls-max", opt_ls);
  opt->add_option("--horizon", opt_h, "days allowed for the shortfall constraint");
  opt->add_option("--regime", opt_regime)->check(CLI::IsMember({"sqrt", "sqrl"}));
  opt->add_option("--impact", cm.impact_coeff);
  opt->add_option("--kink", cm.kink);
  opt->add_option("--xplus", cm.max_participation);
  opt->add_option("--days-per-year", cm.days_per_year);

  // buffer
  auto* buf = app.add_subcommand("buffer", "optimal cash buffer");
  lst::buffer::MarketParams bm;
  lst::buffer::CostParams bc;
  std::string b_spread = "20bp";
  std::string b_cash = "1bp";
  double b_sigma = 0.20;
  double b_days = 260.0;
  std::string b_method = "exact";
  std::string b_curve;
  double b_step = 0.01;
  buf->add_option("--mu-asset", bm.mu_asset);
  buf->add_option("--mu-cash", bm.mu_cash);
  buf->add_option("--sigma-asset", bm.sigma_asset);
  buf->add_option("--sigma-cash", bm.sigma_cash);
  buf->add_option("--rho", bm.rho);
  buf->add_option("--lambda", bm.lambda);
  buf->add_option("--spread", b_spread);
  buf->add_option("--cash-cost", b_cash);
  buf->add_option("--impact", bc.impact);
  buf->add_option("--sigma", b_sigma, "annual volatility of the cost function");
  buf->add_option("--days-per-year", b_days);
  buf->add_option("--xplus", bc.trading_limit);
  buf->add_option("--eta", bc.eta);
  buf->add_option("--method", b_method)->check(CLI::IsMember({"exact", "approximate", "published"}));
  buf->add_option("--curve-out", b_curve, "write w, E[LG], NBC and break-even premium curves");
  buf->add_option("--curve-step", b_step);

  // swing
  auto* sw = app.add_subcommand("swing", "NAV dilution, swing pricing and levies");
  double s_nav = 100.0;
  double s_units = 10.0;
  double s_subs = 0.0;
  double s_reds = 0.0;
  double s_flow = 0.0;
  double s_tc = 0.0;
  double s_ret = 0.0;
  std::string s_mode = "full";
  std::string s_adj = "cost";
  std::string s_adl = "netted";
  lst::swing::Config scfg;
  auto* flow_opt = sw->add_option("--flow", s_flow, "net flow in units (sign gives direction)");
  sw->add_option("--nav", s_nav);
  sw->add_option("--units", s_units);
  sw->add_option("--subs", s_subs)->excludes(flow_opt);
  sw->add_option("--reds", s_reds)->excludes(flow_opt);
  sw->add_option("--tc", s_tc);
  sw->add_option("--return", s_ret);
  sw->add_option("--mode", s_mode)->check(CLI::IsMember({"none", "full", "partial", "dual", "dynamic"}));
  sw->add_option("--adjustment", s_adj)->check(CLI::IsMember({"cost", "factor"}));
  sw->add_option("--threshold", scfg.threshold);
  sw->add_option("--factor", scfg.factor);
  sw->add_option("--product", scfg.product);
  sw->add_option("--gamma", scfg.gamma);
  sw->add_option("--adl", s_adl)->check(CLI::IsMember({"netted", "gross", "pro_rata"}));

  // gate
  auto* gate = app.add_subcommand("gate", "redemption gate queue");
  std::string g_requests;
  std::string g_cap = "0.02";
  gate->add_option("--requests", g_requests, "CSV day,investor,rate")->required()->check(CLI::ExistingFile);
  gate->add_option("--cap", g_cap);

  // goldens
  auto* gold = app.add_subcommand("goldens", "re-derive fixture tables and diff against expected CSVs");
  std::string g_dir = "tests/golden";
  bool g_update = false;
  gold->add_option("--dir", g_dir);
  gold->add_flag("--update", g_update, "rewrite the expected files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return invalid;
  }

  try {
    if (*rcr) {
      const auto p = rcr_pf.load();
      const auto shock = lst::make_shock(p, fraction(rcr_shock));
      lst::RedemptionPortfolio q;
      int horizon = rcr_horizon;
      if (rcr_policy == "prorata") q = lst::pro_rata_portfolio(p, shock.rate);
      if (rcr_policy == "waterfall") q = lst::waterfall_portfolio(p);
      if (rcr_policy == "optimal") {
        q = lst::optimal_pro_rata(p, rcr_tau).q;
        if (horizon == 0) horizon = rcr_tau;
      }
      const auto s = lst::build_schedule(p, q, rcr_max_days);
      const auto rep = lst::rcr_report(shock, s, horizon);
      std::string csv = "day,lr,amount,rcr,ls\n";
      for (const auto& r : rep.rows)
        csv += fmt::format("{},{},{},{},{}\n", r.day, out.pct(r.lr), out.num(r.amount), out.pct(r.rcr), out.pct(r.ls));
      for (const auto& t : parse_fractions(rcr_ttl))
        csv += fmt::format("ttl,{},{},,\n", out.pct(t), days_str(lst::time_to_liquidity(rep, t)));
      write(out, csv);
      if (!rcr_schedule.empty()) {
        std::ofstream so(rcr_schedule);
        if (!so) throw lst::DomainError(fmt::format("cannot write '{}'", rcr_schedule));
        lst::write_schedule_csv(so, p, s);
      }
      return ok;
    }

    if (*hq) {
      if (!hq_class.empty()) {
        const auto c = lst::hqla::parse_asset_class(hq_class);
        const double v = lst::hqla::ccf_static(c, lst::hqla::parse_rating(hq_rating));
        write(out, fmt::format("class,rating,ccf\n{},{},{}\n", hq_class, hq_rating, out.pct(v)));
        return ok;
      }
      const lst::hqla::Bucket b{"bucket", std::nullopt, hq_lambda, hq_eta, hq_mdd};
      const double rate = fraction(hq_rate);
      const auto rule = hq_conservative ? lst::hqla::DrawdownRule::full_horizon : lst::hqla::DrawdownRule::half_horizon;
      std::string csv = "tau,tna,herfindahl,ccf,rcr,ls\n";
      for (double tau : hq_tau)
        for (double h : hq_h)
          for (double size : hq_tna) {
            const double ccf = lst::hqla::ccf_parametric(b, hq_sf, tau, size, h, rule);
            const auto cov = lst::hqla::rcr_hqla({{1.0, ccf}}, rate);
            csv += fmt::format("{},{},{},{},{},{}\n", tau, size, h, out.pct(ccf),
                               out.raw ? lst::io::raw(cov.rcr) : fmt::format("{:.2f}", cov.rcr), out.pct(cov.ls));
          }
      write(out, csv);
      return ok;
    }

    if (*rst) {
      const auto p = rst_pf.load();
      const auto floors = parse_fractions(rst_floor);
      const auto days = parse_days(rst_tau);
      bool all_ok = true;
      std::string csv;
      if (rst_mode == "liability") {
        std::vector<double> alpha;
        if (rst_alpha.size() == 1 && fs::exists(rst_alpha.front())) {
          for (const auto& row : lst::io::read_csv_file(rst_alpha.front()))
            for (const auto& c : row) alpha.push_back(lst::io::parse_fraction(c));
        } else {
          alpha = parse_fractions(rst_alpha);
        }
        csv = "tau,floor,amount,rate,feasible\n";
        for (int tau : days)
          for (double fl : floors) {
            const auto r = lst::liability_rst(p, alpha, fl, tau);
            all_ok = all_ok && r.feasible;
            csv += fmt::format("{},{},{},{},{}\n", tau, out.pct(fl), out.num(r.amount), out.pct(r.rate),
                               r.feasible ? "true" : "false");
          }
      } else {
        csv = "tau,floor,status,multiplier\n";
        const double rate = fraction(rst_rate);
        for (int tau : days)
          for (double fl : floors) {
            const auto r = lst::asset_rst(p, rate, fl, tau);
            const char* status = r.status == lst::AssetRstStatus::solved ? "solved"
                                 : r.status == lst::AssetRstStatus::breached_at_full_volume ? "breached_at_full_volume"
                                                                                              : "never_breached";
            all_ok = all_ok && r.status == lst::AssetRstStatus::solved;
            csv += fmt::format("{},{},{},{}\n", tau, out.pct(fl), status,
                               r.status == lst::AssetRstStatus::solved ? out.pct(r.multiplier) : "");
          }
      }
      write(out, csv);
      return all_ok ? ok : infeasible;
    }

    if (*opt) {
      const auto p = opt_pf.load();
      cm.regime = opt_regime == "sqrt" ? lst::ImpactRegime::square_root : lst::ImpactRegime::square_root_linear;
      const auto shock = lst::make_shock(p, fraction(opt_shock));
      const auto r = lst::optimize_policy(p, cm, shock, fraction(opt_tr), fraction(opt_ls), opt_h);
      if (r.status == lst::OptimizeStatus::infeasible) {
        const char* b = r.binding == lst::BindingConstraint::value       ? "value"
                        : r.binding == lst::BindingConstraint::shortfall ? "shortfall"
                                                                         : "tracking_and_shortfall";
        std::cerr << json{{"error", "infeasible"}, {"binding", b}}.dump() << '\n';
        return infeasible;
      }
      std::string csv = "field,value\n";
      for (std::size_t i = 0; i < p.size(); ++i) csv += fmt::format("{},{}\n", p.securities[i].id, out.num(r.q[i]));
      const auto& e = r.evaluation;
      csv += fmt::format("tr,{}\ntc,{}\ntc_spread,{}\ntc_impact,{}\nls,{}\n", out.pct(e.tr), out.pct(e.tc),
                         out.pct(e.tc_spread), out.pct(e.tc_impact), out.pct(e.ls));
      write(out, csv);
      return ok;
    }

    if (*buf) {
      bc.spread = fraction(b_spread);
      bc.cash_cost = fraction(b_cash);
      bc.sigma = lst::buffer::CostParams::daily_vol(b_sigma, b_days);
      const auto method = b_method == "exact"         ? lst::buffer::LgMethod::exact
                          : b_method == "approximate" ? lst::buffer::LgMethod::approximate
                                                      : lst::buffer::LgMethod::published;
      const auto best = lst::buffer::optimal_cash_buffer(bm, bc, method);
      write(out, fmt::format("field,value\nw_star,{}\nnbc,{}\n", out.pct(best.w), out.num(best.nbc)));
      if (!b_curve.empty()) {
        std::ofstream co(b_curve);
        if (!co) throw lst::DomainError(fmt::format("cannot write '{}'", b_curve));
        co << "w,expected_lg,nbc,break_even\n";
        const int n = static_cast<int>(std::round(1.0 / b_step));
        for (int i = 0; i <= n; ++i) {
          const double w = std::min(1.0, i * b_step);
          co << lst::io::fmt6(w) << ',' << lst::io::fmt6(lst::buffer::expected_lg(bc, w, method)) << ','
             << lst::io::fmt6(lst::buffer::net_buffer_cost(bm, bc, w, method)) << ','
             << lst::io::fmt6(lst::buffer::break_even_premium(bm, bc, w, method)) << '\n';
        }
      }
      return ok;
    }

    if (*sw) {
      using namespace lst::swing;
      if (s_flow > 0.0) s_subs = s_flow;
      if (s_flow < 0.0) s_reds = -s_flow;
      const FundState f{s_nav, s_units};
      const FlowEvent e{s_subs, s_reds, s_ret, s_tc};
      scfg.mode = s_mode == "none"      ? Mode::none
                  : s_mode == "full"    ? Mode::full
                  : s_mode == "partial" ? Mode::partial
                  : s_mode == "dual"    ? Mode::dual
                                        : Mode::dynamic;
      scfg.adjustment = s_adj == "cost" ? Adjustment::cost : Adjustment::factor;
      const auto step = nav_step(f, e);
      const auto r = swing_nav(f, e, scfg);
      const auto rule = s_adl == "netted" ? AdlRule::netted : s_adl == "gross" ? AdlRule::gross : AdlRule::pro_rata;
      std::string csv = "field,value\n";
      csv += fmt::format("nav_gross,{}\nnav_diluted,{}\ndilution,{}\nactivated,{}\n", out.num(r.nav_gross),
                         out.num(step.next.nav), out.num(step.dilution), r.activated ? "true" : "false");
      if (r.nav_swing) csv += fmt::format("nav_swing,{}\n", out.num(*r.nav_swing));
      if (r.nav_ask) csv += fmt::format("nav_ask,{}\n", out.num(*r.nav_ask));
      if (r.nav_bid) csv += fmt::format("nav_bid,{}\n", out.num(*r.nav_bid));
      if (s_subs + s_reds > 0.0) {
        const auto adl = adl_fees(s_subs, s_reds, s_tc, rule);
        if (adl.degenerate)
          csv += "adl,degenerate\n";
        else
          csv += fmt::format("adl_entry,{}\nadl_exit,{}\n", out.num(adl.entry), out.num(adl.exit));
      }
      write(out, csv);
      return ok;
    }

    if (*gate) {
      std::vector<lst::swing::GateRequest> req;
      const auto rows = lst::io::read_csv_file(g_requests);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == 0 && rows[r].size() == 3 && rows[r][0] == "day") continue;
        if (rows[r].size() != 3) throw lst::DomainError(fmt::format("request row {} needs day,investor,rate", r + 1));
        req.push_back({static_cast<int>(lst::io::parse_number(rows[r][0])), rows[r][1],
                       lst::io::parse_fraction(rows[r][2])});
      }
      std::string csv = "day,investor,rate,share\n";
      for (const auto& f : lst::swing::gate_schedule(req, fraction(g_cap)))
        csv += fmt::format("{},{},{},{}\n", f.day, f.investor, out.pct(f.rate), out.pct(f.share_of_request));
      write(out, csv);
      return ok;
    }

    if (*gold) {
      int mismatches = 0;
      for (const auto& t : lst::golden_tables()) {
        const fs::path path = fs::path(g_dir) / (t.name + ".csv");
        if (g_update) {
          std::ofstream o(path);
          if (!o) throw lst::DomainError(fmt::format("cannot write '{}'", path.string()));
          o << t.csv;
          std::cout << "wrote " << path.string() << '\n';
          continue;
        }
        std::ifstream in(path);
        if (!in) {
          std::cout << "missing " << path.string() << '\n';
          ++mismatches;
          continue;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        std::istringstream want(ss.str());
        std::istringstream got(t.csv);
        std::string a;
        std::string b;
        int line = 0;
        bool same = true;
        while (true) {
          const bool ha = static_cast<bool>(std::getline(want, a));
          const bool hb = static_cast<bool>(std::getline(got, b));
          ++line;
          if (!ha && !hb) break;
          if (!ha || !hb || a != b) {
            std::cout << fmt::format("{}:{}: expected '{}' got '{}'\n", t.name, line, ha ? a : "", hb ? b : "");
            same = false;
          }
        }
        if (!same) ++mismatches;
        std::cout << fmt::format("{} {}\n", same ? "ok  " : "DIFF", t.name);
      }
      return mismatches == 0 ? ok : infeasible;
    }
  } catch (const lst::DomainError& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return invalid;
  }
  return ok;
}
