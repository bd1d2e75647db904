#include "lst/hqla.hpp"

#include "lst/core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>

namespace lst::hqla {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

// rows: rating band, columns: sovereign, corporate, securitization
constexpr std::array<std::array<double, 3>, 4> kBondCcf{{
    {1.00, 0.85, 0.85},
    {0.85, 0.50, 0.50},
    {0.50, 0.50, 0.00},
    {0.00, 0.00, 0.00},
}};

}  // namespace

AssetClass parse_asset_class(std::string_view s) {
  const auto v = lower(s);
  if (v == "cash") return AssetClass::cash;
  if (v == "sovereign") return AssetClass::sovereign;
  if (v == "corporate") return AssetClass::corporate;
  if (v == "securitization") return AssetClass::securitization;
  if (v == "equity" || v == "equities") return AssetClass::equity;
  throw DomainError(fmt::format("unknown asset class '{}'", s));
}

Rating parse_rating(std::string_view s) {
  const auto v = lower(s);
  if (v == "aa" || v == "aa-" || v == "aaa" || v == "aa+") return Rating::aa_minus_to_aaa;
  if (v == "a" || v == "a-" || v == "a+") return Rating::a_minus_to_a_plus;
  if (v == "bbb" || v == "bbb-" || v == "bbb+") return Rating::bbb_minus_to_bbb_plus;
  if (v == "hy" || v == "below-bbb-" || v == "bb" || v == "b" || v == "ccc") return Rating::below_bbb_minus;
  throw DomainError(fmt::format("unknown rating '{}'", s));
}

std::string_view to_string(AssetClass c) {
  switch (c) {
    case AssetClass::cash: return "cash";
    case AssetClass::sovereign: return "sovereign";
    case AssetClass::corporate: return "corporate";
    case AssetClass::securitization: return "securitization";
    case AssetClass::equity: return "equity";
  }
  return "";
}

std::string_view to_string(Rating r) {
  switch (r) {
    case Rating::aa_minus_to_aaa: return "AA- to AAA";
    case Rating::a_minus_to_a_plus: return "A- to A+";
    case Rating::bbb_minus_to_bbb_plus: return "BBB- to BBB+";
    case Rating::below_bbb_minus: return "below BBB-";
  }
  return "";
}

double ccf_static(AssetClass c, Rating r) {
  const auto row = static_cast<std::size_t>(r);
  switch (c) {
    case AssetClass::cash: return 1.0;
    case AssetClass::equity: return 0.5;
    case AssetClass::sovereign: return kBondCcf[row][0];
    case AssetClass::corporate: return kBondCcf[row][1];
    case AssetClass::securitization: return kBondCcf[row][2];
  }
  throw DomainError("unknown asset class");
}

double ccf_static(AssetClass c) {
  if (c == AssetClass::cash || c == AssetClass::equity) return ccf_static(c, Rating::aa_minus_to_aaa);
  throw DomainError(fmt::format("asset class '{}' needs a rating", to_string(c)));
}

void validate(const Bucket& b) {
  if (b.ccf_static && (*b.ccf_static < 0.0 || *b.ccf_static > 1.0))
    throw DomainError(fmt::format("bucket '{}': static CCF outside [0,1]", b.name));
  if (b.lambda < 0.0 || b.eta_dd < 0.0) throw DomainError(fmt::format("bucket '{}': negative intensity", b.name));
  if (b.mdd < 0.0 || b.mdd > 1.0) throw DomainError(fmt::format("bucket '{}': MDD outside [0,1]", b.name));
}

void validate(const SpecificRiskParams& sf) {
  if (!(sf.tna_star > 0.0) || !(sf.h_star > 0.0)) throw DomainError("specific-risk thresholds must be positive");
  if (sf.sf_cap < 0.0 || sf.sf_cap > 1.0) throw DomainError("specific-risk cap outside [0,1]");
  if (sf.xi_size < 0.0 || sf.xi_conc < 0.0) throw DomainError("specific-risk coefficients must be non-negative");
}

double liquidity_factor(const Bucket& b, double tau) { return std::min(1.0, b.lambda * tau); }

double drawdown_factor(const Bucket& b, double tau) { return std::min(b.mdd, b.eta_dd * std::sqrt(tau)); }

double specific_risk_factor(const SpecificRiskParams& sf, double tna, double herfindahl) {
  const double size = sf.xi_size * std::max(0.0, tna / sf.tna_star - 1.0);
  const double conc = sf.xi_conc * std::max(0.0, std::sqrt(herfindahl / sf.h_star) - 1.0);
  return std::min(size + conc, sf.sf_cap);
}

double ccf_parametric(const Bucket& b, const SpecificRiskParams& sf, double tau, double tna, double herfindahl,
                      DrawdownRule rule) {
  if (tau < 0.0) throw DomainError("horizon must be non-negative");
  validate(b);
  validate(sf);
  const double dd_tau = rule == DrawdownRule::half_horizon ? tau / 2.0 : tau;
  return liquidity_factor(b, tau) * (1.0 - drawdown_factor(b, dd_tau)) *
         (1.0 - specific_risk_factor(sf, tna, herfindahl));
}

Coverage rcr_hqla(const std::vector<std::pair<double, double>>& buckets, double rate) {
  if (!(rate > 0.0)) throw DomainError("redemption rate must be positive");
  double wsum = 0.0;
  double covered = 0.0;
  for (const auto& [w, ccf] : buckets) {
    if (ccf < 0.0 || ccf > 1.0) throw DomainError("CCF outside [0,1]");
    wsum += w;
    covered += w * ccf;
  }
  if (std::abs(wsum - 1.0) > 1e-9) throw DomainError(fmt::format("bucket weights sum to {}, expected 1", wsum));
  Coverage c;
  c.rcr = covered / rate;
  c.ls = rate * std::max(0.0, 1.0 - c.rcr);
  return c;
}

}  // namespace lst::hqla
