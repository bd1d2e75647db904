#include "lst/core.hpp"

#include <fmt/core.h>

#include <cmath>
#include <numeric>

namespace lst {

std::vector<double> Portfolio::shares() const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& s : securities) out.push_back(s.shares);
  return out;
}

std::vector<double> Portfolio::prices() const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& s : securities) out.push_back(s.price);
  return out;
}

std::vector<double> Portfolio::limits() const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& s : securities) out.push_back(s.daily_limit);
  return out;
}

int Days::value() const {
  if (!is_finite()) throw DomainError("day count is infinite");
  return n_;
}

void validate(const Portfolio& p) {
  if (p.securities.empty()) throw DomainError("portfolio is empty");
  for (const auto& s : p.securities) {
    if (!(s.price > 0.0)) throw DomainError(fmt::format("security '{}': price must be positive", s.id));
    if (s.shares < 0.0 || s.daily_limit < 0.0 || s.daily_volume < 0.0 || s.volatility < 0.0 ||
        s.spread < 0.0)
      throw DomainError(fmt::format("security '{}': negative field", s.id));
  }
  if (!(tna(p) > 0.0)) throw DomainError("total net assets must be positive");
  if (p.correlation) {
    const auto& c = *p.correlation;
    const auto n = static_cast<Eigen::Index>(p.size());
    if (c.rows() != n || c.cols() != n)
      throw DomainError(fmt::format("correlation matrix is {}x{}, expected {}x{}", c.rows(), c.cols(), n, n));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(c(i, i) - 1.0) > 1e-12) throw DomainError("correlation diagonal must be 1");
      for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(c(i, j) - c(j, i)) > 1e-12) throw DomainError("correlation matrix is not symmetric");
        if (c(i, j) < -1.0 || c(i, j) > 1.0) throw DomainError("correlation outside [-1,1]");
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) throw DomainError("correlation matrix is not positive semi-definite");
  }
}

void validate_redemption(const Portfolio& p, const RedemptionPortfolio& q) {
  if (q.size() != p.size())
    throw DomainError(fmt::format("redemption portfolio has {} entries, expected {}", q.size(), p.size()));
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0.0) throw DomainError(fmt::format("negative redemption for '{}'", p.securities[i].id));
    if (q[i] > p.securities[i].shares * (1.0 + 1e-12))
      throw DomainError(fmt::format("redemption of '{}' exceeds holdings", p.securities[i].id));
  }
}

double tna(const Portfolio& p) {
  if (p.securities.empty()) throw DomainError("portfolio is empty");
  double sum = 0.0;
  for (const auto& s : p.securities) sum += s.shares * s.price;
  return sum;
}

std::vector<double> weights(const Portfolio& p) {
  const double t = tna(p);
  if (!(t > 0.0)) throw DomainError("total net assets must be positive");
  std::vector<double> w;
  w.reserve(p.size());
  for (const auto& s : p.securities) w.push_back(s.shares * s.price / t);
  return w;
}

double value(const Portfolio& p, const RedemptionPortfolio& q) {
  if (q.size() != p.size()) throw DomainError("redemption portfolio size mismatch");
  double v = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) v += q[i] * p.securities[i].price;
  return v;
}

std::vector<double> weights_of(const Portfolio& p, const RedemptionPortfolio& q) {
  const double v = value(p, q);
  if (!(v > 0.0)) throw DomainError("redemption portfolio has zero value");
  std::vector<double> w;
  w.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) w.push_back(q[i] * p.securities[i].price / v);
  return w;
}

RedemptionShock make_shock(const Portfolio& p, double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError("redemption rate must lie in [0,1]");
  return {rate, rate * tna(p)};
}

WeightDistortion weight_distortion(const Portfolio& p, const RedemptionPortfolio& q) {
  validate_redemption(p, q);
  const double t = tna(p);
  const double v = value(p, q);
  if (v >= t * (1.0 - 1e-14)) throw DomainError("full liquidation leaves no post-redemption weights");
  const auto w = weights(p);
  WeightDistortion out;
  out.delta.resize(q.size());
  out.post.resize(q.size());
  if (v == 0.0) {
    out.post = w;
    return out;
  }
  const auto wq = weights_of(p, q);
  const double k = v / (t - v);
  for (std::size_t i = 0; i < q.size(); ++i) {
    out.delta[i] = k * (w[i] - wq[i]);
    out.post[i] = w[i] + out.delta[i];
  }
  return out;
}

double herfindahl(const std::vector<double>& w) {
  return std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
}

double herfindahl(const Portfolio& p) { return herfindahl(weights(p)); }

double round_shares(double x) { return std::floor(x + 0.5); }

RedemptionPortfolio round_shares(const RedemptionPortfolio& q) {
  RedemptionPortfolio out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = round_shares(q[i]);
  return out;
}

}  // namespace lst
