#pragma once

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lst {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Security {
  std::string id;
  double shares = 0.0;
  double price = 0.0;
  double daily_limit = 0.0;
  double daily_volume = 0.0;
  double volatility = 0.0;  // annualized
  double spread = 0.0;
};

struct Portfolio {
  std::vector<Security> securities;
  std::optional<Eigen::MatrixXd> correlation;

  std::size_t size() const { return securities.size(); }
  std::vector<double> shares() const;
  std::vector<double> prices() const;
  std::vector<double> limits() const;
};

using RedemptionPortfolio = std::vector<double>;

struct RedemptionShock {
  double rate = 0.0;
  double amount = 0.0;
};

// Number of days, or an explicit "never" outcome.
class Days {
 public:
  static Days finite(int n) { return Days(n); }
  static Days never() { return Days(-1); }

  bool is_finite() const { return n_ >= 0; }
  int value() const;

  bool operator==(const Days&) const = default;

 private:
  explicit Days(int n) : n_(n) {}
  int n_;
};

void validate(const Portfolio& p);
void validate_redemption(const Portfolio& p, const RedemptionPortfolio& q);

double tna(const Portfolio& p);
std::vector<double> weights(const Portfolio& p);
double value(const Portfolio& p, const RedemptionPortfolio& q);
std::vector<double> weights_of(const Portfolio& p, const RedemptionPortfolio& q);

RedemptionShock make_shock(const Portfolio& p, double rate);

struct WeightDistortion {
  std::vector<double> delta;
  std::vector<double> post;  // w(omega - q)
};

WeightDistortion weight_distortion(const Portfolio& p, const RedemptionPortfolio& q);

double herfindahl(const std::vector<double>& w);
double herfindahl(const Portfolio& p);

double round_shares(double x);
RedemptionPortfolio round_shares(const RedemptionPortfolio& q);

}  // namespace lst
