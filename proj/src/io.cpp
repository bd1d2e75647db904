#include "lst/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lst::io {

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

const std::vector<std::string> kColumns{"id", "shares", "price", "daily_limit", "daily_volume", "volatility", "spread"};

}  // namespace

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || (rows.empty() && line[0] == '#')) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::vector<std::string>> read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(fmt::format("cannot open '{}'", path.string()));
  return read_csv(in);
}

double parse_number(const std::string& s) {
  const auto t = trim(s);
  double v = 0.0;
  const auto* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (ec != std::errc() || ptr != end) throw DomainError(fmt::format("not a number: '{}'", s));
  return v;
}

double parse_fraction(const std::string& s) {
  auto t = trim(s);
  if (t.size() > 2 && (t.ends_with("bp") || t.ends_with("bps"))) {
    t.erase(t.find_last_not_of("bps") + 1);
    return parse_number(t) * 1e-4;
  }
  if (t.size() > 1 && t.back() == '%') return parse_number(t.substr(0, t.size() - 1)) * 1e-2;
  return parse_number(t);
}

Portfolio read_portfolio_csv(std::istream& is) {
  const auto rows = read_csv(is);
  if (rows.empty()) throw DomainError("portfolio file is empty");
  const auto& header = rows.front();
  std::vector<int> col(kColumns.size(), -1);
  for (std::size_t c = 0; c < header.size(); ++c) {
    auto it = std::find(kColumns.begin(), kColumns.end(), header[c]);
    if (it == kColumns.end()) throw DomainError(fmt::format("unknown portfolio column '{}'", header[c]));
    col[static_cast<std::size_t>(it - kColumns.begin())] = static_cast<int>(c);
  }
  for (std::size_t k = 0; k < 3; ++k)
    if (col[k] < 0) throw DomainError(fmt::format("portfolio file lacks column '{}'", kColumns[k]));
  Portfolio p;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) throw DomainError(fmt::format("portfolio row {} has {} cells", r, row.size()));
    auto get = [&](std::size_t k) { return col[k] < 0 ? 0.0 : parse_number(row[static_cast<std::size_t>(col[k])]); };
    Security s;
    s.id = row[static_cast<std::size_t>(col[0])];
    s.shares = get(1);
    s.price = get(2);
    s.daily_limit = get(3);
    s.daily_volume = get(4);
    s.volatility = get(5);
    s.spread = get(6);
    p.securities.push_back(s);
  }
  if (p.securities.empty()) throw DomainError("portfolio file has no securities");
  return p;
}

Portfolio portfolio_from_json(const nlohmann::json& j) {
  const auto& arr = j.is_array() ? j : j.at("securities");
  Portfolio p;
  for (const auto& e : arr) {
    Security s;
    s.id = e.value("id", std::string{});
    s.shares = e.at("shares").get<double>();
    s.price = e.at("price").get<double>();
    s.daily_limit = e.value("daily_limit", 0.0);
    s.daily_volume = e.value("daily_volume", 0.0);
    s.volatility = e.value("volatility", 0.0);
    s.spread = e.value("spread", 0.0);
    p.securities.push_back(s);
  }
  if (j.is_object() && j.contains("correlation")) {
    const auto& c = j.at("correlation");
    const auto n = static_cast<Eigen::Index>(c.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (static_cast<Eigen::Index>(c[static_cast<std::size_t>(r)].size()) != n)
        throw DomainError("correlation matrix must be square");
      for (Eigen::Index k = 0; k < n; ++k) m(r, k) = c[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].get<double>();
    }
    p.correlation = m;
  }
  if (p.securities.empty()) throw DomainError("portfolio has no securities");
  return p;
}

nlohmann::json portfolio_to_json(const Portfolio& p) {
  nlohmann::json j;
  j["securities"] = nlohmann::json::array();
  for (const auto& s : p.securities)
    j["securities"].push_back({{"id", s.id}, {"shares", s.shares}, {"price", s.price}, {"daily_limit", s.daily_limit},
                               {"daily_volume", s.daily_volume}, {"volatility", s.volatility}, {"spread", s.spread}});
  if (p.correlation) {
    const auto& c = *p.correlation;
    auto rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < c.rows(); ++r) {
      auto row = nlohmann::json::array();
      for (Eigen::Index k = 0; k < c.cols(); ++k) row.push_back(c(r, k));
      rows.push_back(row);
    }
    j["correlation"] = rows;
  }
  return j;
}

Portfolio read_portfolio(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(fmt::format("cannot open '{}'", path.string()));
  Portfolio p;
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(fmt::format("invalid JSON in '{}': {}", path.string(), e.what()));
    }
    p = portfolio_from_json(j);
  } else {
    p = read_portfolio_csv(in);
  }
  validate(p);
  return p;
}

Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path) {
  const auto rows = read_csv_file(path);
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw DomainError("matrix file is empty");
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != n) throw DomainError("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = parse_number(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

void write_portfolio_csv(std::ostream& os, const Portfolio& p) {
  os << "id,shares,price,daily_limit,daily_volume,volatility,spread\n";
  for (const auto& s : p.securities)
    os << fmt::format("{},{},{},{},{},{},{}\n", s.id, s.shares, s.price, s.daily_limit, s.daily_volume, s.volatility,
                      s.spread);
}

std::string fmt6(double x) { return fmt::format("{:.6g}", x); }

std::string pct2(double x) { return fmt::format("{:.2f}", 100.0 * x); }

std::string raw(double x) { return fmt::format("{:.17g}", x); }

}  // namespace lst::io
