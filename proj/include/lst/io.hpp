#pragma once

#include "lst/core.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lst::io {

// Lines starting with # before the first row are comments.
std::vector<std::vector<std::string>> read_csv(std::istream& is);
std::vector<std::vector<std::string>> read_csv_file(const std::filesystem::path& path);

double parse_number(const std::string& s);
// Accepts plain fractions, "12.5%" and "20bp".
double parse_fraction(const std::string& s);

Portfolio read_portfolio_csv(std::istream& is);
Portfolio read_portfolio(const std::filesystem::path& path);  // .csv or .json
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);
void write_portfolio_csv(std::ostream& os, const Portfolio& p);

Portfolio portfolio_from_json(const nlohmann::json& j);
nlohmann::json portfolio_to_json(const Portfolio& p);

std::string fmt6(double x);     // 6 significant digits
std::string pct2(double x);     // percentage, 2 decimals
std::string raw(double x);      // full precision

}  // namespace lst::io
