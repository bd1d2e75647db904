#include "lst/core.hpp"
#include "lst/fixtures.hpp"
#include "lst/io.hpp"

#include <doctest.h>

#include <sstream>

using doctest::Approx;

TEST_CASE("number parsing") {
  CHECK(lst::io::parse_number("1.25") == 1.25);
  CHECK(lst::io::parse_number(" -3e2 ") == -300.0);
  CHECK_THROWS_AS(lst::io::parse_number("abc"), lst::DomainError);
  CHECK_THROWS_AS(lst::io::parse_number("1.5x"), lst::DomainError);
  CHECK(lst::io::parse_fraction("0.1") == 0.1);
  CHECK(lst::io::parse_fraction("12.5%") == Approx(0.125));
  CHECK(lst::io::parse_fraction("20bp") == Approx(0.002));
  CHECK(lst::io::parse_fraction("20bps") == Approx(0.002));
  CHECK_THROWS_AS(lst::io::parse_fraction("%"), lst::DomainError);
}

TEST_CASE("csv reader") {
  std::istringstream is("# comment\na,b\n1,2\n\n#3,4\n");
  const auto rows = lst::io::read_csv(is);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][0] == "a");
  CHECK(rows[2][0] == "#3");
}

TEST_CASE("portfolio round trip") {
  const auto p = lst::fixtures::reference_fund_market();
  std::ostringstream os;
  lst::io::write_portfolio_csv(os, p);
  std::istringstream is(os.str());
  const auto back = lst::io::read_portfolio_csv(is);
  REQUIRE(back.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(back.securities[i].id == p.securities[i].id);
    CHECK(back.securities[i].shares == p.securities[i].shares);
    CHECK(back.securities[i].price == p.securities[i].price);
    CHECK(back.securities[i].daily_limit == p.securities[i].daily_limit);
    CHECK(back.securities[i].volatility == p.securities[i].volatility);
    CHECK(back.securities[i].spread == p.securities[i].spread);
  }
  const auto j = lst::io::portfolio_to_json(p);
  const auto from = lst::io::portfolio_from_json(j);
  REQUIRE(from.correlation.has_value());
  CHECK((*from.correlation - *p.correlation).cwiseAbs().maxCoeff() == 0.0);
  CHECK(lst::tna(from) == lst::tna(p));
}

TEST_CASE("invalid portfolio files") {
  std::istringstream missing("id,shares\na,10\n");
  CHECK_THROWS_AS(lst::io::read_portfolio_csv(missing), lst::DomainError);
  std::istringstream bad("id,shares,price,daily_limit\na,-1,2,3\n");
  CHECK_THROWS_AS(lst::validate(lst::io::read_portfolio_csv(bad)), lst::DomainError);
  CHECK_THROWS_AS(lst::io::read_portfolio(LST_TEST_DATA "/empty.csv"), lst::DomainError);
  CHECK_THROWS_AS(lst::io::read_portfolio(LST_TEST_DATA "/does_not_exist.csv"), lst::DomainError);
}

TEST_CASE("formatting") {
  CHECK(lst::io::pct2(0.5253) == "52.53");
  CHECK(lst::io::fmt6(1234567.0) == "1.23457e+06");
  CHECK(lst::io::parse_number(lst::io::raw(0.1)) == 0.1);
}
