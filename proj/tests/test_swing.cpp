#include "lst/core.hpp"
#include "lst/swing.hpp"

#include <doctest.h>

#include <map>
#include <random>

using doctest::Approx;
using namespace lst::swing;

namespace {

const FundState kFund{100.0, 10.0};

}  // namespace

TEST_CASE("nav step") {
  CHECK(nav_step(kFund, {0, 0, 0.05, 0}).next.nav == Approx(105.0));
  CHECK(nav_step(kFund, {0, 0, 0.05, 30}).next.nav == Approx(105.0));
  const auto sub = nav_step(kFund, {5, 0, 0.05, 30});
  CHECK(sub.next.nav == Approx(103.0));
  CHECK(sub.next.units == 15.0);
  const auto red = nav_step(kFund, {0, 5, 0.05, 30});
  CHECK(red.next.nav == Approx(102.0));
  CHECK(red.next.units == 5.0);
  CHECK(red.dilution >= sub.dilution);
  CHECK(sub.dilution == Approx(2.0));
  CHECK(red.dilution == Approx(3.0));
  CHECK_THROWS_AS(nav_step(kFund, {0, 10, 0.0, 1}), lst::DomainError);
  CHECK_THROWS_AS(nav_step(kFund, {-1, 0, 0.0, 1}), lst::DomainError);
  CHECK_THROWS_AS(nav_step({100, 0}, {1, 0, 0.0, 1}), lst::DomainError);
}

TEST_CASE("full swing") {
  Config full;
  const auto s = swing_nav(kFund, {5, 0, 0.05, 30}, full);
  REQUIRE(s.nav_swing);
  CHECK(*s.nav_swing == Approx(111.0));
  CHECK(s.activated);
  const auto r = swing_nav(kFund, {0, 5, 0.05, 30}, full);
  CHECK(*r.nav_swing == Approx(99.0));
  const auto z = swing_nav(kFund, {3, 3, 0.05, 30}, full);
  CHECK(z.no_flow);
  CHECK_FALSE(z.nav_swing);
  Config none{Mode::none};
  CHECK_FALSE(swing_nav(kFund, {5, 0, 0.05, 30}, none).nav_swing);
}

TEST_CASE("dual pricing") {
  Config d1{Mode::dual, Adjustment::cost, 0, 0, 0, 1.0};
  auto r = swing_nav(kFund, {10, 5, 0.05, 30}, d1);
  CHECK(*r.nav_ask == Approx(107.0));
  CHECK(*r.nav_bid == Approx(103.0));
  Config d2{Mode::dual, Adjustment::cost, 0, 0, 0, 2.0};
  r = swing_nav(kFund, {10, 5, 0.05, 30}, d2);
  CHECK(*r.nav_ask == Approx(106.5));
  CHECK(*r.nav_bid == Approx(102.0));
  // fee split adds back to the cost
  const double paid = 10 * (*r.nav_ask - r.nav_gross) + 5 * (r.nav_gross - *r.nav_bid);
  CHECK(paid == Approx(30.0));
  r = swing_nav(kFund, {4, 0, 0.05, 30}, d2);
  CHECK(*r.nav_ask == Approx(105.0 + 7.5));
  CHECK_FALSE(r.nav_bid);
  Config bad{Mode::dual, Adjustment::cost, 0, 0, 0, 0.5};
  CHECK_THROWS_AS(swing_nav(kFund, {1, 1, 0, 1}, bad), lst::DomainError);
}

TEST_CASE("partial and dynamic swing") {
  Config partial{Mode::partial, Adjustment::cost, 0.5};
  CHECK_FALSE(swing_nav(kFund, {4, 0, 0.05, 30}, partial).activated);
  CHECK(*swing_nav(kFund, {4, 0, 0.05, 30}, partial).nav_swing == Approx(105.0));
  CHECK(swing_nav(kFund, {5, 0, 0.05, 30}, partial).activated);
  CHECK(swing_nav(kFund, {0, 5, 0.05, 30}, {Mode::partial, Adjustment::cost, 1.0}).activated);

  CHECK(dynamic_threshold(2e-4, 40e-4) == Approx(0.05));
  CHECK(dynamic_threshold(2e-4, 60e-4) == Approx(1.0 / 30.0));
  CHECK(dynamic_threshold(40e-4, 40e-4) == 1.0);
  CHECK_THROWS_AS(dynamic_threshold(2e-4, 0.0), lst::DomainError);

  Config dyn{Mode::dynamic, Adjustment::cost, 0, 40e-4, 2e-4};
  const FundState big{100.0, 1000.0};
  auto r = swing_nav(big, {50, 0, 0.0, 0}, dyn);
  CHECK(r.activated);
  CHECK(*r.nav_swing == Approx(100.0 * 1.004));
  r = swing_nav(big, {0, 40, 0.0, 0}, dyn);
  CHECK_FALSE(r.activated);
  r = swing_nav(big, {0, 60, 0.0, 0}, dyn);
  CHECK(*r.nav_swing == Approx(100.0 * 0.996));
}

TEST_CASE("swing conserves net assets") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Config full;
  for (int k = 0; k < 1000; ++k) {
    const FundState f{50.0 + 100.0 * u(rng), 100.0 + 1000.0 * u(rng)};
    FlowEvent e{200.0 * u(rng), 0.9 * f.units * u(rng), 0.1 * (u(rng) - 0.5), 50.0 * u(rng)};
    if (e.net() == 0.0) continue;
    const auto s = swing_nav(f, e, full);
    REQUIRE(s.nav_swing);
    const double lhs = f.units * s.nav_gross + e.net() * *s.nav_swing - e.cost;
    const double rhs = (f.units + e.net()) * s.nav_gross;
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("anti-dilution levies") {
  auto f = adl_fees(10, 5, 30, AdlRule::gross);
  CHECK(f.entry == Approx(3.0));
  CHECK(f.exit == 0.0);
  f = adl_fees(10, 5, 30, AdlRule::netted);
  CHECK(f.entry == Approx(6.0));
  CHECK(f.exit == 0.0);
  f = adl_fees(5, 10, 30, AdlRule::netted);
  CHECK(f.exit == Approx(6.0));
  f = adl_fees(5, 10, 30, AdlRule::gross);
  CHECK(f.exit == Approx(3.0));
  f = adl_fees(10, 5, 30, AdlRule::pro_rata);
  CHECK(f.entry == Approx(2.0));
  CHECK(f.exit == Approx(2.0));
  for (auto rule : {AdlRule::netted, AdlRule::gross, AdlRule::pro_rata}) {
    f = adl_fees(10, 0, 30, rule);
    CHECK(f.exit == 0.0);
    CHECK(f.entry > 0.0);
  }
  CHECK(adl_fees(5, 5, 30, AdlRule::netted).degenerate);
  CHECK_FALSE(adl_fees(5, 5, 30, AdlRule::pro_rata).degenerate);
  CHECK_THROWS_AS(adl_fees(0, 0, 1, AdlRule::gross), lst::DomainError);
}

TEST_CASE("gate queue") {
  const std::vector<GateRequest> req{{0, "A", 0.05}, {1, "B", 0.02}};
  const auto g = gate_schedule(req, 0.02);
  REQUIRE(g.size() == 5);
  const int day[] = {0, 1, 2, 2, 3};
  const char* who[] = {"A", "A", "A", "B", "B"};
  const double rate[] = {0.02, 0.02, 0.01, 0.01, 0.01};
  for (int k = 0; k < 5; ++k) {
    CHECK(g[k].day == day[k]);
    CHECK(g[k].investor == who[k]);
    CHECK(g[k].rate == Approx(rate[k]));
  }
  CHECK(g[0].share_of_request == Approx(0.4));
  CHECK(g[3].share_of_request == Approx(0.5));

  const auto open = gate_schedule(req, 1.0);
  REQUIRE(open.size() == 2);
  CHECK(open[0].day == 0);
  CHECK(open[1].day == 1);

  const auto one = gate_schedule({{3, "C", 0.10}}, 0.02);
  REQUIRE(one.size() == 5);
  for (const auto& x : one) CHECK(x.rate == Approx(0.02));
  CHECK(one.back().day == 7);
  CHECK_THROWS_AS(gate_schedule(req, 0.0), lst::DomainError);
}

TEST_CASE("gate conservation on random queues") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    std::vector<GateRequest> req;
    std::map<std::string, double> asked;
    const int n = 1 + static_cast<int>(8 * u(rng));
    for (int i = 0; i < n; ++i) {
      req.push_back({static_cast<int>(10 * u(rng)), "i" + std::to_string(i), 0.1 * u(rng)});
      asked[req.back().investor] += req.back().rate;
    }
    const double cap = 0.005 + 0.05 * u(rng);
    std::map<std::string, double> got;
    std::map<int, double> per_day;
    for (const auto& f : gate_schedule(req, cap)) {
      got[f.investor] += f.rate;
      per_day[f.day] += f.rate;
    }
    for (const auto& [who, x] : asked) CHECK(got[who] == Approx(x).epsilon(1e-12).scale(1e-12));
    for (const auto& [d, x] : per_day) CHECK(x <= cap + 1e-15);
  }
}
