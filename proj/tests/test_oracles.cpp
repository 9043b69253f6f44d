#include <doctest.h>

#include "capcover/oracles.hpp"
#include "support.hpp"

using namespace capcover;
using namespace capcover::testing;

namespace {

AntennaInstance make(std::vector<std::pair<double, double>> pts) {
  std::vector<Customer> cs;
  for (auto [theta, r] : pts) cs.push_back({theta, r, 0.1});
  return normalize_instance(cs, false);
}

GenericInstance one_base(std::vector<double> demands) {
  GenericInstance g{static_cast<int>(demands.size()), demands, {{}}};
  for (int i = 0; i < g.n; ++i) g.family[0].push_back(i);
  return g;
}

}  // namespace

TEST_CASE("brute uncapacitated examples") {
  CHECK(brute_uncap(make({{0, 1}, {0.5, 1}, {1, 1}})) == 1);
  CHECK(brute_uncap(make({{0, 1}, {0.5, 3}, {1, 1}})) == 2);
  CHECK(brute_uncap(make({{0, 10}, {1, 10}, {2, 10}, {3, 10}})) == 4);
}

TEST_CASE("brute capacitated examples") {
  CHECK(brute_cap(one_base({0.6, 0.5, 0.4, 0.3})) == 2);
  CHECK(brute_cap(one_base({0, 0, 0})) == 1);
  CHECK(brute_cap(one_base({0.6, 0.6, 0.6})) == 3);
  GenericInstance split{2, {0.1, 0.1}, {{0}, {1}}};
  CHECK(brute_cap(split) == 2);
}

TEST_CASE("capacities only constrain") {
  for (int t = 0; t < 100; ++t) {
    Rng rng(600 + t);
    auto g = random_generic(rng, uniform_int(rng, 1, 8), uniform_int(rng, 1, 4));
    CHECK(brute_cap(g) >= static_cast<int>(exact_set_cover(g).size()));
  }
}

TEST_CASE("brute min load examples") {
  auto halves = make_load_instance(std::vector<LoadPoint>{{0, 0.5}, {0.1, 0.5}, {0.2, 0.5}, {0.3, 0.5}}, 1, 2);
  CHECK(brute_minload(halves) == doctest::Approx(1.0));
  auto spread = make_load_instance(std::vector<LoadPoint>{{0, 0.2}, {0.1, 0.7}, {0.2, 0.4}}, 1, 3);
  CHECK(brute_minload(spread) == doctest::Approx(0.7));
  auto apart = make_load_instance(std::vector<LoadPoint>{{0, 0.2}, {5, 0.3}}, 1, 2);
  CHECK(brute_minload(apart) == doctest::Approx(0.3));
  auto too_few = make_load_instance(std::vector<LoadPoint>{{0, 0.2}, {5, 0.3}}, 1, 1);
  CHECK_THROWS_AS(brute_minload(too_few), Infeasible);
}

TEST_CASE("guards") {
  std::vector<Customer> cs(13, Customer{0, 1, 0.1});
  for (int j = 0; j < 13; ++j) cs[j].theta = j;
  CHECK_THROWS_AS(brute_uncap(normalize_instance(cs)), GuardExceeded);
  CHECK_THROWS_AS(brute_cap(one_base(std::vector<double>(9, 0.1))), GuardExceeded);
  std::vector<LoadPoint> pts(11, LoadPoint{0, 0.1});
  CHECK_THROWS_AS(brute_minload(make_load_instance(pts, 1, 1)), GuardExceeded);
  std::vector<LoadPoint> few(3, LoadPoint{0, 0.1});
  CHECK_THROWS_AS(brute_minload(make_load_instance(few, 1, 4)), GuardExceeded);
  std::vector<ShipItem> items(13, ShipItem{0.1, 0, 1});
  CHECK_THROWS_AS(brute_stab(items), GuardExceeded);
  std::vector<KnapsackItem> ks(23, KnapsackItem{0, 0.1, 0.1});
  CHECK_THROWS_AS(knapsack_exact(ks, 1), GuardExceeded);
  GenericInstance big = one_base(std::vector<double>(21, 0.1));
  CHECK_THROWS_AS(exact_set_cover(big), GuardExceeded);
}

TEST_CASE("est") {
  CHECK(est(3) == doctest::Approx(1.0 / 6));
  CHECK(est(1) == 0.0);
  CHECK(est(2) == doctest::Approx(est(3)));
  for (long l = 3; l < 50; ++l) CHECK(est(l + 1) < est(l));
}

TEST_CASE("audit of the extremal bin") {
  const double e = 1e-6;
  auto g = one_base({0.5 + e, 1.0 / 3 + e, 1.0 / 7 + e, 1.0 / 43 + e});
  std::vector<int> cover{0};
  FfdTrace trace;
  solve_capacitated(g, cover, Variant::Ffd, &trace);
  auto a = audit_ffd(trace, g.demands, 1);
  CHECK(a.ok());
  CHECK(a.max_slack == doctest::Approx(0.69103).epsilon(1e-4));
  CHECK(kSlackCeiling - a.max_slack < 0.001);
  REQUIRE(a.loops.size() == 1);
  CHECK(a.loops[0].slack.size() == 1);
  CHECK(a.loops[0].holds);
  REQUIRE(a.ratio);
  CHECK(*a.ratio == 1.0);
}

TEST_CASE("audit flags a forged trace") {
  std::vector<double> d{0.9, 0.9, 0.9};
  FfdTrace trace;
  trace.base_sets = 1;
  trace.pool = {0, 1, 2};
  trace.loops.push_back({0, {{0}, {1}, {2}}});
  // three singletons of 0.9: d + s = 1.4 each, the loop amortizes fine
  CHECK(audit_ffd(trace, d).loop_amortized);
  std::vector<double> light{0.01, 0.01, 0.01};
  auto a = audit_ffd(trace, light);
  CHECK_FALSE(a.loop_amortized);
  CHECK_FALSE(a.est_bound);
  CHECK_FALSE(a.ok());
  CHECK_FALSE(a.violations.empty());
}

TEST_CASE("audits pass on random runs") {
  for (int t = 0; t < 200; ++t) {
    Rng rng(800 + t);
    auto g = random_generic(rng, uniform_int(rng, 1, 12), uniform_int(rng, 1, 4), 1.0);
    auto cover = exact_set_cover(g);
    for (Variant v : {Variant::Ffd, Variant::Refined1, Variant::Refined2}) {
      FfdTrace trace;
      solve_capacitated(g, cover, v, &trace);
      auto a = audit_ffd(trace, g.demands);
      CAPTURE(t);
      CHECK(a.ok());
    }
  }
}

TEST_CASE("knapsack oracle") {
  std::vector<KnapsackItem> items{{0, 0.4, 0.4}, {1, 0.4, 0.4}, {2, 0.3, 0.3}};
  CHECK(knapsack_exact(items, 1.0) == doctest::Approx(0.8));
  CHECK(knapsack_exact(items, 0.0) == 0.0);
}
