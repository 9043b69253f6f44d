#include <doctest.h>

#include "capcover/oracles.hpp"
#include "support.hpp"

using namespace capcover;
using namespace capcover::testing;

namespace {

LoadInstance make(std::vector<std::pair<double, double>> pts, double window, int m, bool wrap = false) {
  std::vector<LoadPoint> ps;
  for (auto [theta, d] : pts) ps.push_back({theta, d});
  return make_load_instance(ps, window, m, wrap);
}

}  // namespace

TEST_CASE("thresholds and classes") {
  auto inst = make({{0, 0.5}, {1, 0.1}, {2, 0.7}, {3, 1.0}}, 10, 1);
  auto dec = build_decreased(inst, 1.0, 0.5, 4);
  REQUIRE(dec);
  const std::vector<double> t{1, 0.6667, 0.4444, 0.2963, 0.1975};
  for (int i = 0; i <= 4; ++i) CHECK(dec->thresholds[i] == doctest::Approx(t[i]).epsilon(1e-3));
  CHECK(dec->eps1() == doctest::Approx(0.1975).epsilon(1e-3));
  CHECK(dec->eps() == doctest::Approx(0.6975).epsilon(1e-3));
  CHECK(dec->point_class[0] == 1);
  CHECK(dec->rounded[0] == doctest::Approx(0.4444).epsilon(1e-3));
  CHECK(dec->point_class[1] == 4);
  CHECK(dec->small(1));
  CHECK(dec->point_class[2] == 0);
  CHECK(dec->point_class[3] == 0);
  CHECK_FALSE(build_decreased(inst, 0.9, 0.5, 4));
}

TEST_CASE("decreased cost") {
  auto inst = make({{0, 0.5}, {1, 0.1}, {2, 0.15}}, 10, 1);
  auto dec = *build_decreased(inst, 1.0, 0.5, 4);
  CHECK(decreased_cost(std::vector<int>{0}, dec) == doctest::Approx(0.4444).epsilon(1e-3));
  CHECK(decreased_cost(std::vector<int>{1, 2}, dec) == doctest::Approx(0.1));
  CHECK(decreased_cost(std::vector<int>{1}, dec) == 0.0);
  CHECK(decreased_cost(std::vector<int>{0, 1, 2}, dec) == doctest::Approx(0.4444 + 0.1).epsilon(1e-3));
}

TEST_CASE("decreased cost never exceeds the true load") {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const int n = uniform_int(rng, 1, 10);
    auto inst = make_load_instance(random_load_points(rng, n, false), 1, 1);
    auto dec = build_decreased(inst, 1.0, uniform(rng, 0.05, 0.5), uniform_int(rng, 1, 8));
    REQUIRE(dec);
    std::vector<int> set;
    double d = 0;
    for (int j = 0; j < n; ++j)
      if (uniform(rng, 0, 1) < 0.5) {
        set.push_back(j);
        d += inst.points[j].demand;
      }
    if (set.empty()) continue;
    const double cost = decreased_cost(set, *dec);
    CHECK(cost <= d + 1e-12);
    // and the stretch bound holds whenever the cost fits
    if (cost <= 1.0) CHECK(d <= (1 + dec->eps()) * 1.0 + 1e-12);
  }
}

TEST_CASE("window feasibility") {
  auto lin = make({{0, 0.1}, {0.5, 0.1}, {1.0, 0.1}}, 1.0, 3);
  CHECK(window_feasible(lin, std::vector<int>{0, 1}));
  CHECK_FALSE(window_feasible(lin, std::vector<int>{0, 2}));  // half-open
  auto ring = make({{0.1, 0.1}, {6.2, 0.1}, {3.0, 0.1}}, 0.5, 3, true);
  // sorted order: 0.1, 3.0, 6.2
  CHECK(window_feasible(ring, std::vector<int>{0, 2}));
  CHECK_FALSE(window_feasible(ring, std::vector<int>{0, 1}));
}

TEST_CASE("feasible load examples") {
  auto all_small = make({{0, 0.01}, {0.1, 0.02}, {0.2, 0.01}}, 1.0, 1);
  auto dec = *build_decreased(all_small, 1.0, 0.5, 4);
  auto s = feasible_load(dec, all_small);
  REQUIRE(s);
  CHECK(s->sets.size() == 1);

  auto apart = make({{0, 0.01}, {5, 0.01}}, 1.0, 3);
  auto s2 = feasible_load(*build_decreased(apart, 1.0, 0.5, 4), apart);
  REQUIRE(s2);
  CHECK(s2->sets.size() == 2);
  auto apart1 = make({{0, 0.01}, {5, 0.01}}, 1.0, 1);
  CHECK_FALSE(feasible_load(*build_decreased(apart1, 1.0, 0.5, 4), apart1));

  auto four = make({{0, 0.3}, {0.1, 0.3}, {0.2, 0.3}, {0.3, 0.3}}, 100, 2);
  auto d4 = *build_decreased(four, 0.65, 0.5, 1);
  REQUIRE(d4.small(0));
  auto s4 = feasible_load(d4, four);
  REQUIRE(s4);
  CHECK(s4->sets.size() == 2);
}

TEST_CASE("parameters") {
  for (double eps : {1.0, 0.5, 0.3, 0.1}) {
    auto p = choose_parameters(eps);
    CHECK(p.eps0 == doctest::Approx(eps / 2));
    CHECK(p.eps1() <= eps / 2 + 1e-15);
    CHECK(p.k >= 2);
  }
  CHECK(choose_parameters(0.5).k == 7);
  CHECK(choose_parameters(0.3).k == 14);
  CHECK_THROWS(choose_parameters(0.0));
  CHECK_THROWS(choose_parameters(1.5));
}

TEST_CASE("minimum windows") {
  CHECK(min_windows(make({{0, 0}, {0.5, 0}, {1.2, 0}}, 1.0, 3)) == 2);
  CHECK(min_windows(make({{0.1, 0}, {6.2, 0}}, 0.5, 3, true)) == 1);
  CHECK(min_windows(make({{0, 0}, {2, 0}, {4, 0}}, 7.0, 1, true)) == 1);
}

TEST_CASE("min load examples") {
  auto one = make({{0, 0.4}}, 1, 1);
  auto r = solve_minantload(one, 0.3);
  CHECK(r.bound == doctest::Approx(0.4));
  CHECK(r.schedule.max_load() == doctest::Approx(0.4));

  auto halves = make({{0, 0.5}, {0.1, 0.5}, {0.2, 0.5}, {0.3, 0.5}}, 1, 2);
  for (double eps : {0.5, 0.3}) {
    auto h = solve_minantload(halves, eps);
    CHECK(h.schedule.max_load() <= (1 + eps) * 1.0 + 1e-9);
    CHECK(h.stretch_checks > 0);
  }

  auto crowded = make({{0, 0.5}, {5, 0.5}}, 1, 1);
  CHECK_THROWS_AS(solve_minantload(crowded, 0.3), Infeasible);

  auto zero = make({{0, 0}, {0.1, 0}}, 1, 1);
  CHECK(solve_minantload(zero, 0.3).schedule.max_load() == 0.0);
}

TEST_CASE("equal angles are kept") {
  auto inst = make({{0.2, 0.3}, {0.2, 0.4}}, 1, 2);
  REQUIRE(inst.size() == 2);
  CHECK(inst.source == std::vector<int>{0, 1});
  auto r = solve_minantload(inst, 0.3);
  CHECK(r.schedule.max_load() <= 1.3 * 0.4 + 1e-9);
}

TEST_CASE("ordered search is sound on random instances") {
  for (int t = 0; t < 400; ++t) {
    Rng rng(2200 + t);
    const int n = uniform_int(rng, 1, 9);
    auto inst = make_load_instance(random_load_points(rng, n, false), uniform(rng, 0.1, 1.2), n);
    auto p = choose_parameters(0.5);
    auto dec = build_decreased(inst, uniform(rng, 0.5, 2.5), p.eps0, p.k);
    if (!dec) continue;
    CountSearchStats stats;
    auto found = ordered_partition(*dec, inst, n, &stats);
    REQUIRE(found);
    for (const auto& s : found->sets) {
      CHECK(window_feasible(inst, s.elements));
      CHECK(decreased_cost(s.elements, *dec) <= dec->bound * (1 + 1e-9));
    }
    CHECK(stats.max_fanout <= std::pow(4.0, p.k));
    const int brute = brute_decreased_sets(*dec, inst);
    // every path is a real partition, so the search can never beat the oracle
    CHECK(static_cast<int>(found->sets.size()) >= brute);
  }
}

TEST_CASE("small elements split out of index order beat the count-vector search") {
  // The oracle pairs {0, 1, 2, 3, 6} with {4, 5, 7, 8, 9}: smalls 5 and 6
  // change places, so no class-ordered partition reaches two sets.
  auto inst = make({{0.220353, 0.427665}, {0.222956, 0.927155}, {0.240193, 0.185791},
                    {0.244031, 0.523746}, {0.428227, 0.99274}, {0.528266, 0.220411},
                    {0.708835, 0.400306}, {0.725591, 0.648834}, {0.785806, 0.448917},
                    {0.956416, 0.0542027}},
                   0.55, 10);
  auto p = choose_parameters(0.5);
  auto dec = *build_decreased(inst, 2.18556, p.eps0, p.k);
  CHECK(brute_decreased_sets(dec, inst) == 2);
  auto found = ordered_partition(dec, inst, 10);
  REQUIRE(found);
  CHECK(found->sets.size() == 3);
}

TEST_CASE("ptas against the oracle") {
  for (int t = 0; t < 60; ++t) {
    Rng rng(3300 + t);
    const bool wrap = t % 3 == 0;
    const int n = uniform_int(rng, 1, 8);
    auto inst = make_load_instance(random_load_points(rng, n, wrap),
                                   wrap ? uniform(rng, 1, 5) : uniform(rng, 0.3, 1.2),
                                   uniform_int(rng, 1, 3), wrap);
    if (min_windows(inst) > inst.m) {
      CHECK_THROWS_AS(solve_minantload(inst, 0.3), Infeasible);
      continue;
    }
    auto r = solve_minantload(inst, 0.3);
    CHECK(static_cast<int>(r.schedule.sets.size()) <= inst.m);
    int covered = 0;
    for (const auto& s : r.schedule.sets) {
      CHECK(window_feasible(inst, s.elements));
      covered += static_cast<int>(s.elements.size());
    }
    CHECK(covered == n);
    CHECK(r.schedule.max_load() <= 1.3 * brute_minload(inst) * (1 + 1e-9) + 1e-12);
  }
}
