#include <doctest.h>

#include "capcover/binsched.hpp"
#include "capcover/oracles.hpp"
#include "support.hpp"

using namespace capcover;
using namespace capcover::testing;

TEST_CASE("stabbing examples") {
  std::vector<ShipItem> w{{0.1, 1, 2}, {0.1, 2, 3}, {0.1, 6, 1}};
  CHECK(stab_windows(w) == std::vector<double>{3, 7});
  std::vector<ShipItem> nested{{0.1, 0, 10}, {0.1, 2, 3}, {0.1, 4, 0.5}};
  CHECK(stab_windows(nested).size() == 1);
  std::vector<ShipItem> apart{{0.1, 0, 1}, {0.1, 2, 1}, {0.1, 4, 1}};
  CHECK(stab_windows(apart).size() == 3);
}

TEST_CASE("window sets and candidate times") {
  std::vector<ShipItem> w{{0.1, 1, 2}, {0.1, 2, 3}, {0.1, 6, 1}};
  CHECK(window_set(w, 2.5) == std::vector<int>{0, 1});
  CHECK(window_set(w, 3) == std::vector<int>{0, 1});
  CHECK(window_set(w, 5.5).empty());
  CHECK(candidate_times(w) == std::vector<double>{1, 2, 3, 5, 6, 7});
}

TEST_CASE("shipping family starts with the stabbing sets") {
  std::vector<ShipItem> w{{0.1, 1, 2}, {0.1, 2, 3}, {0.1, 6, 1}};
  auto fam = shipping_family(w);
  CHECK(fam.stab_cover == std::vector<int>{0, 1});
  CHECK(fam.times[0] == 3);
  CHECK(fam.times[1] == 7);
  CHECK_NOTHROW(fam.instance.validate());
}

TEST_CASE("plan examples") {
  std::vector<ShipItem> shared{{0.6, 0, 5}, {0.5, 1, 5}, {0.4, 2, 5}, {0.3, 3, 5}};
  CHECK(solve_binschedule(shared).shipments.size() == 2);
  std::vector<ShipItem> one{{0.9, 4, 0}};
  auto plan = solve_binschedule(one);
  REQUIRE(plan.shipments.size() == 1);
  CHECK(plan.shipments[0].time == 4);
}

TEST_CASE("invalid items") {
  CHECK_THROWS_AS(validate_items({}), InvalidInstance);
  CHECK_THROWS_AS(validate_items({{1.5, 0, 1}}), InvalidInstance);
  CHECK_THROWS_AS(validate_items({{0.5, 0, -1}}), InvalidInstance);
}

TEST_CASE("stabbing is optimal and plans are valid") {
  for (int t = 0; t < 200; ++t) {
    Rng rng(4400 + t);
    auto items = random_items(rng, uniform_int(rng, 1, 12));
    CHECK(static_cast<int>(stab_windows(items).size()) == brute_stab(items));
    if (items.size() > 8) continue;
    auto plan = solve_binschedule(items);
    std::vector<int> seen(items.size(), 0);
    for (const auto& s : plan.shipments) {
      double load = 0;
      for (int i : s.items) {
        CHECK(items[i].arrival <= s.time);
        CHECK(s.time <= items[i].deadline());
        load += items[i].weight;
        ++seen[i];
      }
      CHECK(fits_capacity(load));
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    const int opt = brute_cap(shipping_family(items).instance);
    CHECK(static_cast<double>(plan.shipments.size()) <= std::ceil(2.357 * opt - 1e-9));
  }
}
