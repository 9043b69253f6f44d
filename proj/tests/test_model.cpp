#include <doctest.h>

#include <random>

#include "capcover/model.hpp"
#include "support.hpp"

using namespace capcover;

namespace {

AntennaInstance line(std::vector<std::pair<double, double>> pts) {
  std::vector<Customer> cs;
  for (auto [theta, r] : pts) cs.push_back({theta, r, 0.1});
  return normalize_instance(cs, false);
}

}  // namespace

TEST_CASE("normalize sorts by angle and keeps the widest-reaching duplicate") {
  auto a = line({{0.5, 1}, {0.1, 2}});
  REQUIRE(a.size() == 2);
  CHECK(a.points[0].theta == 0.1);
  CHECK(a.points[0].r == 2);
  CHECK(a.points[1].theta == 0.5);

  auto b = line({{0.2, 1}, {0.2, 3}});
  REQUIRE(b.size() == 1);
  CHECK(b.points[0].r == 3);
  CHECK(b.aliases[0] == std::vector<int>{1, 0});

  auto c = line({{0.7, 1.5}});
  CHECK(c.size() == 1);
  CHECK(c.points[0].theta == 0.7);
}

TEST_CASE("normalize rejects bad customers") {
  std::vector<Customer> none;
  CHECK_THROWS_AS(normalize_instance(none), InvalidInstance);
  std::vector<Customer> bad_r{{0.0, 0.0, 0.1}};
  CHECK_THROWS_AS(normalize_instance(bad_r), InvalidInstance);
  std::vector<Customer> bad_d{{0.0, 1.0, 1.5}};
  CHECK_THROWS_AS(normalize_instance(bad_d), InvalidInstance);
}

TEST_CASE("wrap reduces angles onto the circle") {
  std::vector<Customer> cs{{-0.5, 1, 0}, {7.0, 1, 0}};
  auto a = normalize_instance(cs, true);
  CHECK(a.points[0].theta == doctest::Approx(7.0 - kFullCircle));
  CHECK(a.points[1].theta == doctest::Approx(kFullCircle - 0.5));
}

TEST_CASE("radius bound") {
  auto a = line({{0.0, 1}, {0.3, 1}, {1.0, 1}, {1.5, 1}});
  CHECK(radius_bound(a, 0, 1) == doctest::Approx(1 / 0.3));
  CHECK(radius_bound(a, 0, 2) == doctest::Approx(1.0));
  CHECK(radius_bound(a, 2, 3) == doctest::Approx(2.0));
}

TEST_CASE("compatibility") {
  CHECK(compatible(line({{0.0, 2.0}, {0.3, 3.0}}), 0, 1));
  CHECK_FALSE(compatible(line({{0.0, 2.0}, {0.3, 4.0}}), 0, 1));
  CHECK(compatible(line({{0.0, 2.0}, {0.3, 4.0}}), 1, 1));
  // exactly on the bound
  CHECK(compatible(line({{0.0, 1.0}, {1.0, 1.0}}), 0, 1));
}

TEST_CASE("canonical and gap sets") {
  auto flat = line({{0, 1}, {0.5, 1}, {1, 1}});
  auto s = canonical_set(flat, 0, 2);
  CHECK(s.members == std::vector<int>{0, 1, 2});
  CHECK(s.radius_bound == doctest::Approx(1.0));
  CHECK(gap_set(flat, 0, 2).empty());

  auto peak = line({{0, 1}, {0.5, 3}, {1, 1}});
  CHECK(canonical_set(peak, 0, 2).members == std::vector<int>{0, 2});
  CHECK(gap_set(peak, 0, 2) == std::vector<int>{1});
  CHECK(canonical_set(peak, 1, 1).members == std::vector<int>{1});
  CHECK(gap_set(peak, 1, 1).empty());
}

TEST_CASE("canonical sets contain their endpoints and are realised by their sector") {
  capcover::testing::Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const bool wrap = t % 2;
    auto inst = normalize_instance(capcover::testing::random_customers(rng, 7, wrap), wrap);
    for (int i = 0; i < inst.size(); ++i) {
      for (int j = 0; j < inst.size(); ++j) {
        if (!wrap && j < i) continue;
        if (!compatible(inst, i, j)) continue;
        auto s = canonical_set(inst, i, j);
        CHECK(std::binary_search(s.members.begin(), s.members.end(), i));
        CHECK(std::binary_search(s.members.begin(), s.members.end(), j));
        CHECK(sector_members(inst, s.sector(inst)) == s.members);
      }
    }
  }
}

TEST_CASE("sector members") {
  std::vector<Customer> cs{{0.5, 1, 0}, {0.5, 3, 0}, {2, 1, 0}};
  CHECK(sector_members(cs, {2, 0, 1}, false) == std::vector<int>{0});
  CHECK(sector_members(cs, {2, 0.5, 0}, false) == std::vector<int>{0});
  CHECK(sector_members(cs, {std::numeric_limits<double>::infinity(), 0, kFullCircle}, true) ==
        std::vector<int>{0, 1, 2});
  // a wrapped sector crossing angle zero
  std::vector<Customer> ring{{6.2, 1, 0}, {0.1, 1, 0}, {3.0, 1, 0}};
  CHECK(sector_members(ring, {1, 6.0, 0.5}, true) == std::vector<int>{0, 1});
}

TEST_CASE("full circle set") {
  std::vector<Customer> cs{{0, 0.1, 0}, {2, 0.15, 0}, {4, 1, 0}};
  auto inst = normalize_instance(cs, true);
  auto f = full_circle_set(inst);
  REQUIRE(f);
  CHECK(f->members == std::vector<int>{0, 1});
  CHECK(f->sector(inst).delta == doctest::Approx(kFullCircle));
  CHECK_FALSE(full_circle_set(normalize_instance(cs, false)));
}

TEST_CASE("trade-off transform keeps the antenna sets") {
  std::vector<Customer> cs{{0, 1, 0}, {0.4, 2, 0}};
  auto out = apply_tradeoff(cs, [](double r) { return 2.0 / r; });
  CHECK(out[0].r == doctest::Approx(0.5));
  CHECK(out[1].r == doctest::Approx(1.0));
  CHECK_THROWS_AS(apply_tradeoff(cs, [](double) { return 0.0; }), InvalidInstance);
}

TEST_CASE("generic instance validation") {
  GenericInstance g{3, {0.2, 0.3, 0.4}, {{0, 1}, {2}}};
  CHECK_NOTHROW(g.validate());
  auto uncovered = g;
  uncovered.family = {{0, 1}};
  CHECK_THROWS_AS(uncovered.validate(), InvalidInstance);
  auto range = g;
  range.family.push_back({3});
  CHECK_THROWS_AS(range.validate(), InvalidInstance);
  auto heavy = g;
  heavy.demands[0] = 1.2;
  CHECK_THROWS_AS(heavy.validate(), InvalidInstance);
  auto repeat = g;
  repeat.family[0] = {0, 0, 1};
  CHECK_THROWS_AS(repeat.validate(), InvalidInstance);
}

TEST_CASE("antenna family expands aliases") {
  std::vector<Customer> cs{{0, 1, 0.3}, {0, 0.5, 0.2}, {0.5, 3, 0.1}, {1, 1, 0.4}};
  auto inst = normalize_instance(cs, false);
  auto fam = antenna_family(inst);
  CHECK_NOTHROW(fam.instance.validate());
  CHECK(fam.instance.n == 4);
  bool found_pair = false;
  for (const auto& member : fam.instance.family)
    if (member == std::vector<int>{0, 1, 3}) found_pair = true;
  CHECK(found_pair);
}
