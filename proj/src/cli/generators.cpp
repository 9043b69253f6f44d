#include "cli/generators.hpp"

#include <algorithm>
#include <random>

namespace capcover::cli {

namespace {

InstanceFile adversarial(const GenOptions& o) {
  const auto group = pattern_group(o.pattern, o.eps);
  const int width = static_cast<int>(group.size());
  InstanceFile in;
  in.kind = Kind::Generic;
  in.generic.n = o.n;
  for (int i = 0; i < o.n; ++i) in.generic.demands.push_back(group[i % width]);
  // one member per group, plus one per position in the group
  for (int g = 0; g * width < o.n; ++g) {
    std::vector<int> member;
    for (int i = g * width; i < std::min(o.n, (g + 1) * width); ++i) member.push_back(i);
    in.generic.family.push_back(std::move(member));
  }
  for (int slot = 0; slot < width && slot < o.n; ++slot) {
    std::vector<int> member;
    for (int i = slot; i < o.n; i += width) member.push_back(i);
    in.generic.family.push_back(std::move(member));
  }
  return in;
}

}  // namespace

std::vector<double> pattern_group(const std::string& pattern, double eps) {
  if (pattern == "ffd-worst") return {0.5 + eps, 1.0 / 3 + eps, 1.0 / 7 + eps, 1.0 / 43 + eps};
  if (pattern == "p2-worst") return {1.0 / 3 + eps, 0.25 + eps, 0.25 + eps, 0.125 + eps};
  throw InvalidInstance("unknown pattern '" + pattern + "'");
}

InstanceFile generate(const GenOptions& o) {
  if (o.n < 1) throw InvalidInstance("need n >= 1");
  if (o.pattern != "uniform") {
    if (o.kind != Kind::Generic) throw InvalidInstance("pattern " + o.pattern + " builds generic instances");
    return adversarial(o);
  }
  if (!(o.max_demand >= 0.05 && o.max_demand <= 1.0))
    throw InvalidInstance("max demand must lie in [0.05, 1]");

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> demand(0.05, o.max_demand);
  InstanceFile in;
  in.kind = o.kind;
  in.wrap = o.wrap;

  switch (o.kind) {
    case Kind::Antenna: {
      // Linear spans grow with n so that density stays comparable.
      const double span = o.wrap ? kFullCircle : 0.5 * o.n;
      std::uniform_real_distribution<double> radius(0.2, 3.0);
      for (int j = 0; j < o.n; ++j) {
        Customer c;
        c.theta = span * unit(rng);
        c.r = radius(rng);
        c.demand = demand(rng);
        in.customers.push_back(c);
      }
      break;
    }
    case Kind::Generic: {
      const int count = o.sets > 0 ? o.sets : std::max(2, o.n / 2);
      in.generic.n = o.n;
      for (int i = 0; i < o.n; ++i) in.generic.demands.push_back(demand(rng));
      in.generic.family.assign(count, {});
      std::vector<char> covered(o.n, 0);
      for (int f = 0; f < count; ++f)
        for (int i = 0; i < o.n; ++i)
          if (unit(rng) < 0.4) {
            in.generic.family[f].push_back(i);
            covered[i] = 1;
          }
      std::uniform_int_distribution<int> pick(0, count - 1);
      for (int i = 0; i < o.n; ++i) {
        if (covered[i]) continue;
        auto& member = in.generic.family[pick(rng)];
        member.insert(std::upper_bound(member.begin(), member.end(), i), i);
      }
      break;
    }
    case Kind::Load: {
      const double span = o.wrap ? kFullCircle : 1.0;
      in.window = o.window > 0.0 ? o.window : (o.wrap ? 2.0 : 0.4);
      in.m = o.m;
      for (int j = 0; j < o.n; ++j) in.load_points.push_back({span * unit(rng), unit(rng)});
      // keep the instance feasible for the window count
      auto inst = make_load_instance(in.load_points, in.window, in.m, in.wrap);
      in.m = std::max(in.m, min_windows(inst));
      break;
    }
    case Kind::Binsched: {
      std::uniform_real_distribution<double> arrival(0.0, 10.0);
      std::uniform_real_distribution<double> patience(0.0, 3.0);
      for (int i = 0; i < o.n; ++i) in.items.push_back({demand(rng), arrival(rng), patience(rng)});
      break;
    }
  }
  return in;
}

}  // namespace capcover::cli
