#pragma once

// Seeded instance builders shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "capcover/binsched.hpp"
#include "capcover/load_ptas.hpp"
#include "capcover/model.hpp"

namespace capcover::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Radii in [0.2, 3] over a span that grows with n, so pairs are compatible
// often but not always.
inline std::vector<Customer> random_customers(Rng& rng, int n, bool wrap) {
  const double span = wrap ? kFullCircle : 0.5 * n;
  std::vector<Customer> out;
  for (int j = 0; j < n; ++j)
    out.push_back({uniform(rng, 0.0, span), uniform(rng, 0.2, 3.0), uniform(rng, 0.05, 0.7)});
  return out;
}

inline GenericInstance random_generic(Rng& rng, int n, int sets, double max_demand = 0.7) {
  GenericInstance g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.demands.push_back(uniform(rng, 0.02, max_demand));
  g.family.assign(sets, {});
  std::vector<char> covered(n, 0);
  for (int f = 0; f < sets; ++f)
    for (int i = 0; i < n; ++i)
      if (uniform(rng, 0.0, 1.0) < 0.45) {
        g.family[f].push_back(i);
        covered[i] = 1;
      }
  for (int i = 0; i < n; ++i) {
    if (covered[i]) continue;
    auto& member = g.family[uniform_int(rng, 0, sets - 1)];
    member.insert(std::upper_bound(member.begin(), member.end(), i), i);
  }
  return g;
}

inline std::vector<LoadPoint> random_load_points(Rng& rng, int n, bool wrap) {
  const double span = wrap ? kFullCircle : 1.0;
  std::vector<LoadPoint> out;
  for (int j = 0; j < n; ++j) out.push_back({uniform(rng, 0.0, span), uniform(rng, 0.0, 1.0)});
  return out;
}

inline std::vector<ShipItem> random_items(Rng& rng, int n) {
  std::vector<ShipItem> out;
  for (int i = 0; i < n; ++i)
    out.push_back({uniform(rng, 0.05, 0.7), uniform(rng, 0.0, 10.0), uniform(rng, 0.0, 3.0)});
  return out;
}

}  // namespace capcover::testing
