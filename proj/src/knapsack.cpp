#include "capcover/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "capcover/numeric.hpp"

namespace capcover {

KnapsackChoice knapsack_maxvalue(std::span<const KnapsackItem> items, double capacity,
                                 double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  for (const auto& item : items)
    if (item.weight < 0.0 || item.value < 0.0)
      throw std::invalid_argument("knapsack weights and values must be nonnegative");

  KnapsackChoice best;
  if (capacity < 0.0) return best;

  std::vector<int> usable;
  double top_value = 0.0;
  for (int k = 0; k < static_cast<int>(items.size()); ++k) {
    if (items[k].value > 0.0 && fits_capacity(items[k].weight, capacity)) {
      usable.push_back(k);
      top_value = std::max(top_value, items[k].value);
    }
  }
  if (usable.empty()) return best;

  const int count = static_cast<int>(usable.size());
  const double scale = epsilon * top_value / count;
  std::vector<std::int64_t> profit(count);
  std::int64_t total = 0;
  for (int u = 0; u < count; ++u) {
    profit[u] = static_cast<std::int64_t>(std::floor(items[usable[u]].value / scale));
    total += profit[u];
  }

  // min_weight[p]: lightest subset of the first u items with scaled profit exactly p.
  constexpr double kUnreachable = std::numeric_limits<double>::infinity();
  std::vector<double> min_weight(total + 1, kUnreachable);
  min_weight[0] = 0.0;
  std::vector<std::vector<bool>> took(count, std::vector<bool>(total + 1, false));
  std::int64_t reach = 0;
  for (int u = 0; u < count; ++u) {
    const double w = items[usable[u]].weight;
    const std::int64_t p = profit[u];
    for (std::int64_t q = reach; q >= 0; --q) {
      if (min_weight[q] == kUnreachable) continue;
      const double candidate = min_weight[q] + w;
      if (candidate < min_weight[q + p] && fits_capacity(candidate, capacity)) {
        min_weight[q + p] = candidate;
        took[u][q + p] = true;
      }
    }
    reach += p;
  }

  std::int64_t at = reach;
  while (at > 0 && min_weight[at] == kUnreachable) --at;

  for (int u = count - 1; u >= 0; --u) {
    if (took[u][at]) {
      best.chosen.push_back(usable[u]);
      at -= profit[u];
    }
  }
  std::sort(best.chosen.begin(), best.chosen.end());
  for (int k : best.chosen) {
    best.value += items[k].value;
    best.weight += items[k].weight;
  }
  return best;
}

}  // namespace capcover
