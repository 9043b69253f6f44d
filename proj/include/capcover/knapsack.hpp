#pragma once

#include <span>
#include <vector>

namespace capcover {

struct KnapsackItem {
  int element = -1;  // caller's tag, carried through untouched
  double weight = 0.0;
  double value = 0.0;
};

struct KnapsackChoice {
  std::vector<int> chosen;  // positions in the item list, ascending
  double value = 0.0;
  double weight = 0.0;
};

// Value-scaling FPTAS: the returned subset fits `capacity` and is worth at
// least (1 - epsilon) of the best subset that fits.
KnapsackChoice knapsack_maxvalue(std::span<const KnapsackItem> items, double capacity,
                                 double epsilon = 0.01);

}  // namespace capcover
