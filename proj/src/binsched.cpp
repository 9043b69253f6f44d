#include "capcover/binsched.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace capcover {

void validate_items(const std::vector<ShipItem>& items) {
  if (items.empty()) throw InvalidInstance("no items to ship");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    std::ostringstream msg;
    if (!(it.weight >= 0.0 && it.weight <= 1.0)) {
      msg << "item " << i << ": weight must lie in [0, 1], got " << it.weight;
      throw InvalidInstance(msg.str());
    }
    if (!std::isfinite(it.arrival) || !(it.patience >= 0.0) || !std::isfinite(it.patience)) {
      msg << "item " << i << ": needs a finite arrival and nonnegative patience";
      throw InvalidInstance(msg.str());
    }
  }
}

std::vector<double> stab_windows(const std::vector<ShipItem>& items) {
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (items[a].deadline() != items[b].deadline()) return items[a].deadline() < items[b].deadline();
    return a < b;
  });
  std::vector<double> times;
  for (int i : order) {
    if (!times.empty() && items[i].arrival <= times.back()) continue;
    times.push_back(items[i].deadline());
  }
  return times;
}

std::vector<int> window_set(const std::vector<ShipItem>& items, double t) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(items.size()); ++i)
    if (items[i].arrival <= t && t <= items[i].deadline()) out.push_back(i);
  return out;
}

std::vector<double> candidate_times(const std::vector<ShipItem>& items) {
  std::vector<double> times;
  for (const auto& it : items) {
    times.push_back(it.arrival);
    times.push_back(it.deadline());
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

ShippingFamily shipping_family(const std::vector<ShipItem>& items) {
  validate_items(items);
  ShippingFamily out;
  out.instance.n = static_cast<int>(items.size());
  for (const auto& it : items) out.instance.demands.push_back(it.weight);

  std::map<std::vector<int>, int> index;
  auto add = [&](double t) {
    auto members = window_set(items, t);
    auto [it, fresh] = index.emplace(members, static_cast<int>(out.times.size()));
    if (fresh) {
      out.instance.family.push_back(std::move(members));
      out.times.push_back(t);
    }
    return it->second;
  };
  for (double t : stab_windows(items)) out.stab_cover.push_back(add(t));
  for (double t : candidate_times(items)) add(t);
  return out;
}

ShipmentPlan solve_binschedule(const std::vector<ShipItem>& items, Variant variant) {
  const ShippingFamily family = shipping_family(items);
  const CapacitatedCover cover =
      solve_capacitated(family.instance, family.stab_cover, variant);

  ShipmentPlan plan;
  for (const auto& set : cover.sets) {
    Shipment s;
    s.time = family.times.at(set.base);
    s.items = set.elements;
    s.load = set.load;
    for (int i : s.items)
      if (!(items[i].arrival <= s.time && s.time <= items[i].deadline()))
        throw std::logic_error("shipment time outside an item's window");
    plan.shipments.push_back(std::move(s));
  }
  std::stable_sort(plan.shipments.begin(), plan.shipments.end(),
                   [](const Shipment& a, const Shipment& b) { return a.time < b.time; });
  return plan;
}

}  // namespace capcover
