#pragma once

// Shipping with deadlines: item i weighs d_i, arrives at t_i and must leave
// by t_i + p_i; every shipment carries total weight at most 1. A shipment at
// time T may take exactly the items whose window [t_i, t_i + p_i] holds T,
// which makes this a capacitated set cover over window sets.

#include <vector>

#include "capcover/cap_cover.hpp"
#include "capcover/model.hpp"

namespace capcover {

struct ShipItem {
  double weight = 0.0;
  double arrival = 0.0;
  double patience = 0.0;

  double deadline() const { return arrival + patience; }
};

struct Shipment {
  double time = 0.0;
  std::vector<int> items;  // ascending
  double load = 0.0;
};

struct ShipmentPlan {
  std::vector<Shipment> shipments;
};

void validate_items(const std::vector<ShipItem>& items);

// Fewest times stabbing every window, by earliest deadline.
std::vector<double> stab_windows(const std::vector<ShipItem>& items);

// Items whose window holds time t.
std::vector<int> window_set(const std::vector<ShipItem>& items, double t);

// Every window endpoint, sorted and deduplicated.
std::vector<double> candidate_times(const std::vector<ShipItem>& items);

struct ShippingFamily {
  GenericInstance instance;
  std::vector<double> times;     // times[f]: shipment time of family member f
  std::vector<int> stab_cover;   // family indices of the stabbing times
};

// Window sets of the stabbing times followed by those of every endpoint.
ShippingFamily shipping_family(const std::vector<ShipItem>& items);

ShipmentPlan solve_binschedule(const std::vector<ShipItem>& items,
                               Variant variant = Variant::Refined2);

}  // namespace capcover
