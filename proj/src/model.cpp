#include "capcover/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace capcover {

namespace {

void check_customer(const Customer& c, std::size_t index) {
  std::ostringstream msg;
  if (!std::isfinite(c.theta)) {
    msg << "customer " << index << ": non-finite angle";
    throw InvalidInstance(msg.str());
  }
  if (!(c.r > 0.0) || !std::isfinite(c.r)) {
    msg << "customer " << index << ": radius must be positive, got " << c.r;
    throw InvalidInstance(msg.str());
  }
  if (!(c.demand >= 0.0) || c.demand > 1.0) {
    msg << "customer " << index << ": demand must lie in [0, 1], got " << c.demand;
    throw InvalidInstance(msg.str());
  }
}

void check_pair(const AntennaInstance& instance, int i, int j) {
  if (i < 0 || j < 0 || i >= instance.size() || j >= instance.size())
    throw std::out_of_range("point index out of range");
  if (!instance.wrap && i > j) throw std::invalid_argument("expected i <= j");
}

}  // namespace

AntennaInstance normalize_instance(std::span<const Customer> raw, bool wrap) {
  if (raw.empty()) throw InvalidInstance("instance has no customers");
  for (std::size_t k = 0; k < raw.size(); ++k) check_customer(raw[k], k);

  AntennaInstance out;
  out.wrap = wrap;
  out.raw.assign(raw.begin(), raw.end());

  std::vector<double> angle(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k)
    angle[k] = wrap ? wrap_angle(raw[k].theta) : raw[k].theta;

  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  // Equal angles: largest radius first, so the dominating customer leads its run.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (angle[a] != angle[b]) return angle[a] < angle[b];
    return raw[a].r > raw[b].r;
  });

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int k = order[pos];
    if (pos > 0 && angle[k] == out.points.back().theta) {
      out.aliases.back().push_back(k);
      continue;
    }
    Customer c = raw[k];
    c.theta = angle[k];
    out.points.push_back(c);
    out.aliases.push_back({k});
  }
  return out;
}

std::vector<Customer> apply_tradeoff(std::span<const Customer> raw,
                                     const std::function<double(double)>& rho) {
  std::vector<Customer> out(raw.begin(), raw.end());
  for (auto& c : out) {
    double width = rho(c.r);
    if (!(width > 0.0)) throw InvalidInstance("trade-off function must be positive");
    c.r = 1.0 / width;
  }
  return out;
}

double arc_width(const AntennaInstance& instance, int i, int j) {
  check_pair(instance, i, j);
  if (i == j) return 0.0;
  const double a = instance.points[i].theta;
  const double b = instance.points[j].theta;
  return instance.wrap ? ccw_distance(a, b) : b - a;
}

double radius_bound(const AntennaInstance& instance, int i, int j) {
  if (!instance.wrap && i >= j) throw std::invalid_argument("radius_bound requires i < j");
  if (i == j) throw std::invalid_argument("radius_bound requires distinct points");
  return 1.0 / arc_width(instance, i, j);
}

bool compatible(const AntennaInstance& instance, int i, int j) {
  check_pair(instance, i, j);
  if (i == j) return true;
  const double bound = radius_bound(instance, i, j);
  return leq_rel(instance.points[i].r, bound) && leq_rel(instance.points[j].r, bound);
}

std::vector<int> arc_indices(const AntennaInstance& instance, int i, int j) {
  check_pair(instance, i, j);
  std::vector<int> out;
  const int n = instance.size();
  for (int k = i;; k = (k + 1) % n) {
    out.push_back(k);
    if (k == j) break;
  }
  return out;
}

Sector CanonicalSet::sector(const AntennaInstance& instance) const {
  const Customer& p = instance.points[first];
  if (full_circle) return {radius_bound, 0.0, kFullCircle};
  if (first == last) return {p.r, p.theta, 0.0};
  return {radius_bound, p.theta, 1.0 / radius_bound};
}

CanonicalSet canonical_set(const AntennaInstance& instance, int i, int j) {
  check_pair(instance, i, j);
  CanonicalSet set;
  set.first = i;
  set.last = j;
  if (i == j) {
    set.radius_bound = std::numeric_limits<double>::infinity();
    set.members = {i};
    return set;
  }
  set.radius_bound = radius_bound(instance, i, j);
  for (int k : arc_indices(instance, i, j))
    if (leq_rel(instance.points[k].r, set.radius_bound)) set.members.push_back(k);
  std::sort(set.members.begin(), set.members.end());
  return set;
}

std::optional<CanonicalSet> full_circle_set(const AntennaInstance& instance) {
  if (!instance.wrap) return std::nullopt;
  CanonicalSet set;
  set.full_circle = true;
  set.radius_bound = 1.0 / kFullCircle;
  for (int k = 0; k < instance.size(); ++k)
    if (leq_rel(instance.points[k].r, set.radius_bound)) set.members.push_back(k);
  if (set.members.empty()) return std::nullopt;
  set.first = set.members.front();
  set.last = set.members.back();
  return set;
}

std::vector<int> gap_set(const AntennaInstance& instance, int i, int j) {
  if (!compatible(instance, i, j))
    throw std::invalid_argument("gap_set requires a compatible pair");
  if (i == j) return {};
  const double bound = radius_bound(instance, i, j);
  std::vector<int> out;
  for (int k : arc_indices(instance, i, j))
    if (!leq_rel(instance.points[k].r, bound)) out.push_back(k);
  return out;
}

std::vector<int> sector_members(std::span<const Customer> customers, const Sector& sector,
                                bool wrap) {
  std::vector<int> out;
  const bool everywhere = wrap && leq_rel(kFullCircle, sector.delta);
  for (std::size_t k = 0; k < customers.size(); ++k) {
    const Customer& c = customers[k];
    if (!leq_rel(c.r, sector.r)) continue;
    bool inside;
    if (everywhere) {
      inside = true;
    } else if (wrap) {
      double offset = ccw_distance(sector.alpha, c.theta);
      // an angle a hair below alpha reads as almost a full turn
      inside = leq_rel(offset, sector.delta) || leq_rel(kFullCircle - offset, 0.0);
    } else {
      inside = leq_rel(sector.alpha, c.theta) && leq_rel(c.theta, sector.alpha + sector.delta);
    }
    if (inside) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<int> sector_members(const AntennaInstance& instance, const Sector& sector) {
  return sector_members(instance.points, sector, instance.wrap);
}

std::vector<int> expand_to_raw(const AntennaInstance& instance, std::span<const int> points) {
  std::vector<int> out;
  for (int p : points)
    out.insert(out.end(), instance.aliases.at(p).begin(), instance.aliases.at(p).end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cover(const AntennaInstance& instance, const Cover& cover) {
  std::vector<char> seen(instance.size(), 0);
  for (const auto& set : cover)
    for (int k : set.members) seen.at(k) = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

void GenericInstance::validate() const {
  if (n <= 0) throw InvalidInstance("universe is empty");
  if (static_cast<int>(demands.size()) != n)
    throw InvalidInstance("expected one demand per element");
  for (int i = 0; i < n; ++i) {
    if (!(demands[i] >= 0.0) || demands[i] > 1.0) {
      std::ostringstream msg;
      msg << "element " << i << ": demand must lie in [0, 1], got " << demands[i];
      throw InvalidInstance(msg.str());
    }
  }
  std::vector<char> covered(n, 0);
  for (std::size_t f = 0; f < family.size(); ++f) {
    std::vector<int> sorted = family[f];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      std::ostringstream msg;
      msg << "set " << f << " lists an element twice";
      throw InvalidInstance(msg.str());
    }
    for (int e : family[f]) {
      if (e < 0 || e >= n) {
        std::ostringstream msg;
        msg << "set " << f << ": element " << e << " out of range";
        throw InvalidInstance(msg.str());
      }
      covered[e] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!covered[i]) {
      std::ostringstream msg;
      msg << "element " << i << " belongs to no set";
      throw InvalidInstance(msg.str());
    }
  }
}

AntennaFamily antenna_family(const AntennaInstance& instance) {
  AntennaFamily out;
  auto add = [&](CanonicalSet set) {
    if (out.index.count(set.members)) return;
    out.index.emplace(set.members, static_cast<int>(out.sets.size()));
    out.instance.family.push_back(expand_to_raw(instance, set.members));
    out.sets.push_back(std::move(set));
  };

  const int n = instance.size();
  for (int i = 0; i < n; ++i) add(canonical_set(instance, i, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (instance.wrap || i < j) && compatible(instance, i, j))
        add(canonical_set(instance, i, j));
  if (auto full = full_circle_set(instance)) add(*full);

  out.instance.n = static_cast<int>(instance.raw.size());
  for (const auto& c : instance.raw) out.instance.demands.push_back(c.demand);
  return out;
}

std::vector<int> AntennaFamily::family_indices(const Cover& cover) const {
  std::vector<int> out;
  for (const auto& set : cover) {
    auto it = index.find(set.members);
    if (it == index.end()) throw std::invalid_argument("cover uses a non-canonical set");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace capcover
