#include "capcover/cap_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "capcover/knapsack.hpp"

namespace capcover {

namespace {

double class_index(double x) {
  double k = std::floor(1.0 / x);
  if (k < 1.0) k = 1.0;
  while (k > 1.0 && x * k > 1.0) k -= 1.0;
  while (x * (k + 1.0) <= 1.0) k += 1.0;
  return k;
}

void check_demand(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "demand " << x << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
}

LoadedSet make_set(std::vector<int> elements, int base, const GenericInstance& instance) {
  std::sort(elements.begin(), elements.end());
  LoadedSet set;
  set.load = total_demand(elements, instance.demands);
  set.elements = std::move(elements);
  set.base = base;
  return set;
}

// Elements by non-increasing demand, ties by index.
void sort_decreasing(std::vector<int>& elements, const std::vector<double>& demands) {
  std::sort(elements.begin(), elements.end(), [&](int a, int b) {
    if (demands[a] != demands[b]) return demands[a] > demands[b];
    return a < b;
  });
}

std::vector<std::vector<int>> containing_sets(const GenericInstance& instance) {
  std::vector<std::vector<int>> out(instance.n);
  for (int f = 0; f < static_cast<int>(instance.family.size()); ++f)
    for (int e : instance.family[f]) out[e].push_back(f);
  return out;
}

bool in_p1(double d) { return d > 0.5; }
bool in_p2(double d) { return d > 1.0 / 3.0 && d <= 0.5; }

}  // namespace

long demand_class(double x) {
  check_demand(x);
  if (x == 0.0) return 0;
  double k = class_index(x);
  if (k > static_cast<double>(std::numeric_limits<long>::max() / 2))
    return std::numeric_limits<long>::max() / 2;
  return static_cast<long>(k);
}

double slack(double x) {
  check_demand(x);
  if (x == 0.0) return 0.0;
  const double k = class_index(x);
  return 1.0 / (k * (k + 1.0));
}

double total_demand(std::span<const int> elements, std::span<const double> demands) {
  double sum = 0.0;
  for (int e : elements) sum += demands[e];
  return sum;
}

double total_slack(std::span<const int> elements, std::span<const double> demands) {
  double sum = 0.0;
  for (int e : elements) sum += slack(demands[e]);
  return sum;
}

std::vector<int> CapacitatedCover::owners(int n) const {
  std::vector<int> owner(n, -1);
  for (int s = 0; s < static_cast<int>(sets.size()); ++s)
    for (int e : sets[s].elements) owner.at(e) = s;
  return owner;
}

void CoverState::take(int e) {
  if (remaining[e]) {
    remaining[e] = false;
    --left;
  }
}

std::vector<LoadedSet> ffd(const GenericInstance& instance, std::span<const int> base_sets,
                           CoverState& state, FfdTrace* trace) {
  for (int e = 0; e < instance.n; ++e)
    if (state.has(e)) check_demand(instance.demands[e]);

  if (trace) {
    trace->base_sets = static_cast<int>(base_sets.size());
    trace->pool.clear();
    trace->loops.clear();
    for (int e = 0; e < instance.n; ++e)
      if (state.has(e)) trace->pool.push_back(e);
  }

  std::vector<LoadedSet> out;
  for (int base : base_sets) {
    std::vector<int> pending;
    for (int e : instance.family.at(base))
      if (state.has(e)) pending.push_back(e);
    if (pending.empty()) continue;
    sort_decreasing(pending, instance.demands);

    FfdLoop loop;
    loop.base = base;
    while (!pending.empty()) {
      std::vector<int> packed;
      std::vector<int> skipped;
      double load = 0.0;
      for (int e : pending) {
        if (fits_capacity(load + instance.demands[e])) {
          load += instance.demands[e];
          packed.push_back(e);
          state.take(e);
        } else {
          skipped.push_back(e);
        }
      }
      if (trace) loop.emitted.push_back(packed);
      out.push_back(make_set(std::move(packed), base, instance));
      pending = std::move(skipped);
    }
    if (trace) trace->loops.push_back(std::move(loop));
  }
  return out;
}

std::vector<LoadedSet> phase_p1(const GenericInstance& instance, CoverState& state,
                                double epsilon) {
  const auto& d = instance.demands;
  const auto owners = containing_sets(instance);

  std::vector<int> large;
  for (int e = 0; e < instance.n; ++e)
    if (state.has(e) && in_p1(d[e])) large.push_back(e);
  sort_decreasing(large, d);

  std::vector<LoadedSet> out;
  for (int a : large) {
    if (owners[a].empty()) {
      std::ostringstream msg;
      msg << "element " << a << " belongs to no set";
      throw InvalidInstance(msg.str());
    }
    int best_base = -1;
    std::vector<int> best_fill;
    double best_value = -1.0;
    for (int base : owners[a]) {
      std::vector<KnapsackItem> items;
      for (int i : instance.family[base])
        if (i != a && state.has(i) && !in_p1(d[i])) items.push_back({i, d[i], d[i] + slack(d[i])});
      auto choice = knapsack_maxvalue(items, 1.0 - d[a], epsilon);
      if (choice.value > best_value) {
        best_value = choice.value;
        best_base = base;
        best_fill.clear();
        for (int pos : choice.chosen) best_fill.push_back(items[pos].element);
      }
    }
    best_fill.push_back(a);
    for (int e : best_fill) state.take(e);
    out.push_back(make_set(std::move(best_fill), best_base, instance));
  }
  return out;
}

std::vector<LoadedSet> phase_p2(const GenericInstance& instance, CoverState& state,
                                double epsilon) {
  const auto& d = instance.demands;
  std::vector<LoadedSet> out;

  while (true) {
    bool found = false;
    int best_base = -1;
    std::vector<int> best_set;
    double best_demand = -1.0;
    double best_slack = -1.0;

    for (int base = 0; base < static_cast<int>(instance.family.size()); ++base) {
      const auto& members = instance.family[base];
      std::vector<int> mid;
      for (int e : members)
        if (state.has(e) && in_p2(d[e])) mid.push_back(e);
      std::sort(mid.begin(), mid.end());

      for (std::size_t x = 0; x < mid.size(); ++x) {
        for (std::size_t y = x + 1; y < mid.size(); ++y) {
          const int a = mid[x];
          const int b = mid[y];
          std::vector<KnapsackItem> items;
          for (int i : members)
            if (i != a && i != b && state.has(i)) items.push_back({i, d[i], slack(d[i])});
          auto choice = knapsack_maxvalue(items, 1.0 - d[a] - d[b], epsilon);
          const double demand = choice.weight + d[a] + d[b];
          const double slack_gain = choice.value;
          if (!found || demand > best_demand ||
              (demand == best_demand && slack_gain > best_slack)) {
            found = true;
            best_demand = demand;
            best_slack = slack_gain;
            best_base = base;
            best_set = {a, b};
            for (int pos : choice.chosen) best_set.push_back(items[pos].element);
          }
        }
      }
    }

    if (!found) break;
    for (int e : best_set) state.take(e);
    out.push_back(make_set(std::move(best_set), best_base, instance));
  }
  return out;
}

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::Ffd: return "ffd";
    case Variant::Refined1: return "refined1";
    case Variant::Refined2: return "refined2";
  }
  return "?";
}

CapacitatedCover solve_capacitated(const GenericInstance& instance,
                                   std::span<const int> uncap_cover, Variant variant,
                                   FfdTrace* trace) {
  instance.validate();
  std::vector<char> covered(instance.n, 0);
  for (int f : uncap_cover) {
    if (f < 0 || f >= static_cast<int>(instance.family.size()))
      throw std::invalid_argument("cover names a set outside the family");
    for (int e : instance.family[f]) covered[e] = 1;
  }
  for (int e = 0; e < instance.n; ++e) {
    if (!covered[e]) {
      std::ostringstream msg;
      msg << "uncapacitated cover misses element " << e;
      throw std::invalid_argument(msg.str());
    }
  }

  CoverState state(instance.n);
  CapacitatedCover out;
  auto append = [&](std::vector<LoadedSet> sets) {
    for (auto& s : sets) out.sets.push_back(std::move(s));
  };
  if (variant != Variant::Ffd) append(phase_p1(instance, state));
  if (variant == Variant::Refined2) append(phase_p2(instance, state));
  append(ffd(instance, uncap_cover, state, trace));
  return out;
}

std::vector<int> greedy_set_cover(const GenericInstance& instance) {
  instance.validate();
  std::vector<char> covered(instance.n, 0);
  int left = instance.n;
  std::vector<int> out;
  while (left > 0) {
    int best = -1;
    int best_gain = 0;
    for (int f = 0; f < static_cast<int>(instance.family.size()); ++f) {
      int gain = 0;
      for (int e : instance.family[f]) gain += covered[e] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = f;
      }
    }
    out.push_back(best);
    for (int e : instance.family[best]) {
      if (!covered[e]) {
        covered[e] = 1;
        --left;
      }
    }
  }
  return out;
}

}  // namespace capcover
