#pragma once

// Turning an uncapacitated cover into a capacitated one.
//
// Elements are grouped by demand class: class k holds demands in
// (1/(k+1), 1/k], and every element of class k carries slack 1/(k(k+1)).
// Plain first-fit-decreasing packs each base set of the given cover in turn.
// The refined variants first build dedicated sets around elements of
// class 1 (demand > 1/2) and then around pairs of class-2 elements, using a
// knapsack FPTAS to fill the remaining room of each such set.

#include <span>
#include <vector>

#include "capcover/model.hpp"

namespace capcover {

// k with x in (1/(k+1), 1/k]; 0 for x == 0.
long demand_class(double x);

// 1/(k(k+1)) for x in class k; slack(0) == 0.
double slack(double x);

double total_demand(std::span<const int> elements, std::span<const double> demands);
double total_slack(std::span<const int> elements, std::span<const double> demands);

struct LoadedSet {
  std::vector<int> elements;  // sorted
  int base = -1;              // family member containing the elements
  double load = 0.0;
};

struct CapacitatedCover {
  std::vector<LoadedSet> sets;

  // owner[e] = index of the set holding element e, -1 if none.
  std::vector<int> owners(int n) const;
};

// Elements not yet placed in any emitted set.
struct CoverState {
  explicit CoverState(int n) : remaining(n, true), left(n) {}

  bool has(int e) const { return remaining[e]; }
  void take(int e);
  int size() const { return left; }

  std::vector<bool> remaining;
  int left;
};

// Sets emitted while first-fit-decreasing drained one base set.
struct FfdLoop {
  int base = -1;
  std::vector<std::vector<int>> emitted;  // in emission order, elements in insertion order
};

struct FfdTrace {
  int base_sets = 0;         // size of the uncapacitated cover handed to the FFD pass
  std::vector<int> pool;     // elements still uncovered when the pass started
  std::vector<FfdLoop> loops;
};

// For each base set in order: while it still holds uncovered elements, open
// a fresh set and sweep those elements by non-increasing demand, inserting
// each one that still fits.
std::vector<LoadedSet> ffd(const GenericInstance& instance, std::span<const int> base_sets,
                           CoverState& state, FfdTrace* trace = nullptr);

// One set per element a of demand > 1/2: a plus the knapsack-best filling
// (values d_i + s_i) of the family member containing a that scores highest.
std::vector<LoadedSet> phase_p1(const GenericInstance& instance, CoverState& state,
                                double epsilon = 0.01);

// While some family member holds two uncovered elements with demand in
// (1/3, 1/2]: over all such pairs, fill the rest of the member by a
// knapsack on slack and commit the guess with the largest total demand.
std::vector<LoadedSet> phase_p2(const GenericInstance& instance, CoverState& state,
                                double epsilon = 0.01);

enum class Variant { Ffd, Refined1, Refined2 };

const char* variant_name(Variant variant);

CapacitatedCover solve_capacitated(const GenericInstance& instance,
                                   std::span<const int> uncap_cover, Variant variant,
                                   FfdTrace* trace = nullptr);

// Greedy uncapacitated set cover (largest number of new elements first),
// for instances too large for an exact cover.
std::vector<int> greedy_set_cover(const GenericInstance& instance);

}  // namespace capcover
