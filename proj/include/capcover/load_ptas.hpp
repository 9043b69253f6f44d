#pragma once

// Approximation scheme for spreading demands over m windows of fixed angular
// width so the heaviest window is as light as possible.
//
// For a trial bound D the demands are rounded down onto the geometric grid
// t_i = D (1 + eps0)^-i: demands in [t_{i+1}, t_i) count as t_{i+1}, and
// demands below t_k are "small" and a set does not pay for its last small
// element. Under that relaxed cost an optimal partition can be taken to
// consume each rounding class in index order, so partial solutions are just
// per-class counts and a breadth-first search over count vectors finds the
// fewest sets. Binary search on D finishes the job.

#include <optional>
#include <span>
#include <vector>

#include "capcover/numeric.hpp"

namespace capcover {

struct LoadPoint {
  double theta = 0.0;
  double demand = 0.0;
};

struct LoadInstance {
  std::vector<LoadPoint> points;  // sorted by angle
  std::vector<int> source;        // input position of each sorted point
  double window = 0.0;            // angular width of one antenna
  int m = 1;                      // antennas available
  bool wrap = false;

  int size() const { return static_cast<int>(points.size()); }
};

// Sorts the points by angle (reduced to [0, 2*pi) when wrapping) and checks
// the instance. Equal angles are kept, ordered by input position.
LoadInstance make_load_instance(std::span<const LoadPoint> points, double window, int m,
                                bool wrap = false);

struct DecreasedInstance {
  double bound = 0.0;
  double eps0 = 0.0;
  int k = 0;
  std::vector<double> thresholds;           // t_0 .. t_k
  std::vector<int> point_class;             // 0..k-1 large, k small
  std::vector<double> demand;               // original demands
  std::vector<double> rounded;              // t_{i+1} for large points, d_j for small ones
  std::vector<std::vector<int>> classes;    // ascending point indices per class

  double eps1() const { return thresholds.back() / bound; }
  double eps() const { return eps0 + eps1(); }
  bool small(int j) const { return point_class[j] == k; }
};

// nullopt when some demand exceeds the trial bound.
std::optional<DecreasedInstance> build_decreased(const LoadInstance& instance, double bound,
                                                 double eps0, int k);

// Rounded cost of a set: rounded large demands plus the small demands except
// the one with the highest index.
double decreased_cost(std::span<const int> elements, const DecreasedInstance& decreased);

// The points fit one half-open window [alpha, alpha + width).
bool window_feasible(const LoadInstance& instance, std::span<const int> elements);

struct LoadSet {
  double alpha = 0.0;
  std::vector<int> elements;  // ascending point indices
  double load = 0.0;
};

struct LoadSchedule {
  std::vector<LoadSet> sets;

  double max_load() const;
};

struct CountSearchStats {
  long states = 0;
  long max_fanout = 0;  // most large-increment choices seen at one state
};

// Fewest sets a class-ordered partition needs when every set must cost at
// most the trial bound and fit one window; nullopt when more than `limit`
// are needed. Wrapping instances try every cut of the circle.
std::optional<LoadSchedule> ordered_partition(const DecreasedInstance& decreased,
                                              const LoadInstance& instance, int limit,
                                              CountSearchStats* stats = nullptr);

// A schedule with at most m sets, each of decreased cost at most the bound.
std::optional<LoadSchedule> feasible_load(const DecreasedInstance& decreased,
                                          const LoadInstance& instance,
                                          CountSearchStats* stats = nullptr);

struct PtasParameters {
  double eps0 = 0.0;
  int k = 0;

  double eps1() const;
};

PtasParameters choose_parameters(double eps);

// Fewest windows that can hold all points, ignoring demands.
int min_windows(const LoadInstance& instance);

struct MinLoadResult {
  double bound = 0.0;
  LoadSchedule schedule;
  PtasParameters params;
  int probes = 0;
  long stretch_checks = 0;  // emitted sets checked against d(Q) <= (1 + eps) D
  long max_fanout = 0;
};

MinLoadResult solve_minantload(const LoadInstance& instance, double eps);

}  // namespace capcover
