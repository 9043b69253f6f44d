#pragma once

// Problem models shared by every solver: customers in radial coordinates,
// antenna sets (angular sectors whose width is the reciprocal of their
// reach), the O(n^2) canonical antenna sets, and the abstract capacitated
// set cover instance.
//
// All indices are 0-based. Angles are plain reals on a line unless the
// instance wraps, in which case they are radians on the circle.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "capcover/numeric.hpp"

namespace capcover {

struct Customer {
  double theta = 0.0;
  double r = 1.0;
  double demand = 0.0;
};

// R(r, alpha, delta): customers with r_j <= r and theta_j in [alpha, alpha + delta].
struct Sector {
  double r = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
};

struct AntennaInstance {
  // Normalized points, theta strictly increasing with index.
  std::vector<Customer> points;
  bool wrap = false;
  // Input as given, before sorting and deduplication.
  std::vector<Customer> raw;
  // aliases[i] lists the raw indices represented by point i, representative first.
  // Customers sharing an angle are dominated by the one with the largest r.
  std::vector<std::vector<int>> aliases;

  int size() const { return static_cast<int>(points.size()); }
};

AntennaInstance normalize_instance(std::span<const Customer> raw, bool wrap = false);

// Rewrites radii so that an arbitrary decreasing width function rho(r)
// yields the same antenna sets under the built-in rho(r) = 1/r.
std::vector<Customer> apply_tradeoff(std::span<const Customer> raw,
                                     const std::function<double(double)>& rho);

// Angular width of the arc from point i to point j (counter-clockwise when
// the instance wraps). Linear instances require i < j.
double arc_width(const AntennaInstance& instance, int i, int j);

// r(i, j) = 1 / (theta_j - theta_i).
double radius_bound(const AntennaInstance& instance, int i, int j);

// i and j lie in a common antenna set.
bool compatible(const AntennaInstance& instance, int i, int j);

// Indices met walking from i to j (inclusive), in angular order.
std::vector<int> arc_indices(const AntennaInstance& instance, int i, int j);

struct CanonicalSet {
  int first = 0;
  int last = 0;
  double radius_bound = 0.0;  // +inf for singletons
  bool full_circle = false;   // omnidirectional set of a wrapping instance
  std::vector<int> members;   // sorted

  // A sector realising exactly this set (zero width for singletons).
  Sector sector(const AntennaInstance& instance) const;
};

// A[i, j]: the largest antenna set with extreme members i and j.
CanonicalSet canonical_set(const AntennaInstance& instance, int i, int j);

// On a circle a sector of width >= 2*pi reaches every customer with r <= 1/(2*pi).
std::optional<CanonicalSet> full_circle_set(const AntennaInstance& instance);

// S[i, j]: points of the arc i..j that A[i, j] misses. Requires compatible(i, j).
std::vector<int> gap_set(const AntennaInstance& instance, int i, int j);

std::vector<int> sector_members(std::span<const Customer> customers, const Sector& sector,
                                bool wrap);
std::vector<int> sector_members(const AntennaInstance& instance, const Sector& sector);

// Maps normalized point indices to the raw customers they stand for.
std::vector<int> expand_to_raw(const AntennaInstance& instance, std::span<const int> points);

using Cover = std::vector<CanonicalSet>;

bool is_cover(const AntennaInstance& instance, const Cover& cover);

struct GenericInstance {
  int n = 0;
  std::vector<double> demands;
  std::vector<std::vector<int>> family;

  // Throws InvalidInstance on out-of-range indices, bad demands or an
  // element no family member contains.
  void validate() const;
};

// The canonical antenna sets as an abstract capacitated set cover instance
// over the raw customers. family[f] is sets[f] expanded through the alias table.
struct AntennaFamily {
  GenericInstance instance;
  std::vector<CanonicalSet> sets;
  std::map<std::vector<int>, int> index;  // normalized members -> family index

  // Family indices of an uncapacitated cover of the antenna instance.
  std::vector<int> family_indices(const Cover& cover) const;
};

AntennaFamily antenna_family(const AntennaInstance& instance);

}  // namespace capcover
