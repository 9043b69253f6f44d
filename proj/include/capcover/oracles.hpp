#pragma once

// Exhaustive reference solvers and the first-fit-decreasing auditor. These
// exist to check the real solvers at desk scale; each one refuses inputs
// beyond its size guard with GuardExceeded instead of truncating.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "capcover/binsched.hpp"
#include "capcover/cap_cover.hpp"
#include "capcover/knapsack.hpp"
#include "capcover/load_ptas.hpp"
#include "capcover/model.hpp"

namespace capcover {

inline constexpr int kBruteUncapLimit = 12;
inline constexpr int kBruteCapLimit = 8;
inline constexpr int kBruteLoadLimit = 10;
inline constexpr int kBruteLoadAntennas = 3;
inline constexpr int kExactCoverLimit = 20;
inline constexpr int kBruteStabLimit = 12;
inline constexpr int kExactKnapsackLimit = 22;

// Fewest antenna sets covering every point. Candidate sets come straight
// from sector scans over every (start angle, radius) pair of the input.
int brute_uncap(const AntennaInstance& instance);

// Fewest capacity-respecting subsets of family members partitioning U.
int brute_cap(const GenericInstance& instance);

// Fewest family members covering U (uncapacitated); returns their indices.
std::vector<int> exact_set_cover(const GenericInstance& instance);

// Smallest achievable maximum load over partitions into at most m window-feasible sets.
double brute_minload(const LoadInstance& instance);

// Fewest window-feasible sets of decreased cost at most the trial bound,
// over all partitions (linear instances only).
int brute_decreased_sets(const DecreasedInstance& decreased, const LoadInstance& instance);

// Fewest shipment times such that every item window holds one.
int brute_stab(const std::vector<ShipItem>& items);

// Best knapsack value by subset enumeration.
double knapsack_exact(std::span<const KnapsackItem> items, double capacity);

// (lambda - 1) / (lambda (lambda + 1)): lower bound on the slack of a set
// closed while an element of class lambda was still waiting.
double est(long lambda);

inline constexpr double kSlackCeiling = 0.692;

struct LoopAudit {
  int base = -1;
  std::vector<double> demand;   // d(Q_j)
  std::vector<double> slack;    // s(Q_j)
  std::vector<double> deficit;  // 1 - d(Q_j) - s(Q_j)
  double amortized = 0.0;       // sum of d(Q_j) + s(Q_j)
  bool holds = true;            // amortized >= number of sets - 1
};

struct AuditReport {
  std::vector<LoopAudit> loops;
  bool slack_ceiling = true;  // every emitted set has s(Q) <= 0.692
  bool loop_amortized = true; // every loop satisfies its amortization
  bool est_bound = true;      // s(Q_j) > est(class of the element that opened Q_{j+1})
  bool size_bound = true;     // |FFD output| <= |base sets| + d(P) + s(P)
  int ffd_sets = 0;
  double size_limit = 0.0;
  double max_slack = 0.0;
  std::optional<double> ratio;
  std::vector<std::string> violations;

  bool ok() const { return slack_ceiling && loop_amortized && est_bound && size_bound; }
};

// Rechecks the amortization properties of a first-fit-decreasing pass. With
// an optimum, the ratio is total_sets / optimum (total_sets < 0 means the
// FFD output alone).
AuditReport audit_ffd(const FfdTrace& trace, std::span<const double> demands,
                      std::optional<int> optimum = std::nullopt, int total_sets = -1);

}  // namespace capcover
