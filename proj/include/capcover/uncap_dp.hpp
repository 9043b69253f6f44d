#pragma once

// Exact minimum cover of an antenna instance by antenna sets, ignoring
// demands. Every compatible pair (i, j) is a subproblem: cover the gap
// S[i, j] left inside the arc by A[i, j]. A gap is solved as a shortest
// path in a small DAG over its points, using the answers of narrower pairs.
// Two low-radius sentinels bracketing the input turn the whole instance
// into the single gap between them.

#include <utility>
#include <vector>

#include "capcover/dag_shortest_path.hpp"
#include "capcover/model.hpp"

namespace capcover {

struct SentinelInfo {
  double offset = 1.0;  // angular distance of each sentinel from the nearest customer
  double radius = 0.0;  // sentinel radius
};

// Returns the instance with one sentinel before the first point and one
// after the last (indices shift by one), chosen so the two sentinels are
// compatible and their canonical set holds no real customer.
std::pair<AntennaInstance, SentinelInfo> add_sentinels(const AntennaInstance& instance);

// Memo of solved gaps. A piece (p, q) of a gap's optimal path stands for
// the set A[p, q] plus the optimal cover of S[p, q].
class DpTable {
 public:
  explicit DpTable(int num_points);

  bool solved(int i, int j) const { return cost_[index(i, j)] >= 0; }
  int cost(int i, int j) const;
  const std::vector<std::pair<int, int>>& pieces(int i, int j) const;
  void store(int i, int j, int cost, std::vector<std::pair<int, int>> pieces);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<int> cost_;
  std::vector<std::vector<std::pair<int, int>>> pieces_;
};

// Gap graph of a compatible pair: vertices 0..m over S[i, j] = a_0 < ... < a_{m-1},
// an edge (k, l+1) for every compatible a_k, a_l with cost 1 + C[a_k, a_l].
std::vector<DagEdge<int>> gap_graph(const AntennaInstance& instance, std::span<const int> gap,
                                    const DpTable& table);

// C[i, j] for a compatible pair of a linear instance; every narrower
// compatible pair must already be solved.
int solve_gap(const AntennaInstance& instance, int i, int j, DpTable& table);

// Minimum-cardinality cover by canonical sets.
Cover solve_uncapacitated(const AntennaInstance& instance);

}  // namespace capcover
