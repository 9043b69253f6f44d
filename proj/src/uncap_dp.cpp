#include "capcover/uncap_dp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace capcover {

namespace {

AntennaInstance line_instance(std::vector<Customer> points) {
  AntennaInstance out;
  out.wrap = false;
  out.raw = points;
  for (int k = 0; k < static_cast<int>(points.size()); ++k) out.aliases.push_back({k});
  out.points = std::move(points);
  return out;
}

void unroll(const DpTable& table, int i, int j, std::vector<std::pair<int, int>>& out) {
  for (auto [p, q] : table.pieces(i, j)) {
    out.emplace_back(p, q);
    if (p != q) unroll(table, p, q, out);
  }
}

// Optimal cover of a linear instance, as (first, last) pairs of canonical sets.
std::vector<std::pair<int, int>> solve_line(const AntennaInstance& line) {
  const int n = line.size();
  auto [augmented, sentinels] = add_sentinels(line);
  (void)sentinels;

  DpTable table(n + 2);
  for (int width = 1; width <= n + 1; ++width) {
    for (int i = 0; i + width <= n + 1; ++i) {
      const int j = i + width;
      if (compatible(augmented, i, j)) solve_gap(augmented, i, j, table);
    }
  }

  std::vector<std::pair<int, int>> pairs;
  unroll(table, 0, n + 1, pairs);
  for (auto& [p, q] : pairs) {
    assert(p >= 1 && q <= n);
    --p;
    --q;
  }
  return pairs;
}

Cover solve_linear(const AntennaInstance& instance) {
  Cover cover;
  for (auto [p, q] : solve_line(instance)) cover.push_back(canonical_set(instance, p, q));
  return cover;
}

Cover solve_circle(const AntennaInstance& circle) {
  const int n = circle.size();
  if (n == 1) return {canonical_set(circle, 0, 0)};

  // Among minimum covers, one of least total arc width has pairwise nested
  // or disjoint arcs, so some gap between angular neighbours is crossed by
  // no set. Cutting there leaves a linear instance; try every cut.
  std::optional<Cover> best;
  for (int cut = 0; cut < n; ++cut) {
    std::vector<Customer> points;
    for (int step = 0; step < n; ++step) {
      Customer c = circle.points[(cut + step) % n];
      if (cut + step >= n) c.theta += kFullCircle;
      points.push_back(c);
    }
    auto pairs = solve_line(line_instance(std::move(points)));
    if (best && pairs.size() >= best->size()) continue;
    Cover cover;
    for (auto [p, q] : pairs) cover.push_back(canonical_set(circle, (p + cut) % n, (q + cut) % n));
    best = std::move(cover);
  }

  // The omnidirectional set does not fit the arc argument; take it first and
  // solve the customers it misses.
  if (auto full = full_circle_set(circle)) {
    if (static_cast<int>(full->members.size()) == n) return {*full};
    AntennaInstance rest;
    rest.wrap = true;
    std::vector<int> original;
    for (int k = 0; k < n; ++k) {
      if (std::binary_search(full->members.begin(), full->members.end(), k)) continue;
      rest.points.push_back(circle.points[k]);
      rest.aliases.push_back({k});
      original.push_back(k);
    }
    rest.raw = rest.points;
    Cover sub = solve_circle(rest);
    if (sub.size() + 1 < best->size()) {
      Cover cover{*full};
      for (const auto& set : sub) {
        if (set.first == set.last)
          cover.push_back(canonical_set(circle, original[set.first], original[set.first]));
        else
          cover.push_back(canonical_set(circle, original[set.first], original[set.last]));
      }
      best = std::move(cover);
    }
  }
  return *best;
}

}  // namespace

std::pair<AntennaInstance, SentinelInfo> add_sentinels(const AntennaInstance& instance) {
  if (instance.wrap) throw std::invalid_argument("sentinels need a linear instance");
  if (instance.points.empty()) throw InvalidInstance("instance has no points");

  const double first = instance.points.front().theta;
  const double last = instance.points.back().theta;
  const double span = last - first;
  double min_r = instance.points.front().r;
  for (const auto& p : instance.points) min_r = std::min(min_r, p.r);

  SentinelInfo info;
  info.offset = std::max(1.0, 1.0 / (2.0 * min_r) - span / 2.0 + 1.0);
  const double outer_bound = 1.0 / (span + 2.0 * info.offset);
  info.radius = outer_bound / 2.0;

  std::vector<Customer> points;
  points.reserve(instance.points.size() + 2);
  points.push_back({first - info.offset, info.radius, 0.0});
  points.insert(points.end(), instance.points.begin(), instance.points.end());
  points.push_back({last + info.offset, info.radius, 0.0});
  return {line_instance(std::move(points)), info};
}

DpTable::DpTable(int num_points)
    : n_(num_points),
      cost_(static_cast<std::size_t>(num_points) * num_points, -1),
      pieces_(static_cast<std::size_t>(num_points) * num_points) {}

int DpTable::cost(int i, int j) const {
  if (!solved(i, j)) throw std::logic_error("gap queried before it was solved");
  return cost_[index(i, j)];
}

const std::vector<std::pair<int, int>>& DpTable::pieces(int i, int j) const {
  if (!solved(i, j)) throw std::logic_error("gap queried before it was solved");
  return pieces_[index(i, j)];
}

void DpTable::store(int i, int j, int cost, std::vector<std::pair<int, int>> pieces) {
  cost_[index(i, j)] = cost;
  pieces_[index(i, j)] = std::move(pieces);
}

std::vector<DagEdge<int>> gap_graph(const AntennaInstance& instance, std::span<const int> gap,
                                    const DpTable& table) {
  std::vector<DagEdge<int>> edges;
  const int m = static_cast<int>(gap.size());
  for (int k = 0; k < m; ++k) {
    for (int l = k; l < m; ++l) {
      if (!compatible(instance, gap[k], gap[l])) continue;
      const int inner = (k == l) ? 0 : table.cost(gap[k], gap[l]);
      edges.push_back({k, l + 1, 1 + inner});
    }
  }
  return edges;
}

int solve_gap(const AntennaInstance& instance, int i, int j, DpTable& table) {
  if (instance.wrap) throw std::invalid_argument("solve_gap needs a linear instance");
  if (!compatible(instance, i, j)) throw std::invalid_argument("solve_gap: incompatible pair");
  if (table.solved(i, j)) return table.cost(i, j);

  const std::vector<int> gap = gap_set(instance, i, j);
  if (gap.empty()) {
    table.store(i, j, 0, {});
    return 0;
  }

  const auto edges = gap_graph(instance, gap, table);
  const int m = static_cast<int>(gap.size());
  auto path = dag_shortest_path<int>(m + 1, edges);
  // singleton edges (k, k+1) always exist
  assert(path);

  std::vector<std::pair<int, int>> pieces;
  for (const auto& e : path->edges) pieces.emplace_back(gap[e.from], gap[e.to - 1]);
  table.store(i, j, path->cost, std::move(pieces));
  return path->cost;
}

Cover solve_uncapacitated(const AntennaInstance& instance) {
  if (instance.points.empty()) throw InvalidInstance("instance has no points");
  return instance.wrap ? solve_circle(instance) : solve_linear(instance);
}

}  // namespace capcover
