#include "capcover/load_ptas.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace capcover {

namespace {

constexpr double kBoundSlack = 1e-12;

bool within_bound(double cost, double bound) { return cost <= bound * (1.0 + kBoundSlack); }

// Points in the order a cut of the circle (or the line itself) visits them,
// with angles unrolled so they never decrease.
struct LineView {
  std::vector<int> order;
  std::vector<double> theta;
};

LineView line_view(const LoadInstance& instance, int cut) {
  LineView view;
  const int n = instance.size();
  for (int step = 0; step < n; ++step) {
    const int j = (cut + step) % n;
    double theta = instance.points[j].theta;
    if (cut + step >= n) theta += kFullCircle;
    view.order.push_back(j);
    view.theta.push_back(theta);
  }
  return view;
}

int greedy_windows(const std::vector<double>& theta, double window) {
  int count = 0;
  std::size_t i = 0;
  while (i < theta.size()) {
    const double start = theta[i];
    ++count;
    while (i < theta.size() && theta[i] - start < window) ++i;
  }
  return count;
}

using Counts = std::vector<int>;

struct SearchNode {
  Counts parent;
  std::vector<int> added;  // positions in the view
  int depth = 0;
};

// Breadth-first search over class counts on one line view.
std::optional<std::vector<std::vector<int>>> search_counts(const DecreasedInstance& dec,
                                                          const LineView& view, double window,
                                                          int limit, CountSearchStats* stats) {
  const int n = static_cast<int>(view.order.size());
  const int k = dec.k;
  const double bound = dec.bound;

  std::vector<std::vector<int>> class_pos(k + 1);
  for (int pos = 0; pos < n; ++pos) class_pos[dec.point_class[view.order[pos]]].push_back(pos);

  Counts start(k + 1, 0);
  Counts target(k + 1);
  for (int c = 0; c <= k; ++c) target[c] = static_cast<int>(class_pos[c].size());

  std::map<Counts, SearchNode> seen;
  seen[start] = SearchNode{};
  std::deque<Counts> queue{start};

  auto rebuild = [&](const Counts& last) {
    std::vector<std::vector<int>> sets;
    for (Counts at = last; at != start; at = seen[at].parent) {
      std::vector<int> set;
      for (int pos : seen[at].added) set.push_back(pos);
      sets.push_back(std::move(set));
    }
    std::reverse(sets.begin(), sets.end());
    return sets;
  };

  if (start == target) return std::vector<std::vector<int>>{};

  while (!queue.empty()) {
    const Counts counts = queue.front();
    queue.pop_front();
    const int depth = seen[counts].depth;
    if (depth >= limit) continue;

    int covered_max = -1;
    for (int c = 0; c <= k; ++c)
      if (counts[c] > 0) covered_max = std::max(covered_max, class_pos[c][counts[c] - 1]);

    long fanout = 0;
    std::optional<Counts> reached;
    std::vector<int> delta(k, 0);

    std::function<void(int, double, double, double, int)> choose =
        [&](int c, double cost, double lo, double hi, int top) {
          if (reached) return;
          if (c == k) {
            const bool any_large = std::any_of(delta.begin(), delta.end(), [](int d) { return d > 0; });
            // Every feasible run of small elements, shortest first.
            int taken = 0;
            double paid_small = 0.0;
            int run_top = top;
            while (true) {
              if ((any_large || taken > 0) && run_top > covered_max) {
                ++fanout;
                Counts next = counts;
                for (int i = 0; i < k; ++i) next[i] += delta[i];
                next[k] += taken;
                if (!seen.count(next)) {
                  SearchNode node;
                  node.parent = counts;
                  node.depth = depth + 1;
                  for (int i = 0; i < k; ++i)
                    for (int q = 0; q < delta[i]; ++q)
                      node.added.push_back(class_pos[i][counts[i] + q]);
                  for (int q = 0; q < taken; ++q) node.added.push_back(class_pos[k][counts[k] + q]);
                  std::sort(node.added.begin(), node.added.end());
                  seen.emplace(next, std::move(node));
                  if (next == target) {
                    reached = next;
                    return;
                  }
                  queue.push_back(next);
                }
              }
              if (counts[k] + taken >= target[k]) break;
              const int pos = class_pos[k][counts[k] + taken];
              const double next_lo = std::min(lo, view.theta[pos]);
              const double next_hi = std::max(hi, view.theta[pos]);
              if (!within_bound(cost + paid_small, bound) || !(next_hi - next_lo < window)) break;
              paid_small += dec.demand[view.order[pos]];
              lo = next_lo;
              hi = next_hi;
              run_top = std::max(run_top, pos);
              ++taken;
            }
            return;
          }

          const double step = dec.thresholds[c + 1];
          for (int d = 0; counts[c] + d <= target[c]; ++d) {
            if (d > 0) {
              const int pos = class_pos[c][counts[c] + d - 1];
              cost += step;
              lo = std::min(lo, view.theta[pos]);
              hi = std::max(hi, view.theta[pos]);
              top = std::max(top, pos);
              if (!within_bound(cost, bound) || !(hi - lo < window)) break;
            }
            delta[c] = d;
            choose(c + 1, cost, lo, hi, top);
            if (reached) return;
          }
          delta[c] = 0;
        };

    choose(0, 0.0, std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(), -1);
    if (stats) stats->max_fanout = std::max(stats->max_fanout, fanout);
    if (reached) {
      if (stats) stats->states += static_cast<long>(seen.size());
      return rebuild(*reached);
    }
  }
  if (stats) stats->states += static_cast<long>(seen.size());
  return std::nullopt;
}

LoadSchedule to_schedule(const LoadInstance& instance, const LineView& view,
                         const std::vector<std::vector<int>>& sets) {
  LoadSchedule schedule;
  for (const auto& positions : sets) {
    LoadSet set;
    set.alpha = view.theta[positions.front()];
    if (instance.wrap) set.alpha = wrap_angle(set.alpha);
    for (int pos : positions) {
      set.elements.push_back(view.order[pos]);
      set.load += instance.points[view.order[pos]].demand;
    }
    std::sort(set.elements.begin(), set.elements.end());
    schedule.sets.push_back(std::move(set));
  }
  return schedule;
}

}  // namespace

LoadInstance make_load_instance(std::span<const LoadPoint> points, double window, int m,
                                bool wrap) {
  if (points.empty()) throw InvalidInstance("load instance has no points");
  if (!(window > 0.0) || !std::isfinite(window))
    throw InvalidInstance("window width must be positive");
  if (m < 1) throw InvalidInstance("need at least one antenna");

  LoadInstance out;
  out.window = window;
  out.m = m;
  out.wrap = wrap;
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> angle(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto& p = points[j];
    if (!std::isfinite(p.theta)) throw InvalidInstance("non-finite angle");
    if (!(p.demand >= 0.0) || !std::isfinite(p.demand)) {
      std::ostringstream msg;
      msg << "point " << j << ": demand must be nonnegative";
      throw InvalidInstance(msg.str());
    }
    angle[j] = wrap ? wrap_angle(p.theta) : p.theta;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
  for (int j : order) {
    out.points.push_back({angle[j], points[j].demand});
    out.source.push_back(j);
  }
  return out;
}

std::optional<DecreasedInstance> build_decreased(const LoadInstance& instance, double bound,
                                                 double eps0, int k) {
  if (!(bound > 0.0)) throw std::invalid_argument("trial bound must be positive");
  if (!(eps0 > 0.0)) throw std::invalid_argument("eps0 must be positive");
  if (k < 1) throw std::invalid_argument("need at least one large class");

  DecreasedInstance dec;
  dec.bound = bound;
  dec.eps0 = eps0;
  dec.k = k;
  for (int i = 0; i <= k; ++i) dec.thresholds.push_back(bound * std::pow(1.0 + eps0, -i));
  dec.classes.assign(k + 1, {});

  for (int j = 0; j < instance.size(); ++j) {
    const double d = instance.points[j].demand;
    if (!within_bound(d, bound)) return std::nullopt;
    int c = k;
    for (int i = 0; i < k; ++i) {
      if (d >= dec.thresholds[i + 1]) {
        c = i;
        break;
      }
    }
    dec.point_class.push_back(c);
    dec.demand.push_back(d);
    dec.rounded.push_back(c < k ? dec.thresholds[c + 1] : d);
    dec.classes[c].push_back(j);
  }
  return dec;
}

double decreased_cost(std::span<const int> elements, const DecreasedInstance& decreased) {
  double cost = 0.0;
  int last_small = -1;
  for (int j : elements) {
    if (decreased.small(j)) {
      cost += decreased.demand[j];
      last_small = std::max(last_small, j);
    } else {
      cost += decreased.rounded[j];
    }
  }
  if (last_small >= 0) cost -= decreased.demand[last_small];
  return cost;
}

bool window_feasible(const LoadInstance& instance, std::span<const int> elements) {
  if (elements.empty()) return true;
  std::vector<double> angles;
  for (int j : elements) angles.push_back(instance.points.at(j).theta);
  std::sort(angles.begin(), angles.end());
  if (!instance.wrap) return angles.back() - angles.front() < instance.window;
  if (instance.window >= kFullCircle) return true;
  double widest_gap = kFullCircle - (angles.back() - angles.front());
  for (std::size_t q = 1; q < angles.size(); ++q)
    widest_gap = std::max(widest_gap, angles[q] - angles[q - 1]);
  return kFullCircle - widest_gap < instance.window;
}

double LoadSchedule::max_load() const {
  double top = 0.0;
  for (const auto& s : sets) top = std::max(top, s.load);
  return top;
}

std::optional<LoadSchedule> ordered_partition(const DecreasedInstance& decreased,
                                              const LoadInstance& instance, int limit,
                                              CountSearchStats* stats) {
  const int cuts = (instance.wrap && instance.window < kFullCircle) ? instance.size() : 1;
  std::optional<LoadSchedule> best;
  for (int cut = 0; cut < cuts; ++cut) {
    const LineView view = line_view(instance, cut);
    const int cap = best ? static_cast<int>(best->sets.size()) - 1 : limit;
    if (cap < 1) break;
    auto sets = search_counts(decreased, view, instance.window, cap, stats);
    if (sets) best = to_schedule(instance, view, *sets);
  }
  return best;
}

std::optional<LoadSchedule> feasible_load(const DecreasedInstance& decreased,
                                          const LoadInstance& instance,
                                          CountSearchStats* stats) {
  return ordered_partition(decreased, instance, instance.m, stats);
}

double PtasParameters::eps1() const { return std::pow(1.0 + eps0, -k); }

PtasParameters choose_parameters(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  PtasParameters p;
  p.k = 2;
  while ((std::log(p.k) + 1.0) / p.k > eps) ++p.k;
  p.eps0 = eps / 2.0;
  while (p.eps1() > eps / 2.0) ++p.k;
  return p;
}

int min_windows(const LoadInstance& instance) {
  if (instance.size() == 0) return 0;
  if (!instance.wrap) return greedy_windows(line_view(instance, 0).theta, instance.window);
  if (instance.window >= kFullCircle) return 1;
  int best = std::numeric_limits<int>::max();
  for (int cut = 0; cut < instance.size(); ++cut)
    best = std::min(best, greedy_windows(line_view(instance, cut).theta, instance.window));
  return best;
}

MinLoadResult solve_minantload(const LoadInstance& instance, double eps) {
  MinLoadResult result;
  result.params = choose_parameters(eps);
  if (instance.size() == 0) throw InvalidInstance("load instance has no points");
  const int needed = min_windows(instance);
  if (needed > instance.m) {
    std::ostringstream msg;
    msg << "points need " << needed << " windows but only " << instance.m << " are available";
    throw Infeasible(msg.str());
  }

  double lo = 0.0;
  double hi = 0.0;
  for (const auto& p : instance.points) {
    lo = std::max(lo, p.demand);
    hi += p.demand;
  }

  std::optional<LoadSchedule> best;
  auto probe = [&](double bound) -> bool {
    ++result.probes;
    auto dec = build_decreased(instance, bound, result.params.eps0, result.params.k);
    if (!dec) return false;
    CountSearchStats stats;
    auto schedule = feasible_load(*dec, instance, &stats);
    result.max_fanout = std::max(result.max_fanout, stats.max_fanout);
    if (!schedule) return false;
    const double stretch = (1.0 + dec->eps()) * bound;
    for (const auto& set : schedule->sets) {
      ++result.stretch_checks;
      if (!within_bound(set.load, stretch))
        throw std::logic_error("emitted set exceeds the stretched bound");
    }
    if (!best || schedule->max_load() < best->max_load()) best = std::move(schedule);
    return true;
  };

  if (hi <= 0.0) {
    // All demands vanish; any bound works.
    probe(1.0);
    result.bound = 0.0;
    result.schedule = std::move(*best);
    return result;
  }

  if (probe(lo)) {
    result.bound = lo;
    result.schedule = std::move(*best);
    return result;
  }
  if (!probe(hi)) throw std::logic_error("no schedule at the total-demand bound");
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid))
      hi = mid;
    else
      lo = mid;
  }
  result.bound = hi;
  result.schedule = std::move(*best);
  return result;
}

}  // namespace capcover
