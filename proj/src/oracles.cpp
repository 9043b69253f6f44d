#include "capcover/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace capcover {

namespace {

void guard(int size, int limit, const char* what) {
  if (size > limit) {
    std::ostringstream msg;
    msg << what << ": size " << size << " exceeds the oracle limit " << limit;
    throw GuardExceeded(msg.str());
  }
}

using Mask = std::uint32_t;

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask{1} << e;
  return m;
}

// Fewest masks covering `full`, breadth-first over covered subsets. Always
// branches on the lowest uncovered element.
std::optional<std::vector<int>> min_mask_cover(int n, const std::vector<Mask>& sets) {
  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::vector<int>> holding(n);
  for (int s = 0; s < static_cast<int>(sets.size()); ++s)
    for (int e = 0; e < n; ++e)
      if (sets[s] >> e & 1) holding[e].push_back(s);

  std::vector<int> via(std::size_t{1} << n, -1);
  std::vector<Mask> from(std::size_t{1} << n, 0);
  std::vector<char> seen(std::size_t{1} << n, 0);
  std::deque<Mask> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Mask cur = queue.front();
    queue.pop_front();
    if (cur == full) {
      std::vector<int> chosen;
      for (Mask at = cur; at != 0; at = from[at]) chosen.push_back(via[at]);
      std::reverse(chosen.begin(), chosen.end());
      return chosen;
    }
    int e = 0;
    while (cur >> e & 1) ++e;
    for (int s : holding[e]) {
      const Mask next = cur | sets[s];
      if (seen[next]) continue;
      seen[next] = 1;
      via[next] = s;
      from[next] = cur;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace

int brute_uncap(const AntennaInstance& instance) {
  const int n = instance.size();
  guard(n, kBruteUncapLimit, "brute_uncap");
  if (n == 0) return 0;

  std::set<Mask> candidates;
  for (const auto& start : instance.points) {
    for (const auto& reach : instance.points) {
      Sector sector{reach.r, start.theta, 1.0 / reach.r};
      auto members = sector_members(instance, sector);
      if (!members.empty()) candidates.insert(mask_of(members));
    }
  }
  std::vector<Mask> sets(candidates.begin(), candidates.end());
  auto cover = min_mask_cover(n, sets);
  if (!cover) throw std::logic_error("sector candidates fail to cover the instance");
  return static_cast<int>(cover->size());
}

int brute_cap(const GenericInstance& instance) {
  instance.validate();
  const int n = instance.n;
  guard(n, kBruteCapLimit, "brute_cap");

  std::vector<char> allowed(std::size_t{1} << n, 0);
  for (const auto& member : instance.family) {
    const Mask f = mask_of(member);
    for (Mask sub = f;; sub = (sub - 1) & f) {
      allowed[sub] = 1;
      if (sub == 0) break;
    }
  }

  const auto& d = instance.demands;
  int best = n + 1;
  std::vector<Mask> blocks;
  std::vector<double> loads;
  std::function<void(int)> place = [&](int e) {
    if (static_cast<int>(blocks.size()) >= best) return;
    if (e == n) {
      best = static_cast<int>(blocks.size());
      return;
    }
    const Mask bit = Mask{1} << e;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!allowed[blocks[b] | bit] || !fits_capacity(loads[b] + d[e])) continue;
      blocks[b] |= bit;
      loads[b] += d[e];
      place(e + 1);
      blocks[b] &= ~bit;
      loads[b] -= d[e];
    }
    if (static_cast<int>(blocks.size()) + 1 < best) {
      blocks.push_back(bit);
      loads.push_back(d[e]);
      place(e + 1);
      blocks.pop_back();
      loads.pop_back();
    }
  };
  place(0);
  return best;
}

std::vector<int> exact_set_cover(const GenericInstance& instance) {
  instance.validate();
  guard(instance.n, kExactCoverLimit, "exact_set_cover");
  std::vector<Mask> sets;
  for (const auto& member : instance.family) sets.push_back(mask_of(member));
  auto cover = min_mask_cover(instance.n, sets);
  if (!cover) throw InvalidInstance("family does not cover the universe");
  return *cover;
}

double brute_minload(const LoadInstance& instance) {
  const int n = instance.size();
  guard(n, kBruteLoadLimit, "brute_minload");
  guard(instance.m, kBruteLoadAntennas, "brute_minload antennas");

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> block(n, 0);
  std::vector<double> loads;
  std::function<void(int)> place = [&](int j) {
    double top = 0.0;
    for (double l : loads) top = std::max(top, l);
    if (top >= best) return;
    if (j == n) {
      std::vector<std::vector<int>> groups(loads.size());
      for (int q = 0; q < n; ++q) groups[block[q]].push_back(q);
      for (const auto& g : groups)
        if (!window_feasible(instance, g)) return;
      best = top;
      return;
    }
    const double dj = instance.points[j].demand;
    for (std::size_t b = 0; b < loads.size(); ++b) {
      block[j] = static_cast<int>(b);
      loads[b] += dj;
      place(j + 1);
      loads[b] -= dj;
    }
    if (static_cast<int>(loads.size()) < instance.m) {
      block[j] = static_cast<int>(loads.size());
      loads.push_back(dj);
      place(j + 1);
      loads.pop_back();
    }
  };
  place(0);
  if (std::isinf(best)) throw Infeasible("no partition into window-feasible sets");
  return best;
}

int brute_decreased_sets(const DecreasedInstance& decreased, const LoadInstance& instance) {
  if (instance.wrap) throw std::invalid_argument("brute_decreased_sets handles linear instances");
  const int n = instance.size();
  guard(n, kBruteLoadLimit, "brute_decreased_sets");

  struct Block {
    double large = 0.0;
    double small = 0.0;
    double last_small = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double cost() const { return large + small - last_small; }
  };
  const double limit = decreased.bound * (1.0 + 1e-12);

  int best = n + 1;
  std::vector<Block> blocks;
  std::function<void(int)> place = [&](int j) {
    if (static_cast<int>(blocks.size()) >= best) return;
    if (j == n) {
      best = static_cast<int>(blocks.size());
      return;
    }
    const double theta = instance.points[j].theta;
    auto extend = [&](Block b) {
      if (decreased.small(j)) {
        b.small += decreased.demand[j];
        b.last_small = decreased.demand[j];
      } else {
        b.large += decreased.rounded[j];
      }
      b.hi = theta;
      return b;
    };
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      Block next = extend(blocks[b]);
      if (next.cost() > limit || !(next.hi - next.lo < instance.window)) continue;
      const Block saved = blocks[b];
      blocks[b] = next;
      place(j + 1);
      blocks[b] = saved;
    }
    Block fresh;
    fresh.lo = theta;
    fresh = extend(fresh);
    if (fresh.cost() <= limit) {
      blocks.push_back(fresh);
      place(j + 1);
      blocks.pop_back();
    }
  };
  place(0);
  return best;
}

int brute_stab(const std::vector<ShipItem>& items) {
  validate_items(items);
  const int n = static_cast<int>(items.size());
  guard(n, kBruteStabLimit, "brute_stab");
  const auto times = candidate_times(items);
  const int c = static_cast<int>(times.size());

  std::vector<Mask> stabbed(c);
  for (int t = 0; t < c; ++t) stabbed[t] = mask_of(window_set(items, times[t]));
  const Mask full = (Mask{1} << n) - 1;

  std::vector<int> pick;
  std::function<bool(int, int, Mask)> choose = [&](int from, int left, Mask got) {
    if (left == 0) return got == full;
    for (int t = from; t <= c - left; ++t)
      if (choose(t + 1, left - 1, got | stabbed[t])) return true;
    return false;
  };
  for (int size = 1; size <= n; ++size)
    if (choose(0, size, 0)) return size;
  throw std::logic_error("endpoint times fail to stab every window");
}

double knapsack_exact(std::span<const KnapsackItem> items, double capacity) {
  const int n = static_cast<int>(items.size());
  guard(n, kExactKnapsackLimit, "knapsack_exact");
  double best = 0.0;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    double w = 0.0;
    double v = 0.0;
    for (int i = 0; i < n; ++i) {
      if (subset >> i & 1) {
        w += items[i].weight;
        v += items[i].value;
      }
    }
    if (fits_capacity(w, capacity)) best = std::max(best, v);
  }
  return best;
}

double est(long lambda) {
  const double l = static_cast<double>(lambda);
  return (l - 1.0) / (l * (l + 1.0));
}

AuditReport audit_ffd(const FfdTrace& trace, std::span<const double> demands,
                      std::optional<int> optimum, int total_sets) {
  constexpr double kSlop = 1e-9;
  AuditReport report;
  std::ostringstream why;

  for (const auto& loop : trace.loops) {
    LoopAudit audit;
    audit.base = loop.base;
    const int sets = static_cast<int>(loop.emitted.size());
    for (int j = 0; j < sets; ++j) {
      const auto& q = loop.emitted[j];
      const double d = total_demand(q, demands);
      const double s = total_slack(q, demands);
      audit.demand.push_back(d);
      audit.slack.push_back(s);
      audit.deficit.push_back(1.0 - d - s);
      audit.amortized += d + s;
      report.max_slack = std::max(report.max_slack, s);
      if (s > kSlackCeiling + kSlop) {
        report.slack_ceiling = false;
        why.str("");
        why << "base " << loop.base << " set " << j << ": slack " << s << " above " << kSlackCeiling;
        report.violations.push_back(why.str());
      }
      if (j + 1 < sets && !loop.emitted[j + 1].empty()) {
        // The first element of the next set is the largest one this set turned away.
        const double waiting = demands[loop.emitted[j + 1].front()];
        if (waiting > 0.0) {
          const long lambda = demand_class(waiting);
          if (!(s + kSlop > est(lambda))) {
            report.est_bound = false;
            why.str("");
            why << "base " << loop.base << " set " << j << ": slack " << s << " not above est("
                << lambda << ") = " << est(lambda);
            report.violations.push_back(why.str());
          }
        }
      }
    }
    audit.holds = audit.amortized + kSlop >= sets - 1;
    if (!audit.holds) {
      report.loop_amortized = false;
      why.str("");
      why << "base " << loop.base << ": " << sets << " sets but d + s sums to " << audit.amortized;
      report.violations.push_back(why.str());
    }
    report.ffd_sets += sets;
    report.loops.push_back(std::move(audit));
  }

  report.size_limit = trace.base_sets + total_demand(trace.pool, demands) +
                      total_slack(trace.pool, demands);
  report.size_bound = report.ffd_sets <= report.size_limit + kSlop;
  if (!report.size_bound) {
    why.str("");
    why << "FFD emitted " << report.ffd_sets << " sets, limit " << report.size_limit;
    report.violations.push_back(why.str());
  }

  if (optimum && *optimum > 0) {
    const int produced = total_sets >= 0 ? total_sets : report.ffd_sets;
    report.ratio = static_cast<double>(produced) / *optimum;
  }
  return report;
}

}  // namespace capcover
