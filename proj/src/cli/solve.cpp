#include "cli/solve.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "capcover/oracles.hpp"
#include "capcover/uncap_dp.hpp"

namespace capcover::cli {

namespace {

std::optional<Variant> variant_of(const std::string& algo) {
  if (algo == "ffd") return Variant::Ffd;
  if (algo == "refined1") return Variant::Refined1;
  if (algo == "refined2") return Variant::Refined2;
  return std::nullopt;
}

[[noreturn]] void unsupported(const std::string& algo, Kind kind) {
  throw InvalidInstance("algorithm '" + algo + "' does not apply to " + kind_name(kind) +
                        " instances");
}

std::vector<int> uncap_cover(const GenericInstance& g) {
  if (g.n <= kExactCoverLimit) return exact_set_cover(g);
  return greedy_set_cover(g);
}

json audit_json(const AuditReport& a) {
  json out;
  out["slack_ceiling"] = a.slack_ceiling;
  out["loop_amortized"] = a.loop_amortized;
  out["est_bound"] = a.est_bound;
  out["size_bound"] = a.size_bound;
  out["ffd_sets"] = a.ffd_sets;
  out["size_limit"] = format_real(a.size_limit);
  out["max_slack"] = format_real(a.max_slack);
  out["violations"] = a.violations;
  return out;
}

void fill_capacitated(Report& report, const GenericInstance& g, std::span<const int> cover,
                      Variant variant) {
  FfdTrace trace;
  const auto cc = solve_capacitated(g, cover, variant, &trace);
  for (const auto& set : cc.sets) {
    ReportSet rs;
    rs.elements = set.elements;
    rs.load = set.load;
    rs.base = set.base;
    report.sets.push_back(std::move(rs));
  }
  report.size = static_cast<int>(cc.sets.size());
  report.audit = audit_json(audit_ffd(trace, g.demands));
  report.audit["base_sets"] = static_cast<int>(cover.size());
}

double load_of(const std::vector<int>& elements, const InstanceFile& in) {
  double total = 0.0;
  for (int e : elements) {
    switch (in.kind) {
      case Kind::Antenna: total += in.customers[e].demand; break;
      case Kind::Generic: total += in.generic.demands[e]; break;
      case Kind::Load: total += in.load_points[e].demand; break;
      case Kind::Binsched: total += in.items[e].weight; break;
    }
  }
  return total;
}

}  // namespace

std::string default_algo(Kind kind) {
  switch (kind) {
    case Kind::Antenna: return "dp";
    case Kind::Generic: return "refined2";
    case Kind::Load: return "ptas";
    case Kind::Binsched: return "binsched";
  }
  return "dp";
}

Report solve(const InstanceFile& input, const SolveOptions& o) {
  Report report;
  report.instance = input;
  if (o.force_wrap) report.instance.wrap = true;
  const InstanceFile& in = report.instance;
  report.algorithm = o.algo.empty() ? default_algo(in.kind) : o.algo;
  report.seed = o.seed;
  const std::string& algo = report.algorithm;
  const auto started = std::chrono::steady_clock::now();

  if (o.force_wrap && in.kind != Kind::Antenna && in.kind != Kind::Load)
    throw InvalidInstance("--wrap applies to antenna and load instances");

  switch (in.kind) {
    case Kind::Antenna: {
      const auto inst = normalize_instance(in.customers, in.wrap);
      const Cover cover = solve_uncapacitated(inst);
      if (algo == "dp") {
        for (const auto& set : cover) {
          ReportSet rs;
          rs.elements = expand_to_raw(inst, set.members);
          rs.load = load_of(rs.elements, in);
          rs.sector = set.sector(inst);
          report.sets.push_back(std::move(rs));
        }
        report.size = static_cast<int>(cover.size());
      } else if (auto v = variant_of(algo)) {
        const auto family = antenna_family(inst);
        fill_capacitated(report, family.instance, family.family_indices(cover), *v);
        for (auto& rs : report.sets) rs.sector = family.sets[*rs.base].sector(inst);
      } else {
        unsupported(algo, in.kind);
      }
      break;
    }
    case Kind::Generic: {
      auto v = variant_of(algo);
      if (!v) unsupported(algo, in.kind);
      const auto cover = uncap_cover(in.generic);
      fill_capacitated(report, in.generic, cover, *v);
      break;
    }
    case Kind::Load: {
      if (algo != "ptas") unsupported(algo, in.kind);
      const auto inst = make_load_instance(in.load_points, in.window, in.m, in.wrap);
      const auto result = solve_minantload(inst, o.eps);
      for (const auto& set : result.schedule.sets) {
        ReportSet rs;
        for (int p : set.elements) rs.elements.push_back(inst.source[p]);
        std::sort(rs.elements.begin(), rs.elements.end());
        rs.load = load_of(rs.elements, in);
        rs.alpha = set.alpha;
        report.sets.push_back(std::move(rs));
      }
      report.size = static_cast<int>(report.sets.size());
      report.bound = result.schedule.max_load();
      report.eps = o.eps;
      report.audit = json{{"trial_bound", format_real(result.bound)},
                          {"probes", result.probes},
                          {"stretch_checks", result.stretch_checks},
                          {"k", result.params.k},
                          {"eps0", format_real(result.params.eps0)},
                          {"max_fanout", result.max_fanout}};
      break;
    }
    case Kind::Binsched: {
      Variant v = Variant::Refined2;
      if (algo != "binsched") {
        auto chosen = variant_of(algo);
        if (!chosen) unsupported(algo, in.kind);
        v = *chosen;
      }
      const auto plan = solve_binschedule(in.items, v);
      for (const auto& s : plan.shipments) {
        ReportSet rs;
        rs.elements = s.items;
        rs.load = s.load;
        rs.time = s.time;
        report.sets.push_back(std::move(rs));
      }
      report.size = static_cast<int>(report.sets.size());
      break;
    }
  }

  if (o.oracle) {
    report.optimum = oracle_optimum(in, algo);
    const double achieved = report.bound ? *report.bound : report.size;
    if (*report.optimum > 0.0) report.ratio = achieved / *report.optimum;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

double oracle_optimum(const InstanceFile& in, const std::string& algo) {
  switch (in.kind) {
    case Kind::Antenna: {
      const auto inst = normalize_instance(in.customers, in.wrap);
      if (algo == "dp") return brute_uncap(inst);
      return brute_cap(antenna_family(inst).instance);
    }
    case Kind::Generic:
      return brute_cap(in.generic);
    case Kind::Load:
      return brute_minload(make_load_instance(in.load_points, in.window, in.m, in.wrap));
    case Kind::Binsched:
      return brute_cap(shipping_family(in.items).instance);
  }
  return 0.0;
}

std::vector<std::string> verify_report(const Report& r) {
  std::vector<std::string> problems;
  auto complain = [&](const std::string& what) { problems.push_back(what); };
  const InstanceFile& in = r.instance;
  const int n = in.size();
  const bool uncapacitated = in.kind == Kind::Antenna && r.algorithm == "dp";

  if (r.size != static_cast<int>(r.sets.size()))
    complain("size " + std::to_string(r.size) + " but " + std::to_string(r.sets.size()) +
             " sets listed");

  std::vector<int> times_seen(n, 0);
  std::optional<LoadInstance> load_inst;
  std::vector<int> sorted_pos;
  if (in.kind == Kind::Load) {
    load_inst = make_load_instance(in.load_points, in.window, in.m, in.wrap);
    sorted_pos.assign(n, 0);
    for (int p = 0; p < n; ++p) sorted_pos[load_inst->source[p]] = p;
    if (static_cast<int>(r.sets.size()) > in.m)
      complain(std::to_string(r.sets.size()) + " windows but only " + std::to_string(in.m) +
               " antennas");
  }

  double top = 0.0;
  for (std::size_t q = 0; q < r.sets.size(); ++q) {
    const ReportSet& s = r.sets[q];
    const std::string name = "set " + std::to_string(q);
    bool indices_ok = true;
    for (int e : s.elements) {
      if (e < 0 || e >= n) {
        complain(name + ": element " + std::to_string(e) + " out of range");
        indices_ok = false;
      } else {
        ++times_seen[e];
      }
    }
    if (!indices_ok) continue;
    if (std::set<int>(s.elements.begin(), s.elements.end()).size() != s.elements.size())
      complain(name + ": repeats an element");

    const double load = load_of(s.elements, in);
    top = std::max(top, load);
    if (std::abs(load - s.load) > 1e-9 * std::max(1.0, load))
      complain(name + ": reported load " + format_real(s.load) + " but demands sum to " +
               format_real(load));
    if (!uncapacitated && in.kind != Kind::Load && !fits_capacity(load))
      complain(name + ": load " + format_real(load) + " exceeds capacity 1");

    switch (in.kind) {
      case Kind::Antenna: {
        if (!s.sector) {
          complain(name + ": no sector");
          break;
        }
        const Sector& sec = *s.sector;
        if (!(sec.r > 0.0) || !(sec.delta >= 0.0) || !leq_rel(sec.delta * sec.r, 1.0))
          complain(name + ": sector width exceeds 1/r");
        const auto inside = sector_members(in.customers, sec, in.wrap);
        const std::set<int> reach(inside.begin(), inside.end());
        for (int e : s.elements)
          if (!reach.count(e)) complain(name + ": customer " + std::to_string(e) + " lies outside its sector");
        break;
      }
      case Kind::Generic: {
        if (!s.base || *s.base < 0 || *s.base >= static_cast<int>(in.generic.family.size())) {
          complain(name + ": missing or invalid family member");
          break;
        }
        const auto& member = in.generic.family[*s.base];
        const std::set<int> allowed(member.begin(), member.end());
        for (int e : s.elements)
          if (!allowed.count(e))
            complain(name + ": element " + std::to_string(e) + " is not in family member " +
                     std::to_string(*s.base));
        break;
      }
      case Kind::Load: {
        std::vector<int> pts;
        for (int e : s.elements) pts.push_back(sorted_pos[e]);
        if (!window_feasible(*load_inst, pts)) complain(name + ": points do not fit one window");
        if (s.alpha) {
          for (int e : s.elements) {
            const double theta = load_inst->points[sorted_pos[e]].theta;
            const double offset = in.wrap ? ccw_distance(*s.alpha, theta) : theta - *s.alpha;
            if (!(offset >= 0.0 && offset < in.window))
              complain(name + ": point " + std::to_string(e) + " lies outside the window at alpha");
          }
        }
        break;
      }
      case Kind::Binsched: {
        if (!s.time) {
          complain(name + ": no shipment time");
          break;
        }
        for (int e : s.elements) {
          const auto& it = in.items[e];
          if (!(it.arrival <= *s.time && *s.time <= it.deadline()))
            complain(name + ": item " + std::to_string(e) + " is not available at time " +
                     format_real(*s.time));
        }
        break;
      }
    }
  }

  for (int e = 0; e < n; ++e) {
    if (times_seen[e] == 0) complain("element " + std::to_string(e) + " is not covered");
    else if (times_seen[e] > 1 && !uncapacitated)
      complain("element " + std::to_string(e) + " is assigned " + std::to_string(times_seen[e]) + " times");
  }
  if (r.bound && std::abs(*r.bound - top) > 1e-9 * std::max(1.0, top))
    complain("reported bound " + format_real(*r.bound) + " but the heaviest set carries " +
             format_real(top));
  return problems;
}

}  // namespace capcover::cli
