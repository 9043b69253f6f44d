#include "cli/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace capcover::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInstance(what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + ": missing field '" + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) bad(where + ": expected an object");
  std::set<std::string> known(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) bad(where + ": unknown field '" + it.key() + "'");
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) bad(where + "." + key + ": expected an array");
  return v;
}

int parse_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where + ": expected an integer");
  return v.get<int>();
}

bool parse_bool(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) bad(where + "." + key + ": expected true or false");
  return it->get<bool>();
}

std::vector<int> parse_indices(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + ": expected an index list");
  std::vector<int> out;
  for (std::size_t q = 0; q < v.size(); ++q)
    out.push_back(parse_int(v[q], where + "[" + std::to_string(q) + "]"));
  return out;
}

void check_demand(double d, const std::string& where) {
  if (!(d >= 0.0 && d <= 1.0)) bad(where + ": demand must lie in [0, 1]");
}

json indices_json(const std::vector<int>& v) { return json(v); }

}  // namespace

std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_real(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (!value.is_string()) bad(where + ": expected a real (number or decimal string)");
  const std::string& s = value.get_ref<const std::string&>();
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    bad(where + ": '" + s + "' is not a decimal real");
  return x;
}

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::Antenna: return "antenna";
    case Kind::Generic: return "generic";
    case Kind::Load: return "load";
    case Kind::Binsched: return "binsched";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  for (Kind k : {Kind::Antenna, Kind::Generic, Kind::Load, Kind::Binsched})
    if (name == kind_name(k)) return k;
  bad("unknown instance kind '" + name + "'");
}

int InstanceFile::size() const {
  switch (kind) {
    case Kind::Antenna: return static_cast<int>(customers.size());
    case Kind::Generic: return generic.n;
    case Kind::Load: return static_cast<int>(load_points.size());
    case Kind::Binsched: return static_cast<int>(items.size());
  }
  return 0;
}

json to_json(const InstanceFile& in) {
  json out;
  out["kind"] = kind_name(in.kind);
  switch (in.kind) {
    case Kind::Antenna: {
      out["wrap"] = in.wrap;
      json pts = json::array();
      for (const auto& c : in.customers)
        pts.push_back({{"theta", format_real(c.theta)},
                       {"r", format_real(c.r)},
                       {"demand", format_real(c.demand)}});
      out["points"] = std::move(pts);
      break;
    }
    case Kind::Generic: {
      out["n"] = in.generic.n;
      json d = json::array();
      for (double x : in.generic.demands) d.push_back(format_real(x));
      out["demands"] = std::move(d);
      json sets = json::array();
      for (const auto& s : in.generic.family) sets.push_back(indices_json(s));
      out["sets"] = std::move(sets);
      break;
    }
    case Kind::Load: {
      out["wrap"] = in.wrap;
      out["windowWidth"] = format_real(in.window);
      out["m"] = in.m;
      json pts = json::array();
      for (const auto& p : in.load_points)
        pts.push_back({{"theta", format_real(p.theta)}, {"demand", format_real(p.demand)}});
      out["points"] = std::move(pts);
      break;
    }
    case Kind::Binsched: {
      json items = json::array();
      for (const auto& it : in.items)
        items.push_back({{"weight", format_real(it.weight)},
                         {"arrival", format_real(it.arrival)},
                         {"patience", format_real(it.patience)}});
      out["items"] = std::move(items);
      break;
    }
  }
  return out;
}

InstanceFile instance_from_json(const json& doc) {
  if (!doc.is_object()) bad("instance: expected an object");
  const json& kind = field(doc, "kind", "instance");
  if (!kind.is_string()) bad("instance.kind: expected a string");
  InstanceFile in;
  in.kind = parse_kind(kind.get<std::string>());

  switch (in.kind) {
    case Kind::Antenna: {
      only_keys(doc, {"kind", "wrap", "points"}, "instance");
      in.wrap = parse_bool(doc, "wrap", "instance");
      const json& pts = array_field(doc, "points", "instance");
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const std::string where = "points[" + std::to_string(j) + "]";
        only_keys(pts[j], {"theta", "r", "demand"}, where);
        Customer c;
        c.theta = parse_real(field(pts[j], "theta", where), where + ".theta");
        c.r = parse_real(field(pts[j], "r", where), where + ".r");
        c.demand = parse_real(field(pts[j], "demand", where), where + ".demand");
        if (!std::isfinite(c.theta)) bad(where + ": angle must be finite");
        if (!(c.r > 0.0) || !std::isfinite(c.r)) bad(where + ": radius must be positive");
        check_demand(c.demand, where);
        in.customers.push_back(c);
      }
      if (in.customers.empty()) bad("instance: no points");
      break;
    }
    case Kind::Generic: {
      only_keys(doc, {"kind", "n", "demands", "sets"}, "instance");
      in.generic.n = parse_int(field(doc, "n", "instance"), "instance.n");
      const json& d = array_field(doc, "demands", "instance");
      for (std::size_t i = 0; i < d.size(); ++i)
        in.generic.demands.push_back(parse_real(d[i], "demands[" + std::to_string(i) + "]"));
      const json& sets = array_field(doc, "sets", "instance");
      for (std::size_t f = 0; f < sets.size(); ++f)
        in.generic.family.push_back(parse_indices(sets[f], "sets[" + std::to_string(f) + "]"));
      in.generic.validate();
      break;
    }
    case Kind::Load: {
      only_keys(doc, {"kind", "wrap", "windowWidth", "m", "points"}, "instance");
      in.wrap = parse_bool(doc, "wrap", "instance");
      in.window = parse_real(field(doc, "windowWidth", "instance"), "instance.windowWidth");
      in.m = parse_int(field(doc, "m", "instance"), "instance.m");
      const json& pts = array_field(doc, "points", "instance");
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const std::string where = "points[" + std::to_string(j) + "]";
        only_keys(pts[j], {"theta", "demand"}, where);
        LoadPoint p;
        p.theta = parse_real(field(pts[j], "theta", where), where + ".theta");
        p.demand = parse_real(field(pts[j], "demand", where), where + ".demand");
        check_demand(p.demand, where);
        in.load_points.push_back(p);
      }
      make_load_instance(in.load_points, in.window, in.m, in.wrap);
      break;
    }
    case Kind::Binsched: {
      only_keys(doc, {"kind", "items"}, "instance");
      const json& items = array_field(doc, "items", "instance");
      for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string where = "items[" + std::to_string(i) + "]";
        only_keys(items[i], {"weight", "arrival", "patience"}, where);
        ShipItem it;
        it.weight = parse_real(field(items[i], "weight", where), where + ".weight");
        it.arrival = parse_real(field(items[i], "arrival", where), where + ".arrival");
        it.patience = parse_real(field(items[i], "patience", where), where + ".patience");
        in.items.push_back(it);
      }
      validate_items(in.items);
      break;
    }
  }
  return in;
}

json to_json(const Report& r) {
  json out;
  out["algorithm"] = r.algorithm;
  out["size"] = r.size;
  out["bound"] = r.bound ? json(format_real(*r.bound)) : json(nullptr);
  out["eps"] = r.eps ? json(format_real(*r.eps)) : json(nullptr);
  json sets = json::array();
  for (const auto& s : r.sets) {
    json js;
    js["elements"] = s.elements;
    js["load"] = format_real(s.load);
    if (s.base) js["base"] = *s.base;
    if (s.sector)
      js["sector"] = {{"r", format_real(s.sector->r)},
                      {"alpha", format_real(s.sector->alpha)},
                      {"delta", format_real(s.sector->delta)}};
    if (s.alpha) js["alpha"] = format_real(*s.alpha);
    if (s.time) js["time"] = format_real(*s.time);
    sets.push_back(std::move(js));
  }
  out["sets"] = std::move(sets);
  out["optimum"] = r.optimum ? json(format_real(*r.optimum)) : json(nullptr);
  out["ratio"] = r.ratio ? json(format_real(*r.ratio)) : json(nullptr);
  out["audit"] = r.audit;
  out["elapsed_ms"] = format_real(r.elapsed_ms);
  out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  out["instance"] = to_json(r.instance);
  return out;
}

Report report_from_json(const json& doc) {
  only_keys(doc, {"algorithm", "size", "bound", "eps", "sets", "optimum", "ratio", "audit",
                  "elapsed_ms", "seed", "instance"},
            "report");
  Report r;
  const json& algo = field(doc, "algorithm", "report");
  if (!algo.is_string()) bad("report.algorithm: expected a string");
  r.algorithm = algo.get<std::string>();
  r.instance = instance_from_json(field(doc, "instance", "report"));
  r.size = parse_int(field(doc, "size", "report"), "report.size");

  auto optional_real = [&](const char* key) -> std::optional<double> {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return std::nullopt;
    return parse_real(*it, std::string("report.") + key);
  };
  r.bound = optional_real("bound");
  r.eps = optional_real("eps");
  r.optimum = optional_real("optimum");
  r.ratio = optional_real("ratio");
  if (auto it = doc.find("elapsed_ms"); it != doc.end())
    r.elapsed_ms = parse_real(*it, "report.elapsed_ms");
  if (auto it = doc.find("audit"); it != doc.end()) r.audit = *it;
  if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) bad("report.seed: expected a nonnegative integer");
    r.seed = it->get<std::uint64_t>();
  }

  const json& sets = array_field(doc, "sets", "report");
  for (std::size_t q = 0; q < sets.size(); ++q) {
    const std::string where = "sets[" + std::to_string(q) + "]";
    only_keys(sets[q], {"elements", "load", "base", "sector", "alpha", "time"}, where);
    ReportSet s;
    s.elements = parse_indices(field(sets[q], "elements", where), where + ".elements");
    s.load = parse_real(field(sets[q], "load", where), where + ".load");
    if (auto it = sets[q].find("base"); it != sets[q].end()) s.base = parse_int(*it, where + ".base");
    if (auto it = sets[q].find("sector"); it != sets[q].end()) {
      only_keys(*it, {"r", "alpha", "delta"}, where + ".sector");
      Sector sec;
      sec.r = parse_real(field(*it, "r", where + ".sector"), where + ".sector.r");
      sec.alpha = parse_real(field(*it, "alpha", where + ".sector"), where + ".sector.alpha");
      sec.delta = parse_real(field(*it, "delta", where + ".sector"), where + ".sector.delta");
      s.sector = sec;
    }
    if (auto it = sets[q].find("alpha"); it != sets[q].end())
      s.alpha = parse_real(*it, where + ".alpha");
    if (auto it = sets[q].find("time"); it != sets[q].end())
      s.time = parse_real(*it, where + ".time");
    r.sets.push_back(std::move(s));
  }
  return r;
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace capcover::cli
