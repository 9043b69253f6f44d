#pragma once

// Instance files and solution reports as JSON documents. Reals are written
// as shortest round-trip decimal strings; readers accept strings or numbers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "capcover/binsched.hpp"
#include "capcover/load_ptas.hpp"
#include "capcover/model.hpp"

namespace capcover::cli {

using json = nlohmann::ordered_json;

std::string format_real(double x);
double parse_real(const json& value, const std::string& where);

enum class Kind { Antenna, Generic, Load, Binsched };

const char* kind_name(Kind kind);
Kind parse_kind(const std::string& name);

struct InstanceFile {
  Kind kind = Kind::Antenna;
  bool wrap = false;                  // antenna and load
  std::vector<Customer> customers;    // antenna
  GenericInstance generic;            // generic
  std::vector<LoadPoint> load_points; // load
  double window = 0.0;
  int m = 1;
  std::vector<ShipItem> items;        // binsched

  int size() const;
};

json to_json(const InstanceFile& instance);
InstanceFile instance_from_json(const json& doc);

struct ReportSet {
  std::vector<int> elements;  // input indices, ascending
  double load = 0.0;
  std::optional<int> base;        // family member (generic)
  std::optional<Sector> sector;   // antenna
  std::optional<double> alpha;    // window start (load)
  std::optional<double> time;     // shipment time (binsched)
};

struct Report {
  std::string algorithm;
  InstanceFile instance;
  int size = 0;
  std::optional<double> bound;     // max load (load instances)
  std::vector<ReportSet> sets;
  std::optional<double> eps;
  std::optional<double> optimum;
  std::optional<double> ratio;
  json audit;                      // null when no audit ran
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

json to_json(const Report& report);
Report report_from_json(const json& doc);

// "-" reads standard input / writes standard output.
json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace capcover::cli
