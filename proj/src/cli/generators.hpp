#pragma once

#include <cstdint>
#include <string>

#include "cli/io.hpp"

namespace capcover::cli {

struct GenOptions {
  Kind kind = Kind::Antenna;
  std::string pattern = "uniform";  // uniform | ffd-worst | p2-worst
  int n = 8;
  std::uint64_t seed = 1;
  bool wrap = false;
  double eps = 1e-5;        // offset of the adversarial demands
  double max_demand = 0.7;  // uniform demands lie in [0.05, max_demand]
  int sets = 0;             // generic family size; 0 picks max(2, n / 2)
  double window = 0.0;      // load window; 0 picks a default for the mode
  int m = 3;
};

// The four-element repeating group of an adversarial pattern.
std::vector<double> pattern_group(const std::string& pattern, double eps);

InstanceFile generate(const GenOptions& options);

}  // namespace capcover::cli
