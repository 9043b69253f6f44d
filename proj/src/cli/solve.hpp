#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/io.hpp"

namespace capcover::cli {

struct SolveOptions {
  std::string algo;  // empty picks the default for the instance kind
  double eps = 0.3;
  bool force_wrap = false;
  bool oracle = false;
  std::optional<std::uint64_t> seed;
};

std::string default_algo(Kind kind);

// Runs the requested algorithm; the report embeds the instance.
Report solve(const InstanceFile& instance, const SolveOptions& options);

// Exact optimum for the problem `algo` solves on this instance: a set count,
// or a maximum load for load instances. Throws GuardExceeded past the limits.
double oracle_optimum(const InstanceFile& instance, const std::string& algo);

// Problems with the embedded solution; empty when it checks out.
std::vector<std::string> verify_report(const Report& report);

}  // namespace capcover::cli
