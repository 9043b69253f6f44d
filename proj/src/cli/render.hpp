#pragma once

#include <string>

#include "cli/io.hpp"

namespace capcover::cli {

// Static SVG of an antenna or load report. Wrapping instances are drawn in
// polar form around the base station; linear ones on an angle axis.
std::string render_svg(const Report& report);

}  // namespace capcover::cli
