// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "riscomp/experiments.hpp"

namespace riscomp {

// Renders a sweep as a static SVG. One-axis sweeps become line charts
// (one polyline per scheme, or per cooperative-set size for the split
// experiment); the two-axis contour sweep becomes a filled heat map with
// overlaid level lines. Output is deterministic for a fixed input.
// Throws std::invalid_argument on an empty result.
std::string render_svg(const SweepResult &result);

// Writes render_svg output to <dir>/<stem>.svg and returns the path.
std::string write_plot(const SweepResult &result, const std::string &dir,
                       const std::string &stem);

}  // namespace riscomp
