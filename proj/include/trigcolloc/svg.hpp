#pragma once

#include <string>
#include <utility>
#include <vector>

namespace trigcolloc {

/// Minimal static line plot: axes, tick labels, one polyline.
std::string render_svg_plot(const std::vector<std::pair<double, double>>& points,
                            const std::string& title = "");

} // namespace trigcolloc
