#include "trigcolloc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace trigcolloc {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

std::string render_svg_plot(const std::vector<std::pair<double, double>>& points,
                            const std::string& title) {
    if (points.size() < 2)
        throw std::invalid_argument("render_svg_plot: need at least two points");

    constexpr double width = 720.0, height = 480.0;
    constexpr double ml = 70.0, mr = 25.0, mt = 40.0, mb = 50.0;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    double xmin = points.front().first, xmax = xmin;
    double ymin = points.front().second, ymax = ymin;
    for (const auto& [x, y] : points) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + pw * (x - xmin) / (xmax - xmin); };
    auto py = [&](double y) { return mt + ph * (1.0 - (y - ymin) / (ymax - ymin)); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        s += "<text x=\"" + fmt(width / 2) +
             "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
             title + "</text>\n";

    // axes
    s += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(ml + pw) +
         "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) + "\" y2=\"" +
         fmt(mt + ph) + "\" stroke=\"black\"/>\n";

    constexpr int nticks = 5;
    for (int i = 0; i <= nticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / nticks;
        const double fy = ymin + (ymax - ymin) * i / nticks;
        s += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(px(fx)) +
             "\" y2=\"" + fmt(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(mt + ph + 20) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(fx) +
             "</text>\n";
        s += "<line x1=\"" + fmt(ml - 5) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" + fmt(ml) +
             "\" y2=\"" + fmt(py(fy)) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py(fy) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(fy) +
             "</text>\n";
    }

    s += "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : points)
        s += fmt(px(x)) + "," + fmt(py(y)) + " ";
    s += "\"/>\n</svg>\n";
    return s;
}

} // namespace trigcolloc
