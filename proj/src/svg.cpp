#include "fraccover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace fraccover {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string shape_family_svg(const std::vector<CoverShape>& shapes,
                             const SvgChartConfig& config) {
    if (shapes.empty()) {
        throw std::invalid_argument("shape_family_svg: no shapes");
    }

    double max_x = 0.0, max_y = 0.0;
    for (const CoverShape& s : shapes) {
        if (s.profile.size() < 2) {
            throw std::invalid_argument("shape_family_svg: profile needs at least 2 samples");
        }
        max_x = std::max(max_x, s.delta);
        for (const Point& p : s.profile) max_y = std::max(max_y, p.y);
    }
    if (max_y <= 0.0) max_y = 1.0;

    const int n = static_cast<int>(shapes.size());
    const int width = 2 * config.margin + n * config.panel_width + (n - 1) * config.panel_gap;
    const int height = 2 * config.margin + config.panel_height + 24;  // room for labels

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<!-- fraccover shape family v1 -->\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";

    for (int i = 0; i < n; ++i) {
        const CoverShape& shape = shapes[i];
        const double px0 = config.margin + i * (config.panel_width + config.panel_gap);
        const double py0 = config.margin;
        const double sx = config.panel_width / max_x;
        const double sy = config.panel_height / max_y;
        const double base_y = py0 + config.panel_height;

        svg += "<g>\n";
        svg += "<rect x=\"" + num(px0) + "\" y=\"" + num(py0) + "\" width=\"" +
               std::to_string(config.panel_width) + "\" height=\"" +
               std::to_string(config.panel_height) +
               "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";

        // region {(x, y) : 0 <= y <= f(x)} as a closed polygon
        std::string pts;
        pts += num(px0) + "," + num(base_y);
        for (const Point& p : shape.profile) {
            pts += " " + num(px0 + p.x * sx) + "," + num(base_y - p.y * sy);
        }
        pts += " " + num(px0 + shape.delta * sx) + "," + num(base_y);
        svg += "<polygon points=\"" + pts + "\" fill=\"" + config.fill +
               "\" fill-opacity=\"0.75\" stroke=\"" + config.stroke +
               "\" stroke-width=\"1.5\"/>\n";

        svg += "<text x=\"" + num(px0 + config.panel_width / 2.0) + "\" y=\"" +
               num(base_y + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
               "D_H = " + num(shape.d_h) + "</text>\n";
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace fraccover
