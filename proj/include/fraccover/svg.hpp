#pragma once

#include <string>
#include <vector>

#include "fraccover/optimal_cover.hpp"

namespace fraccover {

struct SvgChartConfig {
    int panel_width = 240;
    int panel_height = 240;
    int panel_gap = 24;
    int margin = 36;
    std::string fill = "#4f81b4";
    std::string stroke = "#1f3a5f";
};

/// One filled panel per shape, left to right in input order, sharing a
/// common vertical scale. Output is deterministic; the first line after the
/// XML declaration is the version comment "<!-- fraccover shape family v1 -->".
std::string shape_family_svg(const std::vector<CoverShape>& shapes,
                             const SvgChartConfig& config = {});

}  // namespace fraccover
