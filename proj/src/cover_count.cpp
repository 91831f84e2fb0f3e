#include "fraccover/cover_count.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fraccover {

OccupancyGrid::OccupancyGrid(int side) : side_(side) {
    if (side < 1) {
        throw std::domain_error("OccupancyGrid: side must be positive");
    }
    words_per_row_ = (side + 63) / 64;
    words_.assign(static_cast<std::size_t>(words_per_row_) * side, 0);
}

void OccupancyGrid::set(int ix, int iy) {
    const std::size_t bit = static_cast<std::size_t>(iy) * words_per_row_ * 64 + ix;
    std::uint64_t& word = words_[bit >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
    if (!(word & mask)) {
        word |= mask;
        ++occupied_count_;
    }
}

OccupancyGrid rasterize(const PointSet& points, int side) {
    if (side < kMinRasterSide || side > kMaxRasterSide) {
        throw std::domain_error("rasterize: side must lie in [16, 2^14]");
    }
    if (points.points.empty()) {
        throw std::domain_error("rasterize: empty point set");
    }
    OccupancyGrid grid(side);
    for (const Point& p : points.points) {
        if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
            throw std::domain_error("rasterize: point outside the unit square");
        }
        const int ix = std::min(static_cast<int>(p.x * side), side - 1);
        const int iy = std::min(static_cast<int>(p.y * side), side - 1);
        grid.set(ix, iy);
    }
    return grid;
}

namespace {

// any set bit in band cells [x0, x1)
bool any_in_range(const std::uint64_t* band, int x0, int x1) {
    const int w0 = x0 >> 6;
    const int w1 = (x1 - 1) >> 6;
    const std::uint64_t first_mask = ~std::uint64_t{0} << (x0 & 63);
    const std::uint64_t last_mask = ~std::uint64_t{0} >> (63 - ((x1 - 1) & 63));
    if (w0 == w1) {
        return (band[w0] & first_mask & last_mask) != 0;
    }
    if ((band[w0] & first_mask) != 0) return true;
    for (int w = w0 + 1; w < w1; ++w) {
        if (band[w] != 0) return true;
    }
    return (band[w1] & last_mask) != 0;
}

}  // namespace

std::int64_t count_boxes(const OccupancyGrid& grid, int box_cells) {
    const int side = grid.side();
    if (box_cells < 1 || box_cells > side) {
        throw std::domain_error("count_boxes: box_cells must lie in [1, side]");
    }
    if (box_cells == 1) {
        return grid.occupied_count();
    }

    const int blocks = (side + box_cells - 1) / box_cells;
    const int wpr = grid.words_per_row();
    std::vector<std::uint64_t> band(static_cast<std::size_t>(wpr));

    std::int64_t count = 0;
    for (int by = 0; by < blocks; ++by) {
        std::fill(band.begin(), band.end(), 0);
        const int y0 = by * box_cells;
        const int y1 = std::min(side, y0 + box_cells);
        for (int y = y0; y < y1; ++y) {
            const std::uint64_t* row = grid.row(y);
            for (int w = 0; w < wpr; ++w) band[w] |= row[w];
        }
        for (int bx = 0; bx < blocks; ++bx) {
            const int x0 = bx * box_cells;
            const int x1 = std::min(side, x0 + box_cells);
            if (any_in_range(band.data(), x0, x1)) ++count;
        }
    }
    return count;
}

double cover_area(std::int64_t count, int box_cells, int side) {
    // count * box^2 <= (side + box)^2 < 2^53 and side^2 < 2^53: both products
    // are exact, so the division is the single rounding.
    const double numerator =
        static_cast<double>(count * static_cast<std::int64_t>(box_cells) * box_cells);
    const double denominator = static_cast<double>(side) * static_cast<double>(side);
    return numerator / denominator;
}

ScaleSeries build_scale_series(const OccupancyGrid& grid, int base, int depth) {
    if (base < 2) {
        throw std::domain_error("build_scale_series: base must be at least 2");
    }
    if (depth < 1) {
        throw std::domain_error("build_scale_series: depth must be positive");
    }
    std::int64_t box = 1;
    for (int k = 0; k < depth; ++k) {
        box *= base;
        if (box > grid.side()) {
            throw std::domain_error("build_scale_series: base^depth exceeds grid side");
        }
    }

    ScaleSeries series;
    series.entries.reserve(static_cast<std::size_t>(depth) + 1);
    for (int k = depth; k >= 0; --k) {
        const int box_cells = static_cast<int>(box);
        ScaleEntry entry;
        entry.delta = static_cast<double>(box_cells) / grid.side() * grid.extent();
        entry.count = count_boxes(grid, box_cells);
        entry.area = cover_area(entry.count, box_cells, grid.side());
        series.entries.push_back(entry);
        box /= base;
    }
    return series;
}

}  // namespace fraccover
