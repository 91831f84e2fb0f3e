#pragma once

#include <cstdint>
#include <vector>

#include "fraccover/fractal_gen.hpp"

namespace fraccover {

/// Square bit grid over the unit square (extent fixed at 1.0). Cells are
/// packed 64 per word, row major. Immutable once rasterized; all read paths
/// are const and safe to share across threads.
class OccupancyGrid {
public:
    explicit OccupancyGrid(int side);

    int side() const { return side_; }
    double extent() const { return 1.0; }
    std::int64_t occupied_count() const { return occupied_count_; }

    bool occupied(int ix, int iy) const {
        const std::size_t bit = static_cast<std::size_t>(iy) * words_per_row_ * 64 + ix;
        return (words_[bit >> 6] >> (bit & 63)) & 1u;
    }
    void set(int ix, int iy);

    int words_per_row() const { return words_per_row_; }
    const std::uint64_t* row(int iy) const {
        return words_.data() + static_cast<std::size_t>(iy) * words_per_row_;
    }

private:
    int side_;
    int words_per_row_;
    std::int64_t occupied_count_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ScaleEntry {
    double delta = 0.0;      // box size in extent units
    std::int64_t count = 0;  // N(delta)
    double area = 0.0;       // S(delta) = count * delta^2
};

/// Paired (delta, N(delta), S(delta)) measurements, strictly decreasing in
/// delta. Counts are non-decreasing as delta decreases because the box
/// ladder uses nested (base^k) block sizes.
struct ScaleSeries {
    int ambient_dimension = 2;
    std::vector<ScaleEntry> entries;
};

inline constexpr int kMinRasterSide = 16;
inline constexpr int kMaxRasterSide = 1 << 14;

/// Cell (i, j) becomes occupied iff some point maps into it under
/// i = floor(x * side), j = floor(y * side); x = 1 or y = 1 clamp to the
/// last cell. Throws std::domain_error for an empty set or a side outside
/// [16, 2^14].
OccupancyGrid rasterize(const PointSet& points, int side);

/// Number of box_cells x box_cells blocks, anchored at the origin on a
/// regular lattice (far-edge partial blocks included), containing at least
/// one occupied cell. Requires 1 <= box_cells <= side.
std::int64_t count_boxes(const OccupancyGrid& grid, int box_cells);

/// Correctly rounded value of count * (box_cells / side)^2. Both integer
/// products are exact in double, so the single division is the only
/// rounding; a fully occupied divisible grid yields exactly 1.0.
double cover_area(std::int64_t count, int box_cells, int side);

/// Entries at delta_k = base^k / side for k = depth .. 0, decreasing delta.
/// Requires base >= 2, depth >= 1 and base^depth <= side.
ScaleSeries build_scale_series(const OccupancyGrid& grid, int base, int depth);

}  // namespace fraccover
