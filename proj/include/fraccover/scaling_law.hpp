#pragma once

#include <cstdint>
#include <vector>

#include "fraccover/cover_count.hpp"

namespace fraccover {

/// Scale-regime policy: drop entries whose count is below min_count (too
/// coarse, lattice dominated) and entries with
/// delta < resolution_floor_multiple * resolution (finer than the
/// rasterization can support). resolution is the grid cell size (1/side);
/// zero disables the floor.
struct TrimPolicy {
    std::int64_t min_count = 8;
    double resolution = 0.0;
    double resolution_floor_multiple = 4.0;

    double delta_floor() const { return resolution_floor_multiple * resolution; }

    static TrimPolicy for_grid_side(int side);
    static TrimPolicy none();
};

struct DimensionEstimate {
    double d_h = 0.0;          // minus the fitted slope of ln N against ln delta
    double log_c = 0.0;        // fitted intercept
    double r_squared = 0.0;
    double stderr_slope = 0.0;
    double delta_min = 0.0;    // retained fit window
    double delta_max = 0.0;
    int n_points = 0;
    bool out_of_range = false;  // d_h outside [-0.1, D_E + 0.1]; flagged, never clamped
};

struct ResidualPair {
    double alpha = 0.0;
    double delta = 0.0;
    double residual = 0.0;  // ln S(alpha*delta) - (D_E - d_h) ln alpha - ln S(delta)
};

struct ScalingResidualReport {
    std::vector<ResidualPair> pairs;  // sorted by |ln alpha| ascending
    double median_abs_residual = 0.0;
    double max_abs_residual = 0.0;
    double d_h_used = 0.0;
    int ambient_dimension = 2;
};

/// Returns the surviving entries in their original order; throws
/// InsufficientDataError when nothing survives (or the input is empty).
ScaleSeries trim_scale_regime(const ScaleSeries& series, const TrimPolicy& policy);

/// Ordinary least squares of ln N(delta) against ln delta on the trimmed
/// series. Requires >= 3 entries after trimming.
DimensionEstimate estimate_dimension(const ScaleSeries& series, const TrimPolicy& policy);

/// Residuals of the cover-area scaling relation for every ordered pair of
/// entries (alpha = delta_j / delta_i, delta = delta_i), including the
/// identity pairs alpha = 1 which are exactly zero. Residuals are computed
/// from log differences, so the pair (j, i) is exactly the negation of
/// (i, j).
ScalingResidualReport verify_area_scaling(const ScaleSeries& series, double d_h);

}  // namespace fraccover
