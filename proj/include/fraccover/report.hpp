#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "fraccover/scaling_law.hpp"

namespace fraccover {

enum class FixtureKind { koch, sierpinski, cantor, fbm, square, segment };

const char* fixture_name(FixtureKind kind);
std::optional<FixtureKind> fixture_from_name(const std::string& name);

struct FixtureSpec {
    FixtureKind kind = FixtureKind::koch;
    int level = -1;              // koch / sierpinski / cantor; -1 = fixture default
    double hurst = 0.5;          // fbm
    int n = 0;                   // fbm samples, square per-axis, segment points; 0 = default
    std::uint64_t seed = 1;      // fbm
};

struct GridSpec {
    int side = 0;  // 0 = fixture default
};

struct ScaleSpec {
    int base = 0;   // 0 = fixture default
    int depth = 0;  // 0 = as deep as the grid allows
};

struct ReportOptions {
    double dimension_tolerance = 0.0;  // 0 = fixture default (0.08 / 0.12 / 0.03)
    double residual_median_max = 0.15;
    int shape_samples = 512;
};

struct ReportBundle {
    FixtureSpec fixture;
    int side = 0;
    int base = 0;
    int depth = 0;

    DimensionEstimate estimate;
    ScalingResidualReport residuals;
    std::optional<double> expected_dimension;
    double dimension_tolerance = 0.0;
    double residual_median_max = 0.0;
    double shape_d_h = 0.0;  // fitted d_h clamped into [1, 2] for the drawn family

    std::map<std::string, bool> pass_flags;

    std::filesystem::path series_csv;
    std::filesystem::path residuals_csv;
    std::filesystem::path shape_svg;
    std::filesystem::path report_json;

    bool all_passed() const;
};

/// Resolved per-fixture defaults for (side, base, depth, n).
void resolve_report_defaults(const FixtureSpec& fixture, GridSpec& grid, ScaleSpec& scales,
                             int& n_resolved);

/// Generate the fixture's point set with per-fixture defaults applied
/// (levels 7/8/5; fbm n = 2^14; square 512 per axis; segment 4096 points).
PointSet fixture_points(const FixtureSpec& fixture);

std::string bundle_to_json(const ReportBundle& bundle);

/// Full pipeline: generate, rasterize, count across scales, trim, fit,
/// verify the cover-area scaling, draw the shape family, and write every
/// artifact under out_dir. Deterministic for identical arguments. Module
/// errors are rethrown with the fixture attached to the message.
ReportBundle run_report(const FixtureSpec& fixture, const GridSpec& grid,
                        const ScaleSpec& scales, const std::filesystem::path& out_dir,
                        const ReportOptions& options = {});

}  // namespace fraccover
