#include "fraccover/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "fraccover/io.hpp"
#include "fraccover/optimal_cover.hpp"
#include "fraccover/svg.hpp"

namespace fraccover {

const char* fixture_name(FixtureKind kind) {
    switch (kind) {
        case FixtureKind::koch: return "koch";
        case FixtureKind::sierpinski: return "sierpinski";
        case FixtureKind::cantor: return "cantor";
        case FixtureKind::fbm: return "fbm";
        case FixtureKind::square: return "square";
        case FixtureKind::segment: return "segment";
    }
    return "unknown";
}

std::optional<FixtureKind> fixture_from_name(const std::string& name) {
    if (name == "koch") return FixtureKind::koch;
    if (name == "sierpinski") return FixtureKind::sierpinski;
    if (name == "cantor") return FixtureKind::cantor;
    if (name == "fbm") return FixtureKind::fbm;
    if (name == "square") return FixtureKind::square;
    if (name == "segment") return FixtureKind::segment;
    return std::nullopt;
}

bool ReportBundle::all_passed() const {
    for (const auto& [name, ok] : pass_flags) {
        if (!ok) return false;
    }
    return true;
}

namespace {

int default_level(FixtureKind kind) {
    switch (kind) {
        case FixtureKind::koch: return 7;
        case FixtureKind::sierpinski: return 8;
        case FixtureKind::cantor: return 5;
        default: return 0;
    }
}

double default_tolerance(FixtureKind kind) {
    switch (kind) {
        case FixtureKind::fbm: return 0.12;
        case FixtureKind::square:
        case FixtureKind::segment: return 0.03;
        default: return 0.08;
    }
}

int max_depth_for(int base, int side) {
    if (base < 2) return 0;  // build_scale_series rejects the base itself
    int depth = 0;
    std::int64_t box = 1;
    while (box * base <= side) {
        box *= base;
        ++depth;
    }
    return depth;
}

PointSet make_fixture(const FixtureSpec& fixture, int n_resolved) {
    switch (fixture.kind) {
        case FixtureKind::koch: return generate_koch(fixture.level);
        case FixtureKind::sierpinski: return generate_sierpinski(fixture.level);
        case FixtureKind::cantor: return generate_cantor_dust(fixture.level);
        case FixtureKind::fbm:
            return generate_fbm_graph(fixture.hurst, n_resolved, fixture.seed);
        case FixtureKind::square: return generate_filled_square(n_resolved);
        case FixtureKind::segment: return generate_segment(n_resolved);
    }
    throw std::logic_error("make_fixture: unreachable");
}

nlohmann::json fixture_json(const FixtureSpec& fixture, int n_resolved) {
    nlohmann::json j;
    j["name"] = fixture_name(fixture.kind);
    switch (fixture.kind) {
        case FixtureKind::koch:
        case FixtureKind::sierpinski:
        case FixtureKind::cantor:
            j["level"] = fixture.level;
            break;
        case FixtureKind::fbm:
            j["hurst"] = fixture.hurst;
            j["n"] = n_resolved;
            j["seed"] = fixture.seed;
            break;
        case FixtureKind::square:
        case FixtureKind::segment:
            j["n"] = n_resolved;
            break;
    }
    return j;
}

}  // namespace

PointSet fixture_points(const FixtureSpec& fixture_in) {
    FixtureSpec fixture = fixture_in;
    if (fixture.level < 0) fixture.level = default_level(fixture.kind);
    int n = fixture.n;
    if (n == 0) {
        switch (fixture.kind) {
            case FixtureKind::fbm: n = 1 << 14; break;
            case FixtureKind::square: n = 512; break;
            case FixtureKind::segment: n = 4096; break;
            default: break;
        }
    }
    return make_fixture(fixture, n);
}

void resolve_report_defaults(const FixtureSpec& fixture, GridSpec& grid, ScaleSpec& scales,
                             int& n_resolved) {
    int default_side = 1024;
    int default_base = 2;
    switch (fixture.kind) {
        case FixtureKind::koch:
        case FixtureKind::cantor:
            default_side = 2187;  // 3^7
            default_base = 3;
            break;
        case FixtureKind::sierpinski:
            default_side = 256;
            break;
        case FixtureKind::fbm:
            default_side = 512;  // 32 samples per column at the default n
            break;
        case FixtureKind::square:
            default_side = 512;
            break;
        default: break;
    }
    if (grid.side == 0) grid.side = default_side;
    if (scales.base == 0) scales.base = default_base;
    if (scales.depth == 0) scales.depth = max_depth_for(scales.base, grid.side);

    n_resolved = fixture.n;
    if (n_resolved == 0) {
        switch (fixture.kind) {
            case FixtureKind::fbm: n_resolved = 1 << 14; break;
            case FixtureKind::square: n_resolved = std::min(grid.side, 2048); break;
            case FixtureKind::segment:
                n_resolved = std::min(4 * grid.side, 1 << 20);
                break;
            default: break;
        }
    }
}

std::string bundle_to_json(const ReportBundle& bundle) {
    nlohmann::json j;
    j["fixture"] = fixture_json(bundle.fixture, bundle.fixture.n);
    j["grid"] = {{"side", bundle.side}, {"base", bundle.base}, {"depth", bundle.depth}};

    nlohmann::json estimate;
    estimate["d_h"] = bundle.estimate.d_h;
    estimate["log_c"] = bundle.estimate.log_c;
    estimate["r_squared"] = bundle.estimate.r_squared;
    estimate["stderr_slope"] = bundle.estimate.stderr_slope;
    estimate["delta_min"] = bundle.estimate.delta_min;
    estimate["delta_max"] = bundle.estimate.delta_max;
    estimate["n_points"] = bundle.estimate.n_points;
    estimate["out_of_range"] = bundle.estimate.out_of_range;
    j["estimate"] = estimate;

    j["residual_summary"] = {
        {"median_abs_residual", bundle.residuals.median_abs_residual},
        {"max_abs_residual", bundle.residuals.max_abs_residual},
        {"d_h_used", bundle.residuals.d_h_used},
        {"ambient_dimension", bundle.residuals.ambient_dimension},
        {"n_pairs", bundle.residuals.pairs.size()},
    };

    if (bundle.expected_dimension.has_value()) {
        j["expected_dimension"] = *bundle.expected_dimension;
    } else {
        j["expected_dimension"] = nullptr;
    }
    j["dimension_tolerance"] = bundle.dimension_tolerance;
    j["residual_median_max"] = bundle.residual_median_max;
    j["shape_d_h"] = bundle.shape_d_h;
    j["pass_flags"] = bundle.pass_flags;

    // file names only, so identical runs into different directories agree
    j["artifacts"] = {
        {"series_csv", bundle.series_csv.filename().string()},
        {"residuals_csv", bundle.residuals_csv.filename().string()},
        {"shape_svg", bundle.shape_svg.filename().string()},
    };
    return j.dump(2) + "\n";
}

ReportBundle run_report(const FixtureSpec& fixture_in, const GridSpec& grid_in,
                        const ScaleSpec& scales_in, const std::filesystem::path& out_dir,
                        const ReportOptions& options) {
    FixtureSpec fixture = fixture_in;
    if (fixture.level < 0) fixture.level = default_level(fixture.kind);
    GridSpec grid = grid_in;
    ScaleSpec scales = scales_in;
    int n_resolved = 0;
    resolve_report_defaults(fixture, grid, scales, n_resolved);
    fixture.n = n_resolved;

    const std::string context = std::string("report[") + fixture_name(fixture.kind) + "]: ";
    try {
        std::filesystem::create_directories(out_dir);

        const PointSet points = make_fixture(fixture, n_resolved);
        const OccupancyGrid raster = rasterize(points, grid.side);
        const ScaleSeries series = build_scale_series(raster, scales.base, scales.depth);
        const TrimPolicy policy = TrimPolicy::for_grid_side(grid.side);
        const ScaleSeries trimmed = trim_scale_regime(series, policy);

        ReportBundle bundle;
        bundle.fixture = fixture;
        bundle.side = grid.side;
        bundle.base = scales.base;
        bundle.depth = scales.depth;
        bundle.estimate = estimate_dimension(series, policy);
        bundle.expected_dimension = points.expected_dimension;

        const double d_h_used =
            points.expected_dimension ? *points.expected_dimension : bundle.estimate.d_h;
        bundle.residuals = verify_area_scaling(trimmed, d_h_used);

        bundle.dimension_tolerance = options.dimension_tolerance > 0.0
                                         ? options.dimension_tolerance
                                         : default_tolerance(fixture.kind);
        bundle.residual_median_max = options.residual_median_max;
        bundle.shape_d_h = std::clamp(bundle.estimate.d_h, 1.0, 2.0);

        if (bundle.expected_dimension.has_value()) {
            bundle.pass_flags["dimension_within_tolerance"] =
                std::fabs(bundle.estimate.d_h - *bundle.expected_dimension) <=
                bundle.dimension_tolerance;
        }
        bundle.pass_flags["dimension_in_ambient_range"] = !bundle.estimate.out_of_range;
        bundle.pass_flags["residual_median_ok"] =
            bundle.residuals.median_abs_residual < bundle.residual_median_max;

        // shape family: the fitted shape between the triangle and rectangle endpoints
        std::vector<double> family{1.0, bundle.shape_d_h, 2.0};
        family.erase(std::unique(family.begin(), family.end()), family.end());
        std::vector<CoverShape> shapes;
        shapes.reserve(family.size());
        for (double dh : family) {
            shapes.push_back(shape_profile(1.0, dh, 1.0, options.shape_samples));
        }

        bundle.series_csv = out_dir / "series.csv";
        bundle.residuals_csv = out_dir / "residuals.csv";
        bundle.shape_svg = out_dir / "shape.svg";
        bundle.report_json = out_dir / "report.json";

        io::write_file(bundle.series_csv, io::series_to_csv(series));
        io::write_file(bundle.residuals_csv, io::residuals_to_csv(bundle.residuals));
        io::write_file(bundle.shape_svg, shape_family_svg(shapes));
        io::write_file(bundle.report_json, bundle_to_json(bundle));
        return bundle;
    } catch (const std::exception& e) {
        throw std::runtime_error(context + e.what());
    }
}

}  // namespace fraccover
