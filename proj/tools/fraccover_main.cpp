#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraccover/io.hpp"
#include "fraccover/optimal_cover.hpp"
#include "fraccover/report.hpp"
#include "fraccover/svg.hpp"

namespace fs = std::filesystem;
using namespace fraccover;

namespace {

fs::path resolve(const std::string& out_dir, const std::string& path) {
    fs::path p(path);
    if (p.is_absolute()) return p;
    return fs::path(out_dir) / p;
}

void ensure_parent(const fs::path& path) {
    const fs::path parent = path.parent_path();
    if (!parent.empty()) fs::create_directories(parent);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fraccover: box-counting dimension and optimal cover shapes for planar sets"};
    app.require_subcommand(1);

    std::string out_dir = ".";
    std::uint64_t seed = 1;
    std::string format = "default";
    app.add_option("--out-dir", out_dir, "Directory that relative output paths resolve against")
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for the fbm generator")->capture_default_str();
    app.add_option("--format", format,
                   "Output encoding for dim/verify (csv or json); other commands have "
                   "fixed formats")
        ->check(CLI::IsMember({"default", "csv", "json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a fixture point set as CSV");
    gen->fallthrough();  // accept the global flags after the subcommand too
    std::string gen_set;
    int gen_level = -1;
    double gen_hurst = 0.5;
    int gen_n = 0;
    std::string gen_out;
    gen->add_option("--set", gen_set, "koch | sierpinski | cantor | fbm | square | segment")
        ->required()
        ->check(CLI::IsMember({"koch", "sierpinski", "cantor", "fbm", "square", "segment"}));
    gen->add_option("--level", gen_level, "Recursion depth (koch 7, sierpinski 8, cantor 5)");
    gen->add_option("--hurst", gen_hurst, "Hurst exponent in (0,1), fbm only")
        ->capture_default_str();
    gen->add_option("--n", gen_n,
                    "Sample count: fbm points (power of two), square per-axis, segment points");
    gen->add_option("--out", gen_out, "Output points CSV")->required();

    // count
    auto* count = app.add_subcommand("count", "Rasterize points and count boxes across scales");
    count->fallthrough();
    std::string count_in, count_out;
    int count_side = 1024, count_base = 2, count_depth = 0;
    count->add_option("--in", count_in, "Input points CSV")->required();
    count->add_option("--side", count_side, "Grid cells per axis, in [16, 16384]")
        ->capture_default_str();
    count->add_option("--base", count_base, "Scale ladder base (>= 2)")->capture_default_str();
    count->add_option("--depth", count_depth,
                      "Ladder depth (base^depth <= side); 0 = as deep as the grid allows");
    count->add_option("--out", count_out, "Output series CSV")->required();

    // dim
    auto* dim = app.add_subcommand("dim", "Fit the box dimension from a scale series");
    dim->fallthrough();
    std::string dim_in, dim_out;
    std::int64_t dim_min_count = 8;
    double dim_resolution = 0.0;
    dim->add_option("--in", dim_in, "Input series CSV")->required();
    dim->add_option("--out", dim_out, "Output estimate (JSON unless --format csv)")->required();
    dim->add_option("--min-count", dim_min_count, "Trim entries with count below this")
        ->capture_default_str();
    dim->add_option("--resolution", dim_resolution,
                    "Grid cell size used to build the series (1/side); entries with delta "
                    "below 4x this are trimmed; 0 disables")
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "Residuals of the cover-area scaling relation");
    verify->fallthrough();
    std::string verify_in, verify_out;
    double verify_dh = 0.0;
    verify->add_option("--in", verify_in, "Input series CSV")->required();
    verify->add_option("--dh", verify_dh, "Dimension to verify against")->required();
    verify->add_option("--out", verify_out, "Output residuals (CSV unless --format json)")
        ->required();

    // shape
    auto* shape = app.add_subcommand("shape", "Optimal cover border profile (CSV or SVG)");
    shape->fallthrough();
    std::vector<double> shape_dh{1.5};
    double shape_delta = 1.0, shape_c2 = 1.0;
    int shape_samples = 512;
    std::string shape_out;
    shape->add_option("--dh", shape_dh, "Dimension(s) in [1, 2]; repeat for a family")
        ->capture_default_str();
    shape->add_option("--delta", shape_delta, "Interval length")->capture_default_str();
    shape->add_option("--c2", shape_c2, "Border scale constant")->capture_default_str();
    shape->add_option("--samples", shape_samples, "Profile samples")->capture_default_str();
    shape->add_option("--out", shape_out, "Output .csv (single dh) or .svg")->required();

    // report
    auto* report = app.add_subcommand(
        "report", "Full pipeline: generate, count, fit, verify, draw; writes a JSON+SVG bundle");
    report->fallthrough();
    std::string report_set;
    int report_level = -1, report_side = 0, report_base = 0, report_depth = 0, report_n = 0;
    double report_hurst = 0.5, report_tol = 0.0, report_residual_max = 0.15;
    report->add_option("--set", report_set, "Fixture name")
        ->required()
        ->check(CLI::IsMember({"koch", "sierpinski", "cantor", "fbm", "square", "segment"}));
    report->add_option("--level", report_level, "Recursion depth (fixture default if omitted)");
    report->add_option("--side", report_side, "Grid side (fixture default if omitted)");
    report->add_option("--base", report_base, "Ladder base (fixture default if omitted)");
    report->add_option("--depth", report_depth, "Ladder depth (max for the grid if omitted)");
    report->add_option("--hurst", report_hurst, "Hurst exponent, fbm only")
        ->capture_default_str();
    report->add_option("--n", report_n, "fbm points / square per-axis / segment points");
    report->add_option("--tol", report_tol,
                       "Dimension tolerance (fixture default: 0.08, fbm 0.12, "
                       "square/segment 0.03)");
    report->add_option("--residual-max", report_residual_max,
                       "Pass threshold for the median |residual|")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            FixtureSpec fixture;
            fixture.kind = *fixture_from_name(gen_set);
            fixture.level = gen_level;
            fixture.hurst = gen_hurst;
            fixture.n = gen_n;
            fixture.seed = seed;
            const PointSet points = fixture_points(fixture);
            const fs::path out = resolve(out_dir, gen_out);
            ensure_parent(out);
            io::write_file(out, io::points_to_csv(points));
            std::printf("wrote %s (%zu points)\n", out.string().c_str(), points.points.size());
        } else if (count->parsed()) {
            const PointSet points = io::read_points_csv(resolve(out_dir, count_in));
            const OccupancyGrid grid = rasterize(points, count_side);
            int depth = count_depth;
            if (depth == 0 && count_base >= 2) {
                std::int64_t box = 1;
                while (box * count_base <= count_side) {
                    box *= count_base;
                    ++depth;
                }
            }
            const ScaleSeries series = build_scale_series(grid, count_base, depth);
            const fs::path out = resolve(out_dir, count_out);
            ensure_parent(out);
            io::write_file(out, io::series_to_csv(series));
            std::printf("wrote %s (%zu scales, %lld occupied cells)\n", out.string().c_str(),
                        series.entries.size(),
                        static_cast<long long>(grid.occupied_count()));
        } else if (dim->parsed()) {
            const ScaleSeries series = io::read_series_csv(resolve(out_dir, dim_in));
            TrimPolicy policy;
            policy.min_count = dim_min_count;
            policy.resolution = dim_resolution;
            const DimensionEstimate estimate = estimate_dimension(series, policy);
            const fs::path out = resolve(out_dir, dim_out);
            ensure_parent(out);
            io::write_file(out, format == "csv" ? io::estimate_to_csv(estimate)
                                                : io::estimate_to_json(estimate));
            std::printf("d_h = %.12g  (r^2 = %.6f, %d scales)\n", estimate.d_h,
                        estimate.r_squared, estimate.n_points);
            if (estimate.out_of_range) {
                std::printf("warning: fitted d_h is outside [-0.1, D_E + 0.1]\n");
            }
        } else if (verify->parsed()) {
            const ScaleSeries series = io::read_series_csv(resolve(out_dir, verify_in));
            const ScalingResidualReport rep = verify_area_scaling(series, verify_dh);
            const fs::path out = resolve(out_dir, verify_out);
            ensure_parent(out);
            io::write_file(out, format == "json" ? io::residual_report_to_json(rep)
                                                 : io::residuals_to_csv(rep));
            std::printf("median |residual| = %.6g  max = %.6g  (%zu pairs)\n",
                        rep.median_abs_residual, rep.max_abs_residual, rep.pairs.size());
        } else if (shape->parsed()) {
            std::vector<CoverShape> shapes;
            shapes.reserve(shape_dh.size());
            for (double dh : shape_dh) {
                shapes.push_back(shape_profile(shape_delta, dh, shape_c2, shape_samples));
            }
            const fs::path out = resolve(out_dir, shape_out);
            ensure_parent(out);
            if (out.extension() == ".svg") {
                io::write_file(out, shape_family_svg(shapes));
            } else {
                if (shapes.size() != 1) {
                    std::fprintf(stderr, "shape: CSV output takes exactly one --dh\n");
                    return 2;
                }
                io::write_file(out, io::shape_to_csv(shapes.front()));
            }
            std::printf("wrote %s\n", out.string().c_str());
        } else if (report->parsed()) {
            FixtureSpec fixture;
            fixture.kind = *fixture_from_name(report_set);
            fixture.level = report_level;
            fixture.hurst = report_hurst;
            fixture.n = report_n;
            fixture.seed = seed;
            GridSpec grid{report_side};
            ScaleSpec scales{report_base, report_depth};
            ReportOptions options;
            options.dimension_tolerance = report_tol;
            options.residual_median_max = report_residual_max;
            const ReportBundle bundle =
                run_report(fixture, grid, scales, fs::path(out_dir), options);
            std::printf("fixture %s: d_h = %.12g", fixture_name(bundle.fixture.kind),
                        bundle.estimate.d_h);
            if (bundle.expected_dimension) {
                std::printf(" (expected %.12g +/- %g)", *bundle.expected_dimension,
                            bundle.dimension_tolerance);
            }
            std::printf("\nmedian |residual| = %.6g (threshold %g)\n",
                        bundle.residuals.median_abs_residual, bundle.residual_median_max);
            for (const auto& [name, ok] : bundle.pass_flags) {
                std::printf("  [%s] %s\n", ok ? "pass" : "FAIL", name.c_str());
            }
            std::printf("report: %s\n", bundle.report_json.string().c_str());
            return bundle.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
