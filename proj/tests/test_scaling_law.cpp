#include <doctest.h>

#include <cmath>

#include "fraccover/errors.hpp"
#include "fraccover/fractal_gen.hpp"
#include "fraccover/scaling_law.hpp"
#include "oracles.hpp"

using namespace fraccover;

namespace {

std::vector<double> dyadic_deltas(int k_lo, int k_hi) {
    std::vector<double> deltas;
    for (int k = k_lo; k <= k_hi; ++k) deltas.push_back(std::ldexp(1.0, -k));
    return deltas;
}

}  // namespace

TEST_CASE("exact quadratic power law is recovered exactly") {
    ScaleSeries series;
    for (int k = 0; k <= 3; ++k) {
        ScaleEntry e;
        e.delta = std::ldexp(1.0, -k);
        e.count = std::int64_t{1} << (2 * k);  // delta^-2
        e.area = static_cast<double>(e.count) * e.delta * e.delta;
        series.entries.push_back(e);
    }
    const DimensionEstimate est = estimate_dimension(series, TrimPolicy::none());
    CHECK(std::fabs(est.d_h - 2.0) < 1e-12);
    CHECK(std::fabs(est.r_squared - 1.0) < 1e-12);
    CHECK(std::fabs(est.log_c) < 1e-12);
    CHECK(est.stderr_slope < 1e-12);
    CHECK(est.n_points == 4);
    CHECK(!est.out_of_range);
    CHECK(est.delta_max == 1.0);
    CHECK(est.delta_min == 0.125);
}

TEST_CASE("constant series fits slope zero") {
    const ScaleSeries series = oracles::power_law_series(5.0, 0.0, dyadic_deltas(3, 5));
    const DimensionEstimate est = estimate_dimension(series, TrimPolicy::none());
    CHECK(est.d_h == 0.0);
    CHECK(est.r_squared == 1.0);  // zero total variation is fit perfectly
    CHECK(std::fabs(est.log_c - std::log(5.0)) < 1e-12);
}

TEST_CASE("regression exactness across dimensions and scale invariance") {
    // delta ladders chosen so c * delta^-d is an exact integer
    struct Law {
        double d;
        double c;
        int delta_base;  // deltas are delta_base^-k
    };
    for (const Law& law : {Law{0.5, 2.0, 4}, Law{1.0, 2.0, 2}, Law{1.5, 2.0, 4},
                           Law{2.0, 1.0, 2}}) {
        std::vector<double> deltas;
        for (int k = 1; k <= 5; ++k) deltas.push_back(std::pow(law.delta_base, -k));
        const ScaleSeries series = oracles::power_law_series(law.c, law.d, deltas);

        const DimensionEstimate est = estimate_dimension(series, TrimPolicy::none());
        CHECK(std::fabs(est.d_h - law.d) < 1e-10);
        CHECK(std::fabs(est.log_c - std::log(law.c)) < 1e-10);
        CHECK(std::fabs(est.r_squared - 1.0) < 1e-10);

        // scale every delta by 1/4 with counts following the same law: the
        // slope is unchanged, only the intercept moves
        ScaleSeries scaled = series;
        for (auto& e : scaled.entries) {
            e.delta /= 4.0;
            e.count *= static_cast<std::int64_t>(std::llround(std::pow(4.0, law.d)));
            e.area = static_cast<double>(e.count) * e.delta * e.delta;
        }
        const DimensionEstimate est2 = estimate_dimension(scaled, TrimPolicy::none());
        CHECK(std::fabs(est2.d_h - est.d_h) < 1e-10);
    }
}

TEST_CASE("estimate_dimension error paths") {
    ScaleSeries two_entries;
    for (int k = 0; k < 2; ++k) {
        two_entries.entries.push_back({std::ldexp(1.0, -k), 1 << k, 0.5});
    }
    CHECK_THROWS_AS(estimate_dimension(two_entries, TrimPolicy::none()), InsufficientDataError);

    const ScaleSeries series = oracles::power_law_series(1.0, 1.0, dyadic_deltas(1, 5));
    TrimPolicy hungry;
    hungry.min_count = 1000;
    CHECK_THROWS_AS(estimate_dimension(series, hungry), InsufficientDataError);
}

TEST_CASE("zero variance in ln delta is a degenerate input") {
    ScaleSeries series;
    for (int i = 0; i < 3; ++i) series.entries.push_back({0.25, 4, 0.25});
    CHECK_THROWS_AS(estimate_dimension(series, TrimPolicy::none()), DegenerateInputError);
}

TEST_CASE("out-of-range fit is flagged, not clamped") {
    // counts that fall as delta shrinks: slope positive, d_h < -0.1
    ScaleSeries series;
    series.entries.push_back({1.0, 64, 64.0});
    series.entries.push_back({0.5, 16, 4.0});
    series.entries.push_back({0.25, 4, 0.25});
    series.entries.push_back({0.125, 1, 0.015625});
    const DimensionEstimate est = estimate_dimension(series, TrimPolicy::none());
    CHECK(est.d_h < -0.1);
    CHECK(est.out_of_range);
}

TEST_CASE("trim_scale_regime policy") {
    ScaleSeries series = oracles::power_law_series(1.0, 2.0, dyadic_deltas(1, 6));
    // counts: 4, 16, 64, 256, 1024, 4096

    SUBCASE("no-op when everything is inside the regime") {
        const ScaleSeries trimmed = trim_scale_regime(series, TrimPolicy::none());
        CHECK(trimmed.entries.size() == series.entries.size());
    }

    SUBCASE("coarse low-count entries are dropped") {
        TrimPolicy policy;  // min_count = 8
        const ScaleSeries trimmed = trim_scale_regime(series, policy);
        CHECK(trimmed.entries.size() == series.entries.size() - 1);
        CHECK(trimmed.entries.front().count == 16);
    }

    SUBCASE("entries below the resolution floor are dropped") {
        TrimPolicy policy = TrimPolicy::for_grid_side(64);  // floor = 4/64 = 1/16
        const ScaleSeries trimmed = trim_scale_regime(series, policy);
        CHECK(trimmed.entries.back().delta >= 4.0 / 64.0);
        // k=1 falls to min_count, k=5..6 to the floor; k=2..4 survive
        CHECK(trimmed.entries.size() == 3);
        CHECK(trimmed.entries.front().count == 16);
    }

    SUBCASE("everything trimmed throws") {
        TrimPolicy policy;
        policy.min_count = 1 << 30;
        CHECK_THROWS_AS(trim_scale_regime(series, policy), InsufficientDataError);
        CHECK_THROWS_AS(trim_scale_regime(ScaleSeries{}, TrimPolicy::none()),
                        InsufficientDataError);
    }
}

TEST_CASE("trimmed koch ladder keeps the middle window and meets the oracle tolerance") {
    const OccupancyGrid grid = rasterize(generate_koch(7), 2187);
    const ScaleSeries series = build_scale_series(grid, 3, 7);
    const TrimPolicy policy = TrimPolicy::for_grid_side(2187);
    const ScaleSeries trimmed = trim_scale_regime(series, policy);

    CHECK(trimmed.entries.size() == 4);  // boxes 243, 81, 27, 9
    CHECK(trimmed.entries.front().count >= 8);
    CHECK(trimmed.entries.back().delta >= 4.0 / 2187.0);

    const DimensionEstimate est = estimate_dimension(series, policy);
    CHECK(std::fabs(est.d_h - std::log(4.0) / std::log(3.0)) < 0.08);
    CHECK(est.delta_max == trimmed.entries.front().delta);
    CHECK(est.delta_min == trimmed.entries.back().delta);
}

TEST_CASE("verify_area_scaling: identity pairs are exactly zero") {
    const ScaleSeries series = oracles::power_law_series(1.0, 1.5, {0.25, 0.0625, 0.015625});
    const ScalingResidualReport report = verify_area_scaling(series, 1.5);
    REQUIRE(report.pairs.size() == 9);  // all ordered pairs incl. alpha = 1
    int identity_pairs = 0;
    for (const ResidualPair& p : report.pairs) {
        if (p.alpha == 1.0) {
            ++identity_pairs;
            CHECK(p.residual == 0.0);
        }
    }
    CHECK(identity_pairs == 3);
    CHECK(report.d_h_used == 1.5);
}

TEST_CASE("verify_area_scaling: exact power law gives zero residuals everywhere") {
    const ScaleSeries series = oracles::power_law_series(3.0, 1.0, dyadic_deltas(2, 6));
    const ScalingResidualReport report = verify_area_scaling(series, 1.0);
    CHECK(report.max_abs_residual < 1e-12);
    CHECK(report.median_abs_residual <= report.max_abs_residual);
}

TEST_CASE("verify_area_scaling: residual antisymmetry is exact") {
    // a deliberately noisy series
    ScaleSeries series;
    series.entries.push_back({0.5, 7, 7 * 0.25});
    series.entries.push_back({0.25, 23, 23 * 0.0625});
    series.entries.push_back({0.125, 101, 101 * 0.015625});
    series.entries.push_back({0.0625, 339, 339 * 0.00390625});
    const ScalingResidualReport report = verify_area_scaling(series, 1.7);

    for (const ResidualPair& p : report.pairs) {
        if (p.alpha == 1.0) continue;
        // the mirrored pair has alpha' = 1/alpha and delta' = alpha * delta
        bool found = false;
        for (const ResidualPair& q : report.pairs) {
            if (q.residual == -p.residual && q.alpha != p.alpha) {
                // confirm it is the actual mirror: q.delta == p.alpha * p.delta
                if (std::fabs(q.delta - p.alpha * p.delta) < 1e-15 * q.delta) {
                    found = true;
                    break;
                }
            }
        }
        CHECK(found);
    }
}

TEST_CASE("verify_area_scaling pairs are sorted by |ln alpha|") {
    const ScaleSeries series = oracles::power_law_series(1.0, 2.0, dyadic_deltas(0, 3));
    const ScalingResidualReport report = verify_area_scaling(series, 2.0);
    for (std::size_t i = 1; i < report.pairs.size(); ++i) {
        CHECK(std::fabs(std::log(report.pairs[i - 1].alpha)) <=
              std::fabs(std::log(report.pairs[i].alpha)) + 1e-12);
    }
}

TEST_CASE("fitted dimension is a local minimizer of the median residual") {
    const ScaleSeries series = oracles::power_law_series(2.0, 1.0, dyadic_deltas(1, 5));
    const DimensionEstimate est = estimate_dimension(series, TrimPolicy::none());
    const double base = verify_area_scaling(series, est.d_h).median_abs_residual;
    for (double perturbation : {-0.2, 0.2}) {
        const double shifted =
            verify_area_scaling(series, est.d_h + perturbation).median_abs_residual;
        CHECK(base <= shifted);
    }
}

TEST_CASE("verify_area_scaling preconditions") {
    ScaleSeries one;
    one.entries.push_back({0.5, 2, 0.5});
    CHECK_THROWS_AS(verify_area_scaling(one, 1.0), InsufficientDataError);

    const ScaleSeries series = oracles::power_law_series(1.0, 1.0, dyadic_deltas(1, 3));
    CHECK_THROWS_AS(verify_area_scaling(series, std::nan("")), std::domain_error);
}

TEST_CASE("sierpinski residuals at the oracle dimension stay flat") {
    const OccupancyGrid grid = rasterize(generate_sierpinski(8), 256);
    const ScaleSeries series = build_scale_series(grid, 2, 8);
    const ScaleSeries trimmed = trim_scale_regime(series, TrimPolicy::for_grid_side(256));
    const ScalingResidualReport report =
        verify_area_scaling(trimmed, std::log(3.0) / std::log(2.0));
    CHECK(report.median_abs_residual < 0.15);
}
