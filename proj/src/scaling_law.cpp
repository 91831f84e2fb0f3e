#include "fraccover/scaling_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fraccover/errors.hpp"

namespace fraccover {

TrimPolicy TrimPolicy::for_grid_side(int side) {
    if (side < 1) {
        throw std::domain_error("TrimPolicy::for_grid_side: side must be positive");
    }
    TrimPolicy policy;
    policy.resolution = 1.0 / side;
    return policy;
}

TrimPolicy TrimPolicy::none() {
    TrimPolicy policy;
    policy.min_count = 1;
    policy.resolution = 0.0;
    return policy;
}

ScaleSeries trim_scale_regime(const ScaleSeries& series, const TrimPolicy& policy) {
    if (series.entries.empty()) {
        throw InsufficientDataError("trim_scale_regime: empty series");
    }
    ScaleSeries out;
    out.ambient_dimension = series.ambient_dimension;
    const double floor = policy.delta_floor();
    for (const ScaleEntry& entry : series.entries) {
        if (entry.count < policy.min_count) continue;
        if (entry.delta < floor) continue;
        out.entries.push_back(entry);
    }
    if (out.entries.empty()) {
        throw InsufficientDataError("trim_scale_regime: no entries survive the policy");
    }
    return out;
}

DimensionEstimate estimate_dimension(const ScaleSeries& series, const TrimPolicy& policy) {
    const ScaleSeries trimmed = trim_scale_regime(series, policy);
    const auto& entries = trimmed.entries;
    const int n = static_cast<int>(entries.size());
    if (n < 3) {
        throw InsufficientDataError("estimate_dimension: need at least 3 entries after trimming");
    }

    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = std::log(entries[i].delta);
        y[i] = std::log(static_cast<double>(entries[i].count));
    }

    double x_mean = 0.0, y_mean = 0.0;
    for (int i = 0; i < n; ++i) {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= n;
    y_mean /= n;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = x[i] - x_mean;
        const double dy = y[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw DegenerateInputError("estimate_dimension: zero variance in ln delta");
    }

    const double slope = sxy / sxx;
    const double intercept = y_mean - slope * x_mean;

    double sse = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        sse += r * r;
    }

    DimensionEstimate estimate;
    estimate.d_h = -slope;
    estimate.log_c = intercept;
    // sse <= syy holds for OLS with intercept; the clamp only absorbs rounding
    estimate.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
    estimate.stderr_slope = std::sqrt(sse / (n - 2) / sxx);
    estimate.delta_min = entries.back().delta;
    estimate.delta_max = entries.front().delta;
    estimate.n_points = n;
    const double d_e = static_cast<double>(trimmed.ambient_dimension);
    estimate.out_of_range = estimate.d_h < -0.1 || estimate.d_h > d_e + 0.1;
    return estimate;
}

ScalingResidualReport verify_area_scaling(const ScaleSeries& series, double d_h) {
    if (series.entries.size() < 2) {
        throw InsufficientDataError("verify_area_scaling: need at least 2 entries");
    }
    if (!std::isfinite(d_h)) {
        throw std::domain_error("verify_area_scaling: d_h must be finite");
    }

    const auto& entries = series.entries;
    const int n = static_cast<int>(entries.size());
    std::vector<double> log_delta(n), log_area(n);
    for (int i = 0; i < n; ++i) {
        log_delta[i] = std::log(entries[i].delta);
        log_area[i] = std::log(entries[i].area);
    }

    const double exponent = series.ambient_dimension - d_h;

    // Residuals are formed from log differences so that the identity pairs
    // are exactly zero and swapping (i, j) exactly negates the residual.
    struct Keyed {
        double abs_log_alpha;
        double log_alpha;
        double delta;
        ResidualPair pair;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double log_alpha = log_delta[j] - log_delta[i];
            ResidualPair pair;
            pair.alpha = entries[j].delta / entries[i].delta;
            pair.delta = entries[i].delta;
            pair.residual = (log_area[j] - log_area[i]) - exponent * log_alpha;
            keyed.push_back({std::fabs(log_alpha), log_alpha, entries[i].delta, pair});
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.abs_log_alpha != b.abs_log_alpha) return a.abs_log_alpha < b.abs_log_alpha;
        if (a.log_alpha != b.log_alpha) return a.log_alpha < b.log_alpha;
        return a.delta > b.delta;
    });

    ScalingResidualReport report;
    report.d_h_used = d_h;
    report.ambient_dimension = series.ambient_dimension;
    report.pairs.reserve(keyed.size());

    std::vector<double> abs_residuals;
    abs_residuals.reserve(keyed.size());
    for (const Keyed& k : keyed) {
        report.pairs.push_back(k.pair);
        abs_residuals.push_back(std::fabs(k.pair.residual));
        report.max_abs_residual = std::max(report.max_abs_residual, abs_residuals.back());
    }

    std::sort(abs_residuals.begin(), abs_residuals.end());
    const std::size_t m = abs_residuals.size();
    report.median_abs_residual = (m % 2 == 1)
                                     ? abs_residuals[m / 2]
                                     : 0.5 * (abs_residuals[m / 2 - 1] + abs_residuals[m / 2]);
    return report;
}

}  // namespace fraccover
