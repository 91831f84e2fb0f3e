#include "fraccover/optimal_cover.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccover {

namespace {

void require_shape_dimension(double d_h) {
    if (!(d_h >= 1.0 && d_h <= 2.0)) {
        throw std::domain_error("cover shapes require d_h in [1, 2]");
    }
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw std::domain_error(std::string(name) + " must be positive");
    }
}

}  // namespace

double optimal_set_area(double delta, double d_h, double c1) {
    require_shape_dimension(d_h);
    require_positive(delta, "delta");
    require_positive(c1, "c1");
    return c1 * std::pow(delta, 3.0 - d_h);
}

double check_phi_scaling(double delta, double alpha, double d_h) {
    require_positive(alpha, "alpha");
    const double lhs = optimal_set_area(alpha * delta, d_h, 1.0);
    const double rhs = std::pow(alpha, 3.0 - d_h) * optimal_set_area(delta, d_h, 1.0);
    return std::fabs(lhs - rhs) / lhs;
}

CoverShape shape_profile(double delta, double d_h, double c2, int n_samples) {
    require_shape_dimension(d_h);
    require_positive(delta, "delta");
    require_positive(c2, "c2");
    if (n_samples < 2) {
        throw std::invalid_argument("shape_profile: n_samples must be at least 2");
    }

    CoverShape shape;
    shape.d_h = d_h;
    shape.delta = delta;
    shape.c2 = c2;
    shape.c1 = c2 / (3.0 - d_h);
    shape.area_closed_form = c2 * std::pow(delta, 3.0 - d_h) / (3.0 - d_h);

    const double border_exponent = 2.0 - d_h;  // pow(0, 0) == 1, so d_h = 2 stays at c2
    shape.profile.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double x =
            (i == n_samples - 1) ? delta : delta * static_cast<double>(i) / (n_samples - 1);
        shape.profile.push_back({x, c2 * std::pow(x, border_exponent)});
    }
    return shape;
}

double shape_area_numeric(const CoverShape& shape) {
    const auto& profile = shape.profile;
    if (profile.size() < 2) {
        throw std::invalid_argument("shape_area_numeric: profile needs at least 2 samples");
    }

    const double p = shape.ambient_dimension - shape.d_h;
    // First cell in closed form: the border's derivative is unbounded at 0
    // for d_h in (1, 2) and the plain trapezoid loses its order there. For
    // p in {0, 1} the closed form and the trapezoid coincide.
    const double x0 = profile[0].x;
    const double x1 = profile[1].x;
    long double area = shape.c2 * (std::pow(x1, p + 1.0) - std::pow(x0, p + 1.0)) / (p + 1.0);
    for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
        area += static_cast<long double>(profile[i + 1].x - profile[i].x) *
                (profile[i].y + profile[i + 1].y) * 0.5L;
    }
    return static_cast<double>(area);
}

double optimal_count(const OptimalCoverPlan& plan, double alpha) {
    require_positive(alpha, "alpha");
    require_positive(plan.base_count, "base_count");
    require_positive(plan.reference_delta, "reference_delta");
    return plan.base_count / alpha;
}

double compose_cover_area(const OptimalCoverPlan& plan, double alpha, double c1) {
    return optimal_count(plan, alpha) *
           optimal_set_area(alpha * plan.reference_delta, plan.d_h, c1);
}

}  // namespace fraccover
