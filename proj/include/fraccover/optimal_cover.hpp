#pragma once

#include <vector>

#include "fraccover/fractal_gen.hpp"

namespace fraccover {

/// Border profile y = c2 * x^(2 - d_h) sampled on [0, delta], together with
/// the closed-form area of the region below it. The border is non-decreasing;
/// d_h = 1 gives the triangle border y = c2 * x, d_h = 2 the rectangle
/// border y = c2.
struct CoverShape {
    int ambient_dimension = 2;
    double d_h = 1.0;
    double delta = 1.0;
    double c2 = 1.0;               // border scale constant
    double c1 = 0.0;               // area constant, c2 / (3 - d_h)
    std::vector<Point> profile;
    double area_closed_form = 0.0;  // c2 * delta^(3 - d_h) / (3 - d_h)
};

/// Reference count N'(delta) for an optimal cover whose set count scales
/// linearly: N'(alpha * delta) = N'(delta) / alpha.
struct OptimalCoverPlan {
    double base_count = 1.0;
    double reference_delta = 1.0;
    double d_h = 1.0;
    int ambient_dimension = 2;
};

/// Area of a single optimal covering set: c1 * delta^(3 - d_h).
/// d_h must lie in [1, 2] (planar shape family).
double optimal_set_area(double delta, double d_h, double c1);

/// Relative gap |phi(alpha*delta) - alpha^(3-d_h) * phi(delta)| / phi(alpha*delta).
/// The closed form satisfies the scaling identity, so this stays at rounding
/// level (<= 1e-12) for all valid inputs.
double check_phi_scaling(double delta, double alpha, double d_h);

/// Profile sampled at n_samples uniformly spaced x in [0, delta].
CoverShape shape_profile(double delta, double d_h, double c2, int n_samples);

/// Numerical area under the sampled profile. The first cell is integrated in
/// closed form (the border's derivative is unbounded at 0 for d_h in (1, 2),
/// where a plain trapezoid loses most of its accuracy); the remaining cells
/// use the composite trapezoid rule. For d_h in {1, 2} the two rules agree
/// and the result matches area_closed_form to rounding.
double shape_area_numeric(const CoverShape& shape);

/// N'(alpha * delta) = base_count / alpha.
double optimal_count(const OptimalCoverPlan& plan, double alpha);

/// S(alpha * delta) = N'(alpha * delta) * phi(alpha * delta). Satisfies the
/// cover-area scaling S(alpha*delta) / S(delta) = alpha^(2 - d_h).
double compose_cover_area(const OptimalCoverPlan& plan, double alpha, double c1);

}  // namespace fraccover
