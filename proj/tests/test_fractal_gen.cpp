#include <doctest.h>

#include <cmath>

#include "fraccover/errors.hpp"
#include "fraccover/fractal_gen.hpp"

using namespace fraccover;

namespace {

void check_bounds(const PointSet& ps) {
    for (const Point& p : ps.points) {
        CHECK(p.x >= 0.0);
        CHECK(p.x <= 1.0);
        CHECK(p.y >= 0.0);
        CHECK(p.y <= 1.0);
    }
}

}  // namespace

TEST_CASE("koch point counts follow 4^level + 1") {
    CHECK(generate_koch(0).points.size() == 2);
    CHECK(generate_koch(1).points.size() == 5);
    CHECK(generate_koch(3).points.size() == 65);
    CHECK(generate_koch(3).expected_dimension.value() ==
          doctest::Approx(std::log(4.0) / std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("koch level 0 is the segment endpoints") {
    const PointSet ps = generate_koch(0);
    CHECK(ps.points[0].x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ps.points[1].x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ps.points[0].y == 0.0);
    CHECK(ps.points[1].y == 0.0);
}

TEST_CASE("koch bounds and determinism") {
    const PointSet a = generate_koch(5);
    const PointSet b = generate_koch(5);
    check_bounds(a);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }
}

TEST_CASE("koch self-similarity: first quarter rescaled by 3 is the previous level") {
    for (int level : {2, 4, 6}) {
        const PointSet fine = generate_koch(level);
        const PointSet coarse = generate_koch(level - 1);
        const std::size_t quarter = (fine.points.size() - 1) / 4 + 1;
        REQUIRE(quarter == coarse.points.size());
        const Point left = fine.points.front();
        for (std::size_t i = 0; i < quarter; ++i) {
            const double rx = left.x + 3.0 * (fine.points[i].x - left.x);
            const double ry = left.y + 3.0 * (fine.points[i].y - left.y);
            CHECK(std::fabs(rx - coarse.points[i].x) < 1e-12);
            CHECK(std::fabs(ry - coarse.points[i].y) < 1e-12);
        }
    }
}

TEST_CASE("koch level guard") {
    CHECK_THROWS_AS(generate_koch(11), ResourceLimitError);
    CHECK_THROWS_AS(generate_koch(-1), std::domain_error);
}

TEST_CASE("sierpinski counts are 3^level") {
    CHECK(generate_sierpinski(0).points.size() == 1);
    CHECK(generate_sierpinski(2).points.size() == 9);
    CHECK(generate_sierpinski(8).points.size() == 6561);
    CHECK(generate_sierpinski(8).expected_dimension.value() ==
          doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(generate_sierpinski(13), ResourceLimitError);
}

TEST_CASE("sierpinski representatives are dyadic cell centers") {
    const int level = 4;
    const PointSet ps = generate_sierpinski(level);
    check_bounds(ps);
    const double cells = 1 << level;
    for (const Point& p : ps.points) {
        const double ix = p.x * cells - 0.5;
        const double iy = p.y * cells - 0.5;
        CHECK(ix == doctest::Approx(std::round(ix)).epsilon(1e-12));
        CHECK(iy == doctest::Approx(std::round(iy)).epsilon(1e-12));
        // gasket cells have disjoint binary digits
        const int i = static_cast<int>(std::llround(ix));
        const int j = static_cast<int>(std::llround(iy));
        CHECK((i & j) == 0);
    }
}

TEST_CASE("cantor dust counts are 4^level") {
    CHECK(generate_cantor_dust(0).points.size() == 1);
    CHECK(generate_cantor_dust(1).points.size() == 4);
    CHECK(generate_cantor_dust(5).points.size() == 1024);
    CHECK_THROWS_AS(generate_cantor_dust(9), ResourceLimitError);
}

TEST_CASE("cantor level 1 sits at the corner-third centers") {
    const PointSet ps = generate_cantor_dust(1);
    REQUIRE(ps.points.size() == 4);
    const double lo = 1.0 / 6.0, hi = 5.0 / 6.0;
    CHECK(ps.points[0].x == doctest::Approx(lo).epsilon(1e-14));
    CHECK(ps.points[0].y == doctest::Approx(lo).epsilon(1e-14));
    CHECK(ps.points[3].x == doctest::Approx(hi).epsilon(1e-14));
    CHECK(ps.points[3].y == doctest::Approx(hi).epsilon(1e-14));
}

TEST_CASE("fbm graph size, bounds and expected dimension") {
    const PointSet ps = generate_fbm_graph(0.5, 1024, 7);
    CHECK(ps.points.size() == 1024);
    CHECK(!ps.level.has_value());
    CHECK(ps.expected_dimension.value() == doctest::Approx(1.5).epsilon(1e-15));
    check_bounds(ps);

    CHECK(generate_fbm_graph(0.9, 1024, 7).expected_dimension.value() ==
          doctest::Approx(1.1).epsilon(1e-15));
}

TEST_CASE("fbm graph is deterministic per seed") {
    const PointSet a = generate_fbm_graph(0.7, 2048, 42);
    const PointSet b = generate_fbm_graph(0.7, 2048, 42);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }
    const PointSet c = generate_fbm_graph(0.7, 2048, 43);
    bool any_difference = false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (a.points[i].y != c.points[i].y) any_difference = true;
    }
    CHECK(any_difference);
}

TEST_CASE("fbm domain errors") {
    CHECK_THROWS_AS(generate_fbm_graph(0.0, 1024, 1), std::domain_error);
    CHECK_THROWS_AS(generate_fbm_graph(1.0, 1024, 1), std::domain_error);
    CHECK_THROWS_AS(generate_fbm_graph(0.5, 1000, 1), std::domain_error);  // not a power of two
    CHECK_THROWS_AS(generate_fbm_graph(0.5, 128, 1), std::domain_error);   // below 2^8
    CHECK_THROWS_AS(generate_fbm_graph(0.5, 1 << 21, 1), std::domain_error);
}

TEST_CASE("synthetic fixtures") {
    const PointSet square = generate_filled_square(16);
    CHECK(square.points.size() == 256);
    CHECK(square.expected_dimension.value() == 2.0);
    check_bounds(square);

    const PointSet segment = generate_segment(64);
    CHECK(segment.points.size() == 64);
    CHECK(segment.expected_dimension.value() == 1.0);
    CHECK(segment.points.back().x == 1.0);
    for (const Point& p : segment.points) CHECK(p.y == 0.5);

    CHECK_THROWS_AS(generate_filled_square(0), std::domain_error);
    CHECK_THROWS_AS(generate_segment(1), std::domain_error);
}
