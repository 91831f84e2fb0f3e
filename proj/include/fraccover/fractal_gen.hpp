#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fraccover {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Planar point set produced by one of the deterministic generators.
/// Every coordinate lies in [0, 1]. Points may sit exactly on the far edge
/// (x = 1 or y = 1); the rasterizer clamps those into the last cell.
struct PointSet {
    std::vector<Point> points;
    std::string generator_name;
    std::optional<int> level;                  // recursion depth; absent for fbm
    std::optional<double> expected_dimension;  // analytic box dimension, when known
};

inline constexpr int kKochMaxLevel = 10;
inline constexpr int kSierpinskiMaxLevel = 12;
inline constexpr int kCantorMaxLevel = 8;
inline constexpr int kFbmMinLog2 = 8;
inline constexpr int kFbmMaxLog2 = 20;

/// Koch curve polyline vertices at the given subdivision depth.
/// 4^level + 1 points; expected dimension ln 4 / ln 3.
PointSet generate_koch(int level);

/// Sierpinski triangle with corners (0,0), (1,0), (0,1): depth-first
/// iteration of the three half-scale corner maps, one representative point
/// (the dyadic cell center, image of (0.5, 0.5)) per depth-level cell.
/// 3^level points; expected dimension ln 3 / ln 2. The dyadic alignment
/// makes base-2 box counts on a side = 2^level grid exact.
PointSet generate_sierpinski(int level);

/// Product Cantor set (keep first and last third per axis), one point per
/// cell center. 4^level points; expected dimension ln 4 / ln 3.
PointSet generate_cantor_dust(int level);

/// Graph of a midpoint-displacement fractional Brownian path, affinely
/// normalized per axis. n must be a power of two in [2^8, 2^20]; hurst must
/// lie strictly inside (0, 1). Deterministic per (hurst, n, seed); expected
/// graph dimension 2 - hurst.
PointSet generate_fbm_graph(double hurst, int n, std::uint64_t seed);

/// per_axis^2 cell-center points of a regular partition of the unit square.
/// Dimension 2 fixture.
PointSet generate_filled_square(int per_axis);

/// n_points equally spaced points on the horizontal midline. Dimension 1
/// fixture.
PointSet generate_segment(int n_points);

}  // namespace fraccover
