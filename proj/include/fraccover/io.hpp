#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fraccover/cover_count.hpp"
#include "fraccover/fractal_gen.hpp"
#include "fraccover/optimal_cover.hpp"
#include "fraccover/scaling_law.hpp"

namespace fraccover::io {

/// 17 significant digits; round-trips any double through text.
std::string format_double(double v);

// CSV schemas: points "x,y"; series "delta,count,area" in decreasing delta;
// residuals "alpha,delta,residual"; shape "x,f_x".

std::string points_to_csv(const PointSet& points);
PointSet points_from_csv(std::istream& in);

std::string series_to_csv(const ScaleSeries& series);
ScaleSeries series_from_csv(std::istream& in);

std::string residuals_to_csv(const ScalingResidualReport& report);
std::string shape_to_csv(const CoverShape& shape);

std::string estimate_to_json(const DimensionEstimate& estimate);
std::string estimate_to_csv(const DimensionEstimate& estimate);
std::string residual_report_to_json(const ScalingResidualReport& report);

void write_file(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

PointSet read_points_csv(const std::filesystem::path& path);
ScaleSeries read_series_csv(const std::filesystem::path& path);

}  // namespace fraccover::io
