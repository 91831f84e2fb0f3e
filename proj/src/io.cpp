#include "fraccover/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fraccover::io {

namespace {

double parse_double(const std::string& field, std::size_t line_no) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw std::runtime_error("csv: bad numeric field '" + field + "' on line " +
                                 std::to_string(line_no));
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void require_header(std::istream& in, const std::string& expected, const char* what) {
    std::string header;
    if (!std::getline(in, header) || strip_cr(header) != expected) {
        throw std::runtime_error(std::string(what) + ": expected header '" + expected + "'");
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string points_to_csv(const PointSet& points) {
    std::string out = "x,y\n";
    for (const Point& p : points.points) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

PointSet points_from_csv(std::istream& in) {
    require_header(in, "x,y", "points csv");
    PointSet points;
    points.generator_name = "csv";
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 2) {
            throw std::runtime_error("points csv: expected 2 fields on line " +
                                     std::to_string(line_no));
        }
        Point p{parse_double(fields[0], line_no), parse_double(fields[1], line_no)};
        if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
            throw std::runtime_error("points csv: point outside [0,1]^2 on line " +
                                     std::to_string(line_no));
        }
        points.points.push_back(p);
    }
    return points;
}

std::string series_to_csv(const ScaleSeries& series) {
    std::string out = "delta,count,area\n";
    for (const ScaleEntry& e : series.entries) {
        out += format_double(e.delta);
        out += ',';
        out += std::to_string(e.count);
        out += ',';
        out += format_double(e.area);
        out += '\n';
    }
    return out;
}

ScaleSeries series_from_csv(std::istream& in) {
    require_header(in, "delta,count,area", "series csv");
    ScaleSeries series;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw std::runtime_error("series csv: expected 3 fields on line " +
                                     std::to_string(line_no));
        }
        ScaleEntry entry;
        entry.delta = parse_double(fields[0], line_no);
        entry.count = static_cast<std::int64_t>(parse_double(fields[1], line_no));
        entry.area = parse_double(fields[2], line_no);
        if (!(entry.delta > 0.0) || entry.count < 1 || !(entry.area > 0.0)) {
            throw std::runtime_error("series csv: non-positive entry on line " +
                                     std::to_string(line_no));
        }
        if (!series.entries.empty() && entry.delta >= series.entries.back().delta) {
            throw std::runtime_error("series csv: deltas must be strictly decreasing (line " +
                                     std::to_string(line_no) + ")");
        }
        series.entries.push_back(entry);
    }
    return series;
}

std::string residuals_to_csv(const ScalingResidualReport& report) {
    std::string out = "alpha,delta,residual\n";
    for (const ResidualPair& p : report.pairs) {
        out += format_double(p.alpha);
        out += ',';
        out += format_double(p.delta);
        out += ',';
        out += format_double(p.residual);
        out += '\n';
    }
    return out;
}

std::string shape_to_csv(const CoverShape& shape) {
    std::string out = "x,f_x\n";
    for (const Point& p : shape.profile) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

std::string estimate_to_json(const DimensionEstimate& estimate) {
    nlohmann::json j;
    j["d_h"] = estimate.d_h;
    j["log_c"] = estimate.log_c;
    j["r_squared"] = estimate.r_squared;
    j["stderr_slope"] = estimate.stderr_slope;
    j["delta_min"] = estimate.delta_min;
    j["delta_max"] = estimate.delta_max;
    j["n_points"] = estimate.n_points;
    j["out_of_range"] = estimate.out_of_range;
    return j.dump(2) + "\n";
}

std::string estimate_to_csv(const DimensionEstimate& estimate) {
    std::string out = "d_h,log_c,r_squared,stderr_slope,delta_min,delta_max,n_points\n";
    out += format_double(estimate.d_h);
    out += ',';
    out += format_double(estimate.log_c);
    out += ',';
    out += format_double(estimate.r_squared);
    out += ',';
    out += format_double(estimate.stderr_slope);
    out += ',';
    out += format_double(estimate.delta_min);
    out += ',';
    out += format_double(estimate.delta_max);
    out += ',';
    out += std::to_string(estimate.n_points);
    out += '\n';
    return out;
}

std::string residual_report_to_json(const ScalingResidualReport& report) {
    nlohmann::json j;
    j["d_h_used"] = report.d_h_used;
    j["ambient_dimension"] = report.ambient_dimension;
    j["median_abs_residual"] = report.median_abs_residual;
    j["max_abs_residual"] = report.max_abs_residual;
    nlohmann::json pairs = nlohmann::json::array();
    for (const ResidualPair& p : report.pairs) {
        pairs.push_back({{"alpha", p.alpha}, {"delta", p.delta}, {"residual", p.residual}});
    }
    j["pairs"] = pairs;
    return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PointSet read_points_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    return points_from_csv(in);
}

ScaleSeries read_series_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    return series_from_csv(in);
}

}  // namespace fraccover::io
