#include "fraccover/fractal_gen.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fraccover/errors.hpp"

namespace fraccover {

namespace {

// splitmix64; fixed so fbm output is identical across platforms and builds
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1], 53-bit
    double uniform01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
};

// Box-Muller, trigonometric form: two normals per two uniforms, no rejection,
// so the draw sequence is a pure function of the seed.
struct GaussianStream {
    SplitMix64 rng;
    double spare = 0.0;
    bool have_spare = false;

    explicit GaussianStream(std::uint64_t seed) : rng(seed) {}

    double next() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double u1 = rng.uniform01();
        const double u2 = rng.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare = r * std::sin(t);
        have_spare = true;
        return r * std::cos(t);
    }
};

void require_level(int level, int cap, const char* generator) {
    if (level < 0) {
        throw std::domain_error(std::string(generator) + ": level must be non-negative");
    }
    if (level > cap) {
        throw ResourceLimitError(std::string(generator) + ": level " + std::to_string(level) +
                                 " exceeds cap " + std::to_string(cap));
    }
}

void sierpinski_rec(int depth, double x, double y, std::vector<Point>& out) {
    if (depth == 0) {
        out.push_back({x, y});
        return;
    }
    sierpinski_rec(depth - 1, 0.5 * x, 0.5 * y, out);
    sierpinski_rec(depth - 1, 0.5 * (x + 1.0), 0.5 * y, out);
    sierpinski_rec(depth - 1, 0.5 * x, 0.5 * (y + 1.0), out);
}

}  // namespace

PointSet generate_koch(int level) {
    require_level(level, kKochMaxLevel, "generate_koch");

    using C = std::complex<double>;
    // rotation by +60 degrees; bumps point away from the base segment
    const C rot60(0.5, std::sqrt(3.0) / 2.0);

    std::vector<C> vertices{C(0.0, 0.0), C(1.0, 0.0)};
    for (int l = 0; l < level; ++l) {
        std::vector<C> next;
        next.reserve((vertices.size() - 1) * 4 + 1);
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            const C a = vertices[i];
            const C step = (vertices[i + 1] - a) / 3.0;
            next.push_back(a);
            next.push_back(a + step);
            next.push_back(a + step + step * rot60);
            next.push_back(a + 2.0 * step);
        }
        next.push_back(vertices.back());
        vertices.swap(next);
    }

    PointSet out;
    out.generator_name = "koch";
    out.level = level;
    out.expected_dimension = std::log(4.0) / std::log(3.0);
    out.points.reserve(vertices.size());
    for (const C& v : vertices) {
        out.points.push_back({v.real(), v.imag()});
    }
    return out;
}

PointSet generate_sierpinski(int level) {
    require_level(level, kSierpinskiMaxLevel, "generate_sierpinski");

    PointSet out;
    out.generator_name = "sierpinski";
    out.level = level;
    out.expected_dimension = std::log(3.0) / std::log(2.0);
    out.points.reserve(static_cast<std::size_t>(std::pow(3.0, level)) + 1);
    sierpinski_rec(level, 0.5, 0.5, out.points);
    return out;
}

PointSet generate_cantor_dust(int level) {
    require_level(level, kCantorMaxLevel, "generate_cantor_dust");

    // centers of the surviving intervals after `level` keep-the-outer-thirds steps
    std::vector<double> starts{0.0};
    double width = 1.0;
    for (int l = 0; l < level; ++l) {
        std::vector<double> next;
        next.reserve(starts.size() * 2);
        width /= 3.0;
        for (double a : starts) {
            next.push_back(a);
            next.push_back(a + 2.0 * width);
        }
        starts.swap(next);
    }
    std::vector<double> centers;
    centers.reserve(starts.size());
    for (double a : starts) centers.push_back(a + 0.5 * width);

    PointSet out;
    out.generator_name = "cantor";
    out.level = level;
    out.expected_dimension = std::log(4.0) / std::log(3.0);
    out.points.reserve(centers.size() * centers.size());
    for (double cx : centers) {
        for (double cy : centers) {
            out.points.push_back({cx, cy});
        }
    }
    return out;
}

PointSet generate_fbm_graph(double hurst, int n, std::uint64_t seed) {
    if (!(hurst > 0.0 && hurst < 1.0)) {
        throw std::domain_error("generate_fbm_graph: hurst must lie strictly inside (0, 1)");
    }
    const bool power_of_two = n > 0 && (n & (n - 1)) == 0;
    if (!power_of_two || n < (1 << kFbmMinLog2) || n > (1 << kFbmMaxLog2)) {
        throw std::domain_error("generate_fbm_graph: n must be a power of two in [2^8, 2^20]");
    }

    int levels = 0;
    while ((1 << levels) < n) ++levels;

    // Midpoint displacement on n intervals (n + 1 grid values, the last one
    // dropped from the output). Displacement std at depth d is
    // sqrt(1 - 2^(2H-2)) * 2^(-dH), the classic variance-matching choice.
    GaussianStream gauss(seed);
    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
    b[n] = gauss.next();
    const double roughness = std::sqrt(1.0 - std::pow(2.0, 2.0 * hurst - 2.0));
    for (int d = 1; d <= levels; ++d) {
        const int half = n >> d;
        const double sd = roughness * std::pow(2.0, -static_cast<double>(d) * hurst);
        for (int mid = half; mid < n; mid += 2 * half) {
            b[mid] = 0.5 * (b[mid - half] + b[mid + half]) + sd * gauss.next();
        }
    }

    double lo = b[0], hi = b[0];
    for (int i = 0; i < n; ++i) {
        lo = std::min(lo, b[i]);
        hi = std::max(hi, b[i]);
    }
    const double span = hi - lo;

    PointSet out;
    out.generator_name = "fbm";
    out.expected_dimension = 2.0 - hurst;
    out.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        const double y = span > 0.0 ? (b[i] - lo) / span : 0.5;
        out.points.push_back({t, y});
    }
    return out;
}

PointSet generate_filled_square(int per_axis) {
    if (per_axis < 1 || per_axis > 2048) {
        throw std::domain_error("generate_filled_square: per_axis must lie in [1, 2048]");
    }
    PointSet out;
    out.generator_name = "square";
    out.expected_dimension = 2.0;
    out.points.reserve(static_cast<std::size_t>(per_axis) * per_axis);
    for (int i = 0; i < per_axis; ++i) {
        for (int j = 0; j < per_axis; ++j) {
            out.points.push_back({(i + 0.5) / per_axis, (j + 0.5) / per_axis});
        }
    }
    return out;
}

PointSet generate_segment(int n_points) {
    if (n_points < 2 || n_points > (1 << 20)) {
        throw std::domain_error("generate_segment: n_points must lie in [2, 2^20]");
    }
    PointSet out;
    out.generator_name = "segment";
    out.expected_dimension = 1.0;
    out.points.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        out.points.push_back({static_cast<double>(i) / (n_points - 1), 0.5});
    }
    return out;
}

}  // namespace fraccover
