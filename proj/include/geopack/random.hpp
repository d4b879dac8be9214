#pragma once
#ifndef GEOPACK_RANDOM_HPP
#define GEOPACK_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "geopack/geodesic.hpp"

namespace geopack {

/// Platform-stable random source. std::mt19937_64 is fully specified by the
/// standard; the distribution helpers below are written out so that the
/// generated instances do not depend on the standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

private:
    std::mt19937_64 engine_;
};

/// Random simple polygon: random vertices in [0, scale]^2, then 2-opt moves
/// (segment reversal) until no two edges cross. Returns nullopt when the
/// attempt does not validate (e.g. collinear vertices); callers retry.
inline std::optional<SimplePolygon> random_simple_polygon(Rng& rng, std::size_t n_vertices, double scale = 100.0) {
    std::vector<Point> pts(n_vertices);
    for (auto& p : pts) p = {rng.uniform(0.0, scale), rng.uniform(0.0, scale)};
    const std::size_t n = pts.size();
    for (std::size_t pass = 0; pass < 100000; ++pass) {
        bool crossed = false;
        for (std::size_t i = 0; i < n && !crossed; ++i) {
            for (std::size_t j = i + 2; j < n && !crossed; ++j) {
                if (i == 0 && j == n - 1) continue;
                const Point a = pts[i], b = pts[i + 1], c = pts[j], d = pts[(j + 1) % n];
                if (segment_intersection(a, b, c, d, 0.0)) {
                    std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 pts.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    crossed = true;
                }
            }
        }
        if (!crossed) break;
    }
    try {
        SimplePolygon poly = validate_polygon(pts);
        // Reject slivers whose vertices sit almost on other edges.
        for (std::size_t i = 0; i < poly.size(); ++i) {
            for (std::size_t j = 0; j < poly.size(); ++j) {
                if (j == i || poly.next(j) == i) continue;
                if (point_segment_distance(poly[i], poly[j], poly[poly.next(j)]) < 1e-3 * scale) return std::nullopt;
            }
        }
        return poly;
    } catch (const Error&) {
        return std::nullopt;
    }
}

/// Uniform sample from the polygon interior by rejection from its bounding box.
inline Point random_interior_point(Rng& rng, const PolygonDomain& dom) {
    const auto verts = dom.polygon().vertices();
    double x0 = verts[0].x, x1 = x0, y0 = verts[0].y, y1 = y0;
    for (const Point& p : verts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        const Point p{rng.uniform(x0, x1), rng.uniform(y0, y1)};
        if (dom.polygon().locate(p) == Location::Inside) return p;
    }
    throw Error(ErrorCode::GenerationTimeout, "rejection sampling found no interior point");
}

}  // namespace geopack

#endif  // GEOPACK_RANDOM_HPP
