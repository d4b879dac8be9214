#pragma once
#ifndef GEOPACK_HULL_HPP
#define GEOPACK_HULL_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "geopack/geodesic.hpp"

namespace geopack {

struct RelativeHull {
    /// Hull corners, counter-clockwise; each is a point of the input set.
    std::vector<Point> corners;
    /// Closed boundary: consecutive corners joined by geodesics. A degenerate
    /// hull (one or two corners) is traced back and forth.
    std::vector<Point> boundary;

    bool contains(Point p, double eps = kGeomEps) const {
        if (ring_distance(p, boundary) <= eps) return true;
        return corners.size() >= 3 && winding_number(p, boundary) != 0;
    }
};

namespace detail {

/// Strictly convex Euclidean hull (Andrew's monotone chain), CCW.
inline std::vector<Point> euclidean_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline std::vector<Point> trace_boundary(const PolygonDomain& dom, const std::vector<Point>& corners) {
    if (corners.size() == 1) return corners;
    return geodesic_polygon_ring(dom, corners);
}

}  // namespace detail

/// Geodesic convex hull of pts inside the polygon. Starts from the Euclidean
/// hull corners joined by geodesics, then repeatedly drops corners where the
/// boundary turns clockwise and inserts input points left outside.
inline RelativeHull relative_convex_hull(const PolygonDomain& dom, std::span<const Point> pts) {
    if (pts.empty()) throw Error(ErrorCode::EmptySet, "hull of an empty set");
    for (const Point& p : pts) {
        if (!dom.locate(p)) throw Error(ErrorCode::PointOutsidePolygon, "point lies outside the polygon");
    }
    RelativeHull hull;
    hull.corners = detail::euclidean_hull({pts.begin(), pts.end()});
    const double scale = std::max(1.0, dom.extent());

    for (std::size_t round = 0; round < 4 * pts.size() + 8; ++round) {
        if (hull.corners.size() >= 3 && signed_area(detail::trace_boundary(dom, hull.corners)) < 0) {
            std::reverse(hull.corners.begin(), hull.corners.end());
        }
        // Drop corners with a clockwise turn: they are not extreme.
        bool dropped = true;
        while (dropped && hull.corners.size() >= 3) {
            dropped = false;
            const std::size_t m = hull.corners.size();
            for (std::size_t i = 0; i < m; ++i) {
                const Point a = hull.corners[(i + m - 1) % m], b = hull.corners[i], c = hull.corners[(i + 1) % m];
                const GeodesicPath path_in = shortest_path(dom, a, b);
                const GeodesicPath path_out = shortest_path(dom, b, c);
                const auto& in = path_in.waypoints;
                const auto& out = path_out.waypoints;
                const Point d_in = in[in.size() - 1] - in[in.size() - 2];
                const Point d_out = out[1] - out[0];
                if (cross(d_in, d_out) < -kGeomEps * norm(d_in) * norm(d_out)) {
                    hull.corners.erase(hull.corners.begin() + static_cast<std::ptrdiff_t>(i));
                    dropped = true;
                    break;
                }
            }
        }
        hull.boundary = detail::trace_boundary(dom, hull.corners);

        // Farthest input point left outside, by Euclidean distance to the boundary.
        const Point* worst = nullptr;
        double worst_d = 0.0;
        for (const Point& p : pts) {
            if (hull.contains(p, kGeomEps * scale)) continue;
            const double d = ring_distance(p, hull.boundary);
            if (d > worst_d) {
                worst_d = d;
                worst = &p;
            }
        }
        if (!worst) return hull;

        const std::size_t m = hull.corners.size();
        std::size_t best_pos = 0;
        double best_gain = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const Point a = hull.corners[i], b = hull.corners[(i + 1) % m];
            const double gain =
                geodesic_distance(dom, a, *worst) + geodesic_distance(dom, *worst, b) - geodesic_distance(dom, a, b);
            if (gain < best_gain) {
                best_gain = gain;
                best_pos = i + 1;
            }
        }
        hull.corners.insert(hull.corners.begin() + static_cast<std::ptrdiff_t>(best_pos), *worst);
    }
    hull.boundary = detail::trace_boundary(dom, hull.corners);
    return hull;
}

}  // namespace geopack

#endif  // GEOPACK_HULL_HPP
