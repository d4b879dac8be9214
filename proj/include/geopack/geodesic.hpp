#pragma once
#ifndef GEOPACK_GEODESIC_HPP
#define GEOPACK_GEODESIC_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "geopack/polygon.hpp"
#include "geopack/triangulation.hpp"

namespace geopack {

/// A shortest path inside the polygon. Interior waypoints are reflex vertices.
struct GeodesicPath {
    std::vector<Point> waypoints;
    double length = 0.0;

    Point source() const { return waypoints.front(); }
    Point target() const { return waypoints.back(); }
};

/// A validated polygon together with its triangulation and dual tree.
/// Immutable after construction, so it may be shared across threads.
class PolygonDomain {
public:
    explicit PolygonDomain(SimplePolygon poly) : poly_(std::move(poly)), tri_(triangulate(poly_)) {
        build_tree();
        extent_ = poly_.extent();
    }

    static PolygonDomain from_vertices(std::span<const Point> raw) { return PolygonDomain(validate_polygon(raw)); }

    const SimplePolygon& polygon() const { return poly_; }
    const Triangulation& triangulation() const { return tri_; }
    double extent() const { return extent_; }

    bool contains(Point p, double eps = kGeomEps) const { return poly_.contains(p, eps); }

    /// Index of a triangle containing p (within eps), preferring the one p is deepest in.
    std::optional<std::size_t> locate(Point p, double eps = kGeomEps) const {
        double best = -std::numeric_limits<double>::infinity();
        std::size_t best_t = 0;
        for (std::size_t t = 0; t < tri_.size(); ++t) {
            const auto& tr = tri_.triangles[t];
            double depth = std::numeric_limits<double>::infinity();
            for (int k = 0; k < 3; ++k) {
                const Point a = poly_[tr[k]];
                const Point b = poly_[tr[(k + 1) % 3]];
                const double len = dist(a, b);
                depth = std::min(depth, orient(a, b, p) / len);
            }
            if (depth > best) {
                best = depth;
                best_t = t;
            }
        }
        if (best < -eps) return std::nullopt;
        return best_t;
    }

    /// Triangles visited by the unique dual-tree path from `from` to `to`.
    std::vector<std::size_t> sleeve(std::size_t from, std::size_t to) const {
        std::vector<std::size_t> up, down;
        std::size_t a = from, b = to;
        while (depth_[a] > depth_[b]) {
            up.push_back(a);
            a = static_cast<std::size_t>(parent_[a]);
        }
        while (depth_[b] > depth_[a]) {
            down.push_back(b);
            b = static_cast<std::size_t>(parent_[b]);
        }
        while (a != b) {
            up.push_back(a);
            down.push_back(b);
            a = static_cast<std::size_t>(parent_[a]);
            b = static_cast<std::size_t>(parent_[b]);
        }
        up.push_back(a);
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }

private:
    void build_tree() {
        const std::size_t m = tri_.size();
        parent_.assign(m, -1);
        depth_.assign(m, 0);
        std::vector<std::size_t> stack{0};
        std::vector<bool> seen(m, false);
        seen[0] = true;
        while (!stack.empty()) {
            const std::size_t t = stack.back();
            stack.pop_back();
            for (int nb : tri_.neighbor[t]) {
                if (nb < 0 || seen[static_cast<std::size_t>(nb)]) continue;
                seen[static_cast<std::size_t>(nb)] = true;
                parent_[static_cast<std::size_t>(nb)] = static_cast<int>(t);
                depth_[static_cast<std::size_t>(nb)] = depth_[t] + 1;
                stack.push_back(static_cast<std::size_t>(nb));
            }
        }
        for (bool s : seen) {
            if (!s) throw Error(ErrorCode::DegenerateArea, "triangulation dual graph is disconnected");
        }
    }

    SimplePolygon poly_;
    Triangulation tri_;
    std::vector<int> parent_;
    std::vector<std::size_t> depth_;
    double extent_ = 0.0;
};

namespace detail {

inline bool near_equal(Point a, Point b) { return dist(a, b) <= 1e-12 * (1.0 + std::abs(a.x) + std::abs(a.y)); }

/// Funnel (string pulling) over a sequence of (left, right) portals.
inline std::vector<Point> pull_string(const std::vector<std::pair<Point, Point>>& portals) {
    std::vector<Point> path;
    Point apex = portals[0].first;
    Point left = apex, right = apex;
    std::size_t apex_i = 0, left_i = 0, right_i = 0;
    path.push_back(apex);
    for (std::size_t i = 1; i < portals.size(); ++i) {
        const Point l = portals[i].first;
        const Point r = portals[i].second;

        if (orient(apex, right, r) >= 0.0) {
            if (near_equal(apex, right) || orient(apex, left, r) < 0.0) {
                right = r;
                right_i = i;
            } else {
                if (!near_equal(path.back(), left)) path.push_back(left);
                apex = left;
                apex_i = left_i;
                left = right = apex;
                left_i = right_i = apex_i;
                i = apex_i;
                continue;
            }
        }

        if (orient(apex, left, l) <= 0.0) {
            if (near_equal(apex, left) || orient(apex, right, l) > 0.0) {
                left = l;
                left_i = i;
            } else {
                if (!near_equal(path.back(), right)) path.push_back(right);
                apex = right;
                apex_i = right_i;
                left = right = apex;
                left_i = right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
    }
    const Point end = portals.back().first;
    if (!near_equal(path.back(), end)) path.push_back(end);
    else path.back() = end;
    return path;
}

inline GeodesicPath funnel_path(const PolygonDomain& dom, Point p, Point q) {
    const auto tp = dom.locate(p);
    const auto tq = dom.locate(q);
    if (!tp || !tq) throw Error(ErrorCode::PointOutsidePolygon, "shortest_path endpoint lies outside the polygon");
    GeodesicPath path;
    if (p == q) {
        path.waypoints = {p};
        return path;
    }
    if (*tp == *tq) {
        path.waypoints = {p, q};
        path.length = dist(p, q);
        return path;
    }
    const auto& tri = dom.triangulation();
    const auto& poly = dom.polygon();
    const std::vector<std::size_t> sl = dom.sleeve(*tp, *tq);
    std::vector<std::pair<Point, Point>> inner;
    inner.reserve(sl.size());
    for (std::size_t k = 0; k + 1 < sl.size(); ++k) {
        const auto& tr = tri.triangles[sl[k]];
        int edge = -1;
        for (int e = 0; e < 3; ++e) {
            if (tri.neighbor[sl[k]][e] == static_cast<int>(sl[k + 1])) edge = e;
        }
        const Point a = poly[tr[edge]];
        const Point b = poly[tr[(edge + 1) % 3]];
        // Leaving a CCW triangle through a->b: b is on the left, a on the right.
        inner.emplace_back(b, a);
    }
    // An endpoint lying on a diagonal belongs to both triangles; a portal
    // through the apex itself has no well-defined sides, so skip it.
    const double on_tol = 1e-12 * (1.0 + dom.extent());
    std::size_t first = 0, last = inner.size();
    while (first < last && point_segment_distance(p, inner[first].first, inner[first].second) <= on_tol) ++first;
    while (last > first && point_segment_distance(q, inner[last - 1].first, inner[last - 1].second) <= on_tol) --last;
    if (first == last && (first > 0 || last < inner.size())) {
        path.waypoints = {p, q};
        path.length = dist(p, q);
        return path;
    }
    std::vector<std::pair<Point, Point>> portals;
    portals.reserve(last - first + 2);
    portals.emplace_back(p, p);
    portals.insert(portals.end(), inner.begin() + static_cast<std::ptrdiff_t>(first),
                   inner.begin() + static_cast<std::ptrdiff_t>(last));
    portals.emplace_back(q, q);
    path.waypoints = pull_string(portals);
    path.waypoints.front() = p;
    path.waypoints.back() = q;
    path.length = polyline_length(path.waypoints);
    return path;
}

}  // namespace detail

/// The unique geodesic from p to q. The computation always runs from the
/// lexicographically smaller endpoint, so d(p,q) and d(q,p) agree bit for bit.
inline GeodesicPath shortest_path(const PolygonDomain& dom, Point p, Point q) {
    if (!is_finite(p) || !is_finite(q)) throw Error(ErrorCode::NonFinite, "shortest_path endpoint is not finite");
    if (lex_less(q, p)) {
        GeodesicPath path = detail::funnel_path(dom, q, p);
        std::reverse(path.waypoints.begin(), path.waypoints.end());
        return path;
    }
    return detail::funnel_path(dom, p, q);
}

inline double geodesic_distance(const PolygonDomain& dom, Point p, Point q) {
    if (p == q) {
        if (!dom.locate(p)) throw Error(ErrorCode::PointOutsidePolygon, "point lies outside the polygon");
        return 0.0;
    }
    return shortest_path(dom, p, q).length;
}

/// Point at arclength s from the source.
inline Point point_along(const GeodesicPath& path, double s) {
    const double tol = 1e-12 * std::max(1.0, path.length);
    if (s < -tol || s > path.length + tol) throw Error(ErrorCode::OutOfRange, "arclength outside [0, length]");
    if (s <= 0.0) return path.source();
    if (s >= path.length) return path.target();
    double acc = 0.0;
    for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
        const double seg = dist(path.waypoints[i - 1], path.waypoints[i]);
        if (acc + seg >= s) {
            if (seg == 0.0) return path.waypoints[i];
            return lerp(path.waypoints[i - 1], path.waypoints[i], (s - acc) / seg);
        }
        acc += seg;
    }
    return path.target();
}

/// Point at fraction t in [0,1] of the geodesic.
inline Point point_at_fraction(const GeodesicPath& path, double t) {
    return point_along(path, std::clamp(t, 0.0, 1.0) * path.length);
}

inline Point geodesic_midpoint(const PolygonDomain& dom, Point p, Point q) {
    return point_at_fraction(shortest_path(dom, p, q), 0.5);
}

/// A common point of the two polylines, or nothing when they are disjoint.
inline std::optional<Point> paths_intersect(const GeodesicPath& a, const GeodesicPath& b, double eps = kGeomEps) {
    const auto& wa = a.waypoints;
    const auto& wb = b.waypoints;
    if (wa.size() == 1 && wb.size() == 1) {
        if (dist(wa[0], wb[0]) <= eps) return wa[0];
        return std::nullopt;
    }
    if (wa.size() == 1) {
        if (polyline_distance(wa[0], wb) <= eps) return wa[0];
        return std::nullopt;
    }
    if (wb.size() == 1) {
        if (polyline_distance(wb[0], wa) <= eps) return wb[0];
        return std::nullopt;
    }
    for (std::size_t i = 1; i < wa.size(); ++i) {
        for (std::size_t j = 1; j < wb.size(); ++j) {
            if (auto hit = segment_intersection(wa[i - 1], wa[i], wb[j - 1], wb[j], eps)) return hit;
        }
    }
    return std::nullopt;
}

struct DiametralPair {
    std::size_t u = 0;
    std::size_t v = 0;
    double diameter = 0.0;
};

/// Indices (u, v) of a pair realizing the geodesic diameter. Among ties the
/// first pair in (i, j), i <= j, order wins.
inline DiametralPair diametral_pair(const PolygonDomain& dom, std::span<const Point> pts) {
    if (pts.empty()) throw Error(ErrorCode::EmptySet, "diametral_pair of an empty set");
    DiametralPair best;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d = geodesic_distance(dom, pts[i], pts[j]);
            if (d > best.diameter) best = {i, j, d};
        }
    }
    if (pts.size() == 1) (void)geodesic_distance(dom, pts[0], pts[0]);
    return best;
}

inline double geodesic_diameter(const PolygonDomain& dom, std::span<const Point> pts) {
    if (pts.empty()) return 0.0;
    return diametral_pair(dom, pts).diameter;
}

/// Closed region bounded by the geodesic triangle x, y, z, as a ring.
inline std::vector<Point> geodesic_polygon_ring(const PolygonDomain& dom, std::span<const Point> corners) {
    std::vector<Point> ring;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const GeodesicPath side = shortest_path(dom, corners[i], corners[(i + 1) % corners.size()]);
        for (std::size_t k = 0; k + 1 < side.waypoints.size(); ++k) ring.push_back(side.waypoints[k]);
        if (side.waypoints.size() == 1) ring.push_back(side.waypoints[0]);
    }
    return ring;
}

inline bool in_geodesic_triangle(const PolygonDomain& dom, Point x, Point y, Point z, Point p,
                                 double eps = kGeomEps) {
    const std::array<Point, 3> corners{x, y, z};
    const auto ring = geodesic_polygon_ring(dom, corners);
    return locate_in_ring(p, ring, eps) != Location::Outside;
}

/// Length of the longest prefix of the ray origin + t*dir (|dir| = 1) that
/// stays inside the closed polygon.
inline double ray_exit_length(const PolygonDomain& dom, Point origin, Point dir) {
    const SimplePolygon& poly = dom.polygon();
    const double far = 4.0 * dom.extent() + 1.0;
    const Point end = origin + far * dir;
    std::vector<double> ts;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i];
        const Point b = poly[poly.next(i)];
        // Edge endpoints lying on the ray.
        for (Point v : {a, b}) {
            if (point_segment_distance(v, origin, end) <= kGeomEps) ts.push_back(dot(v - origin, dir));
        }
        const double o1 = orient(origin, end, a);
        const double o2 = orient(origin, end, b);
        const double o3 = orient(a, b, origin);
        const double o4 = orient(a, b, end);
        if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
            ts.push_back(far * o3 / (o3 - o4));
        }
    }
    std::sort(ts.begin(), ts.end());
    double prev = 0.0;
    for (double t : ts) {
        if (t <= prev + kGeomEps) continue;
        const Point mid = origin + (0.5 * (prev + t)) * dir;
        if (!dom.contains(mid)) return prev;
        prev = t;
    }
    return prev;
}

}  // namespace geopack

#endif  // GEOPACK_GEODESIC_HPP
