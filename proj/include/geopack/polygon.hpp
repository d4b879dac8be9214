#pragma once
#ifndef GEOPACK_POLYGON_HPP
#define GEOPACK_POLYGON_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "geopack/geometry.hpp"

namespace geopack {

/// A counter-clockwise simple polygon with no repeated or collinear
/// consecutive vertices. Construct through validate_polygon().
class SimplePolygon {
public:
    SimplePolygon() = default;

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    bool is_reflex(std::size_t i) const { return reflex_[i]; }
    const std::vector<bool>& reflex_flags() const { return reflex_; }
    std::size_t next(std::size_t i) const { return (i + 1) % vertices_.size(); }
    std::size_t prev(std::size_t i) const { return (i + vertices_.size() - 1) % vertices_.size(); }
    double area() const { return signed_area(vertices_); }
    double perimeter() const {
        double p = 0.0;
        for (std::size_t i = 0; i < size(); ++i) p += dist(vertices_[i], vertices_[next(i)]);
        return p;
    }
    std::size_t reflex_count() const {
        std::size_t c = 0;
        for (bool r : reflex_) c += r ? 1 : 0;
        return c;
    }
    /// Diagonal of the bounding box; the natural length scale of the polygon.
    double extent() const {
        double x0 = vertices_[0].x, x1 = x0, y0 = vertices_[0].y, y1 = y0;
        for (const Point& p : vertices_) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        return std::hypot(x1 - x0, y1 - y0);
    }

    Location locate(Point p, double eps = kGeomEps) const { return locate_in_ring(p, vertices_, eps); }
    bool contains(Point p, double eps = kGeomEps) const { return locate(p, eps) != Location::Outside; }

private:
    friend SimplePolygon validate_polygon(std::span<const Point> raw);

    std::vector<Point> vertices_;
    std::vector<bool> reflex_;
};

namespace detail {

inline std::vector<Point> drop_repeated_and_collinear(std::span<const Point> raw) {
    std::vector<Point> pts;
    for (const Point& p : raw) {
        if (pts.empty() || dist(pts.back(), p) > kGeomEps) pts.push_back(p);
    }
    while (pts.size() > 1 && dist(pts.front(), pts.back()) <= kGeomEps) pts.pop_back();

    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
            const Point a = pts[(i + pts.size() - 1) % pts.size()];
            const Point b = pts[i];
            const Point c = pts[(i + 1) % pts.size()];
            const double base = dist(a, c);
            // Only straight-through vertices are dropped; spikes are left for the simplicity check.
            if (base > 0.0 && std::abs(orient(a, b, c)) / base <= kGeomEps && dot(b - a, c - b) > 0.0) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return pts;
}

}  // namespace detail

/// Normalizes raw vertices into a CCW simple polygon with reflex flags.
inline SimplePolygon validate_polygon(std::span<const Point> raw) {
    if (raw.size() < 3) throw Error(ErrorCode::TooFewVertices, "a polygon needs at least 3 vertices");
    for (const Point& p : raw) {
        if (!is_finite(p)) throw Error(ErrorCode::NonFinite, "polygon vertex has a non-finite coordinate");
    }
    std::vector<Point> pts = detail::drop_repeated_and_collinear(raw);
    if (pts.size() < 3) throw Error(ErrorCode::DegenerateArea, "polygon collapses to fewer than 3 vertices");

    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = pts[i];
        const Point b = pts[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point c = pts[j];
            const Point d = pts[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges share exactly one vertex; any overlap is a fold.
                const Point other_ab = (j == i + 1) ? a : b;
                const Point other_cd = (j == i + 1) ? d : c;
                if (point_segment_distance(other_ab, c, d) <= kGeomEps ||
                    point_segment_distance(other_cd, a, b) <= kGeomEps) {
                    throw Error(ErrorCode::SelfIntersecting, "adjacent edges overlap");
                }
                continue;
            }
            if (segment_intersection(a, b, c, d, kGeomEps)) {
                throw Error(ErrorCode::SelfIntersecting, "edges " + std::to_string(i) + " and " +
                                                              std::to_string(j) + " intersect");
            }
        }
    }

    double area = signed_area(pts);
    if (std::abs(area) <= kGeomEps) throw Error(ErrorCode::DegenerateArea, "polygon has zero area");
    if (area < 0) std::reverse(pts.begin(), pts.end());

    SimplePolygon poly;
    poly.vertices_ = std::move(pts);
    poly.reflex_.resize(poly.vertices_.size());
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i) {
        const Point a = poly.vertices_[poly.prev(i)];
        const Point b = poly.vertices_[i];
        const Point c = poly.vertices_[poly.next(i)];
        poly.reflex_[i] = orient(a, b, c) < 0.0;
    }
    return poly;
}

inline SimplePolygon validate_polygon(const std::vector<Point>& raw) {
    return validate_polygon(std::span<const Point>(raw));
}

}  // namespace geopack

#endif  // GEOPACK_POLYGON_HPP
