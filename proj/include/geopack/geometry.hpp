#pragma once
#ifndef GEOPACK_GEOMETRY_HPP
#define GEOPACK_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geopack {

/// Absolute tolerance for point-on-segment and side tests.
inline constexpr double kGeomEps = 1e-9;
/// Relative slack used when certifying covers and simplex diameters.
inline constexpr double kCoverEps = 1e-6;
/// Relative tolerance (times diam(S)) for iterative center searches.
inline constexpr double kOptRel = 1e-7;

enum class ErrorCode {
    TooFewVertices,
    SelfIntersecting,
    DegenerateArea,
    NonFinite,
    PointOutsidePolygon,
    OutOfRange,
    EmptySet,
    InstanceTooLarge,
    Infeasible,
    NotASimplex,
    DiameterTooLarge,
    CoverageFailure,
    SideTooLong,
    GenerationTimeout,
    InvalidInput,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::SelfIntersecting: return "SelfIntersecting";
        case ErrorCode::DegenerateArea: return "DegenerateArea";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::NotASimplex: return "NotASimplex";
        case ErrorCode::DiameterTooLarge: return "DiameterTooLarge";
        case ErrorCode::CoverageFailure: return "CoverageFailure";
        case ErrorCode::SideTooLong: return "SideTooLong";
        case ErrorCode::GenerationTimeout: return "GenerationTimeout";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
};

/// Strict lexicographic order on (x, y).
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Twice the signed area of (o, a, b); positive when b lies to the left of o->a.
inline double orient(Point o, Point a, Point b) { return cross(a - o, b - o); }

inline Point lerp(Point a, Point b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

inline double point_segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, lerp(a, b, t));
}

inline Point closest_on_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return a;
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return lerp(a, b, t);
}

/// A common point of the closed segments [a,b] and [c,d], if any (within eps).
/// Touching configurations report the touching endpoint.
inline std::optional<Point> segment_intersection(Point a, Point b, Point c, Point d,
                                                 double eps = kGeomEps) {
    if (point_segment_distance(a, c, d) <= eps) return a;
    if (point_segment_distance(b, c, d) <= eps) return b;
    if (point_segment_distance(c, a, b) <= eps) return c;
    if (point_segment_distance(d, a, b) <= eps) return d;
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
        const double t = o3 / (o3 - o4);
        return lerp(a, b, t);
    }
    return std::nullopt;
}

inline double polyline_length(std::span<const Point> pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
    return len;
}

inline double signed_area(std::span<const Point> ring) {
    double a = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
    return 0.5 * a;
}

/// Distance from p to the closed ring (last vertex joins the first).
inline double ring_distance(Point p, std::span<const Point> ring) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = ring.size();
    if (n == 1) return dist(p, ring[0]);
    for (std::size_t i = 0; i < n; ++i) best = std::min(best, point_segment_distance(p, ring[i], ring[(i + 1) % n]));
    return best;
}

/// Distance from p to an open polyline.
inline double polyline_distance(Point p, std::span<const Point> pts) {
    if (pts.size() == 1) return dist(p, pts[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pts.size(); ++i) best = std::min(best, point_segment_distance(p, pts[i - 1], pts[i]));
    return best;
}

/// Winding number of the closed ring around p (p assumed off the ring).
inline int winding_number(Point p, std::span<const Point> ring) {
    int wn = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++wn;
        } else {
            if (b.y <= p.y && orient(a, b, p) < 0) --wn;
        }
    }
    return wn;
}

enum class Location { Inside, Boundary, Outside };

inline Location locate_in_ring(Point p, std::span<const Point> ring, double eps = kGeomEps) {
    if (ring.empty()) return Location::Outside;
    if (ring_distance(p, ring) <= eps) return Location::Boundary;
    return winding_number(p, ring) != 0 ? Location::Inside : Location::Outside;
}

}  // namespace geopack

#endif  // GEOPACK_GEOMETRY_HPP
