#pragma once
#ifndef GEOPACK_CHORD_HPP
#define GEOPACK_CHORD_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "geopack/geodesic.hpp"

namespace geopack {

/// A boundary-to-boundary geodesic containing a designated sub-geodesic [u,v].
/// Removing it splits the polygon into a left face and a right face.
struct Chord {
    GeodesicPath polyline;
    /// Arclength interval of [u,v] within the polyline.
    double inner_begin = 0.0;
    double inner_end = 0.0;
    /// The left face as a closed ring: the chord itself followed by the
    /// counter-clockwise boundary arc from the chord's end back to its start.
    std::vector<Point> left_face;
};

enum class Side { Left, Right, On };

inline const char* to_string(Side s) {
    switch (s) {
        case Side::Left: return "Left";
        case Side::Right: return "Right";
        case Side::On: return "On";
    }
    return "?";
}

namespace detail {

/// Position of a boundary point as arclength along the CCW boundary from vertex 0.
inline double boundary_position(const SimplePolygon& poly, Point p, std::vector<double>& vertex_pos) {
    const std::size_t n = poly.size();
    vertex_pos.assign(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) vertex_pos[i + 1] = vertex_pos[i] + dist(poly[i], poly[poly.next(i)]);
    std::size_t best_edge = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = point_segment_distance(p, poly[i], poly[poly.next(i)]);
        if (d < best) {
            best = d;
            best_edge = i;
        }
    }
    const Point a = poly[best_edge];
    const Point b = poly[poly.next(best_edge)];
    const double along = std::clamp(dot(p - a, b - a) / dist(a, b), 0.0, dist(a, b));
    return vertex_pos[best_edge] + along;
}

inline std::vector<Point> build_left_face(const SimplePolygon& poly, const std::vector<Point>& chord) {
    std::vector<double> vpos;
    const double start = boundary_position(poly, chord.front(), vpos);
    const double end = boundary_position(poly, chord.back(), vpos);
    const double perim = vpos.back();
    std::vector<Point> ring(chord.begin(), chord.end());
    // Walk CCW from `end` to `start`, collecting the vertices strictly between.
    double span = start - end;
    if (span < 0) span += perim;
    const std::size_t n = poly.size();
    std::vector<std::pair<double, std::size_t>> between;
    for (std::size_t i = 0; i < n; ++i) {
        double off = vpos[i] - end;
        if (off < 0) off += perim;
        if (off > 1e-12 && off < span - 1e-12) between.emplace_back(off, i);
    }
    std::sort(between.begin(), between.end());
    for (const auto& [off, i] : between) ring.push_back(poly[i]);
    return ring;
}

}  // namespace detail

/// Extends a geodesic straight through both endpoints until it reaches the
/// polygon boundary. A straight continuation that would leave the polygon
/// stops the chord at that boundary point.
inline Chord chord_extension(const PolygonDomain& dom, const GeodesicPath& path) {
    if (path.length <= 0.0) throw Error(ErrorCode::InvalidInput, "chord_extension needs a path of positive length");
    const auto& w = path.waypoints;
    const Point head_dir = (w[w.size() - 1] - w[w.size() - 2]) * (1.0 / dist(w[w.size() - 1], w[w.size() - 2]));
    const Point tail_dir = (w[0] - w[1]) * (1.0 / dist(w[0], w[1]));
    const double head_len = ray_exit_length(dom, w.back(), head_dir);
    const double tail_len = ray_exit_length(dom, w.front(), tail_dir);

    Chord chord;
    auto& pts = chord.polyline.waypoints;
    if (tail_len > kGeomEps) pts.push_back(w.front() + tail_len * tail_dir);
    pts.insert(pts.end(), w.begin(), w.end());
    if (head_len > kGeomEps) pts.push_back(w.back() + head_len * head_dir);
    chord.polyline.length = polyline_length(pts);
    chord.inner_begin = tail_len > kGeomEps ? dist(pts[0], pts[1]) : 0.0;
    chord.inner_end = chord.inner_begin + path.length;
    chord.left_face = detail::build_left_face(dom.polygon(), pts);
    return chord;
}

/// Which face of the chord p lies in; points within kGeomEps of the chord are On.
inline Side side_of(const Chord& chord, Point p, double eps = kGeomEps) {
    if (polyline_distance(p, chord.polyline.waypoints) <= eps) return Side::On;
    const auto& face = chord.left_face;
    if (ring_distance(p, face) <= eps) return Side::Left;
    return winding_number(p, face) != 0 ? Side::Left : Side::Right;
}

}  // namespace geopack

#endif  // GEOPACK_CHORD_HPP
