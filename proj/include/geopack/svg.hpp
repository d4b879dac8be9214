#pragma once
#ifndef GEOPACK_SVG_HPP
#define GEOPACK_SVG_HPP

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "geopack/io.hpp"

namespace geopack {

struct SvgStyle {
    double width_px = 800.0;
    std::size_t circle_samples = 128;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string svg_points(const std::vector<Point>& pts) {
    std::string s;
    for (const Point& p : pts) {
        if (!s.empty()) s += ' ';
        s += fmt(p.x) + "," + fmt(-p.y);
    }
    return s;
}

}  // namespace detail

/// Boundary of the delta-ball around c, sampled along `samples` directions.
/// Each sample walks straight from c and stops at delta or at the polygon
/// boundary, so the curve is exact wherever c sees the sphere.
inline std::vector<Point> sampled_sphere(const PolygonDomain& dom, Point c, double delta, std::size_t samples) {
    std::vector<Point> out;
    out.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        const Point dir{std::cos(a), std::sin(a)};
        out.push_back(c + std::min(delta, ray_exit_length(dom, c, dir)) * dir);
    }
    return out;
}

inline std::string render_svg(const Instance& inst, const Certificate* cert = nullptr, const SvgStyle& style = {}) {
    using detail::fmt;
    const PolygonDomain dom = inst.domain();
    const auto verts = dom.polygon().vertices();
    double x0 = verts[0].x, x1 = x0, y0 = verts[0].y, y1 = y0;
    for (const Point& p : verts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
    const double w = x1 - x0 + 2 * pad, h = y1 - y0 + 2 * pad;
    const double unit = std::max(w, h) / 400.0;

    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(style.width_px) + "\" height=\"" +
                    fmt(style.width_px * h / w) + "\" viewBox=\"" + fmt(x0 - pad) + " " + fmt(-y1 - pad) + " " + fmt(w) +
                    " " + fmt(h) + "\">\n";
    s += "<polygon fill=\"#f4f4f0\" stroke=\"#333\" stroke-width=\"" + fmt(unit) + "\" points=\"" +
         detail::svg_points({verts.begin(), verts.end()}) + "\"/>\n";

    if (cert) {
        s += "<g fill=\"none\" stroke=\"#8a8\" stroke-width=\"" + fmt(unit) + "\" stroke-dasharray=\"" + fmt(3 * unit) + "\">\n";
        for (const auto& t : cert->trace) {
            if (t.u >= inst.points.size() || t.v >= inst.points.size() || t.u == t.v) continue;
            const GeodesicPath path = shortest_path(dom, inst.points[t.v], inst.points[t.u]);
            s += "<polyline points=\"" + detail::svg_points(path.waypoints) + "\"/>\n";
        }
        s += "</g>\n<g fill=\"#48c\" fill-opacity=\"0.08\" stroke=\"#48c\" stroke-width=\"" + fmt(0.7 * unit) + "\">\n";
        for (const Point& c : cert->centers) {
            if (!dom.contains(c)) continue;
            s += "<polygon points=\"" + detail::svg_points(sampled_sphere(dom, c, cert->radius, style.circle_samples)) +
                 "\"/>\n";
        }
        s += "</g>\n<g fill=\"#c42\">\n";
        for (const Point& c : cert->centers)
            s += "<rect x=\"" + fmt(c.x - 1.5 * unit) + "\" y=\"" + fmt(-c.y - 1.5 * unit) + "\" width=\"" +
                 fmt(3 * unit) + "\" height=\"" + fmt(3 * unit) + "\"/>\n";
        s += "</g>\n";
    }

    s += "<g fill=\"#222\">\n";
    for (const Point& p : inst.points)
        s += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(-p.y) + "\" r=\"" + fmt(1.5 * unit) + "\"/>\n";
    s += "</g>\n";
    if (cert) {
        s += "<g fill=\"none\" stroke=\"#d80\" stroke-width=\"" + fmt(unit) + "\">\n";
        for (std::size_t i : cert->packing)
            if (i < inst.points.size())
                s += "<circle cx=\"" + fmt(inst.points[i].x) + "\" cy=\"" + fmt(-inst.points[i].y) + "\" r=\"" +
                     fmt(3.5 * unit) + "\"/>\n";
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace geopack

#endif  // GEOPACK_SVG_HPP
