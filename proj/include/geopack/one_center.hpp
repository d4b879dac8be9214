#pragma once
#ifndef GEOPACK_ONE_CENTER_HPP
#define GEOPACK_ONE_CENTER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geopack/geodesic.hpp"

namespace geopack {

struct CenterResult {
    Point center;
    double radius = 0.0;
};

namespace detail {

/// Unit gradient of d(., s) at c: points from the first waypoint toward c.
inline std::optional<Point> distance_gradient(const GeodesicPath& path_from_c) {
    const auto& w = path_from_c.waypoints;
    if (w.size() < 2) return std::nullopt;
    const double len = dist(w[0], w[1]);
    if (len <= 0.0) return std::nullopt;
    return (w[0] - w[1]) * (1.0 / len);
}

inline double eccentricity(const PolygonDomain& dom, Point c, std::span<const Point> pts) {
    double r = 0.0;
    for (const Point& s : pts) r = std::max(r, geodesic_distance(dom, c, s));
    return r;
}

/// Point equidistant from a, b, c (the geodesic circumcenter), by damped
/// Newton on (d(.,a)-d(.,b), d(.,a)-d(.,c)) from the given start.
inline std::optional<Point> geodesic_circumcenter(const PolygonDomain& dom, Point a, Point b, Point c, Point start) {
    const double scale = std::max({geodesic_distance(dom, a, b), geodesic_distance(dom, b, c),
                                   geodesic_distance(dom, a, c), 1e-300});
    auto residual = [&](Point p, std::array<GeodesicPath, 3>& paths) {
        paths[0] = shortest_path(dom, p, a);
        paths[1] = shortest_path(dom, p, b);
        paths[2] = shortest_path(dom, p, c);
        return std::array<double, 2>{paths[0].length - paths[1].length, paths[0].length - paths[2].length};
    };
    std::array<GeodesicPath, 3> paths;
    Point p = start;
    if (!dom.contains(p)) return std::nullopt;
    auto f = residual(p, paths);
    double fnorm = std::hypot(f[0], f[1]);
    for (int iter = 0; iter < 60 && fnorm > 1e-13 * scale; ++iter) {
        const auto ga = distance_gradient(paths[0]);
        const auto gb = distance_gradient(paths[1]);
        const auto gc = distance_gradient(paths[2]);
        if (!ga || !gb || !gc) return std::nullopt;
        const Point r0 = *ga - *gb;
        const Point r1 = *ga - *gc;
        const double det = cross(r0, r1);
        if (std::abs(det) < 1e-14) return std::nullopt;
        // Solve [r0; r1] * step = -f.
        const Point step{(-f[0] * r1.y + f[1] * r0.y) / det, (-r0.x * f[1] + r1.x * f[0]) / det};
        double t = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
            const Point cand = p + t * step;
            if (!dom.contains(cand)) continue;
            std::array<GeodesicPath, 3> cand_paths;
            const auto fc = residual(cand, cand_paths);
            const double cn = std::hypot(fc[0], fc[1]);
            if (cn < fnorm) {
                p = cand;
                f = fc;
                fnorm = cn;
                paths = std::move(cand_paths);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (fnorm > 1e-9 * scale) return std::nullopt;
    return p;
}

/// Compass search on the eccentricity, used when the support-set iteration
/// cannot make progress (e.g. a circumcenter solve fails).
inline CenterResult descend_eccentricity(const PolygonDomain& dom, std::span<const Point> pts, Point start,
                                         double diam) {
    Point best = start;
    double best_r = eccentricity(dom, best, pts);
    double step = std::max(diam, 1e-12) / 4.0;
    const double stop = std::max(kOptRel * diam, 1e-15);
    constexpr int kDirs = 24;
    while (step > stop) {
        bool improved = false;
        for (int k = 0; k < kDirs; ++k) {
            const double th = 2.0 * M_PI * k / kDirs;
            const Point cand = best + step * Point{std::cos(th), std::sin(th)};
            if (!dom.contains(cand)) continue;
            const double r = eccentricity(dom, cand, pts);
            if (r < best_r) {
                best_r = r;
                best = cand;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return {best, best_r};
}

/// Smallest enclosing geodesic ball of at most three points.
inline std::optional<CenterResult> small_enclosing(const PolygonDomain& dom, std::span<const Point> pts) {
    if (pts.size() == 1) return CenterResult{pts[0], 0.0};
    if (pts.size() == 2) {
        const GeodesicPath path = shortest_path(dom, pts[0], pts[1]);
        return CenterResult{point_at_fraction(path, 0.5), 0.5 * path.length};
    }
    std::optional<CenterResult> best;
    for (int k = 0; k < 3; ++k) {
        const Point a = pts[(k + 1) % 3], b = pts[(k + 2) % 3], other = pts[k];
        const GeodesicPath path = shortest_path(dom, a, b);
        const Point m = point_at_fraction(path, 0.5);
        const double r = 0.5 * path.length;
        if (geodesic_distance(dom, m, other) <= r * (1.0 + 1e-12) && (!best || r < best->radius)) {
            best = CenterResult{m, r};
        }
    }
    if (best) return best;
    // All three points are on the optimal sphere.
    std::vector<Point> starts;
    const Point a = pts[0], b = pts[1], c = pts[2];
    const double d = 2.0 * cross(b - a, c - a);
    if (d != 0.0) {
        const double bb = dot(b - a, b - a), cc = dot(c - a, c - a);
        starts.push_back(a + Point{((c - a).y * bb - (b - a).y * cc) / d, ((b - a).x * cc - (c - a).x * bb) / d});
    }
    const Point mab = geodesic_midpoint(dom, a, b);
    starts.push_back(point_at_fraction(shortest_path(dom, mab, c), 1.0 / 3.0));
    for (const Point& s : starts) {
        if (auto cc = geodesic_circumcenter(dom, a, b, c, s)) {
            return CenterResult{*cc, eccentricity(dom, *cc, pts)};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Minimizer of max_i d(c, s_i) over the polygon. The optimum is supported by
/// at most three points, so the search walks support sets (pairs and triples)
/// until the current ball encloses everything; compass descent is the fallback.
inline CenterResult geodesic_one_center(const PolygonDomain& dom, std::span<const Point> pts) {
    if (pts.empty()) throw Error(ErrorCode::EmptySet, "one-center of an empty set");
    if (pts.size() == 1) {
        if (!dom.locate(pts[0])) throw Error(ErrorCode::PointOutsidePolygon, "point lies outside the polygon");
        return {pts[0], 0.0};
    }
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double d = geodesic_distance(dom, pts[0], pts[i]);
        if (d > far_d) {
            far_d = d;
            far = i;
        }
    }
    if (far_d == 0.0) return {pts[0], 0.0};

    std::vector<Point> support{pts[0], pts[far]};
    CenterResult cur = *detail::small_enclosing(dom, support);
    const double scale = far_d;
    for (int iter = 0; iter < 4 * static_cast<int>(pts.size()) + 20; ++iter) {
        std::size_t worst = 0;
        double worst_d = -1.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double d = geodesic_distance(dom, cur.center, pts[i]);
            if (d > worst_d) {
                worst_d = d;
                worst = i;
            }
        }
        if (worst_d <= cur.radius + 1e-12 * scale) {
            cur.radius = worst_d;
            return cur;
        }
        // Smallest ball through the new point that still encloses the old support.
        std::vector<Point> pool = support;
        pool.push_back(pts[worst]);
        std::optional<CenterResult> next;
        std::vector<Point> next_support;
        const std::size_t m = pool.size();
        const Point added = pool.back();
        for (std::size_t i = 0; i + 1 < m; ++i) {
            std::vector<std::vector<Point>> subsets{{pool[i], added}};
            for (std::size_t j = i + 1; j + 1 < m; ++j) subsets.push_back({pool[i], pool[j], added});
            for (const auto& sub : subsets) {
                auto ball = detail::small_enclosing(dom, sub);
                if (!ball) continue;
                bool encloses = true;
                for (const Point& q : pool) {
                    if (geodesic_distance(dom, ball->center, q) > ball->radius + 1e-10 * scale) {
                        encloses = false;
                        break;
                    }
                }
                if (encloses && (!next || ball->radius < next->radius)) {
                    next = ball;
                    next_support = sub;
                }
            }
        }
        if (!next || next->radius <= cur.radius) break;
        cur = *next;
        support = next_support;
    }
    return detail::descend_eccentricity(dom, pts, cur.center, scale);
}

}  // namespace geopack

#endif  // GEOPACK_ONE_CENTER_HPP
