#pragma once

#include <cmath>
#include <vector>

#include "geopack/geodesic.hpp"
#include "geopack/random.hpp"

namespace geopack::testing {

inline PolygonDomain square_domain(double side = 10.0) {
    const std::vector<Point> v{{0, 0}, {side, 0}, {side, side}, {0, side}};
    return PolygonDomain(validate_polygon(v));
}

/// The L-shaped hexagon (0,0),(4,0),(4,2),(2,2),(2,4),(0,4); reflex at (2,2).
inline PolygonDomain l_hexagon() {
    const std::vector<Point> v{{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}};
    return PolygonDomain(validate_polygon(v));
}

/// A comb-like polygon with several reflex vertices, scaled to ~[0,100]^2.
inline PolygonDomain comb_domain() {
    const std::vector<Point> v{{0, 0},   {100, 0}, {100, 100}, {80, 100}, {80, 30}, {60, 30},
                               {60, 100}, {40, 100}, {40, 30}, {20, 30}, {20, 100}, {0, 100}};
    return PolygonDomain(validate_polygon(v));
}

inline PolygonDomain random_domain(Rng& rng, std::size_t n_vertices) {
    for (;;) {
        if (auto poly = random_simple_polygon(rng, n_vertices)) return PolygonDomain(std::move(*poly));
    }
}

inline std::vector<Point> random_points(Rng& rng, const PolygonDomain& dom, std::size_t n) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_interior_point(rng, dom));
    return pts;
}

inline std::vector<Point> ring_of(const PolygonDomain& dom) {
    const auto v = dom.polygon().vertices();
    return {v.begin(), v.end()};
}

}  // namespace geopack::testing
