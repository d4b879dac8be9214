#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>

#include "geopack/geodesic.hpp"
#include "geopack/random.hpp"

namespace geopack::testing {

/// Largest excess (lhs - rhs) observed over `samples` draws; positive values
/// beyond tolerance are violations.
struct LemmaStats {
    std::size_t samples = 0;
    std::size_t applicable = 0;
    std::size_t violations = 0;
    double worst_excess = -std::numeric_limits<double>::infinity();

    void record(double lhs, double rhs, double tol) {
        ++applicable;
        worst_excess = std::max(worst_excess, lhs - rhs);
        if (lhs > rhs + tol) ++violations;
    }
};

using Sampler = std::function<void(Rng&, const PolygonDomain&, LemmaStats&, double)>;

inline void check_ball_convexity(Rng& rng, const PolygonDomain& dom, LemmaStats& st, double tol) {
    const Point c = random_interior_point(rng, dom);
    const Point p1 = random_interior_point(rng, dom), p2 = random_interior_point(rng, dom);
    const double r = std::max(geodesic_distance(dom, c, p1), geodesic_distance(dom, c, p2));
    st.record(geodesic_distance(dom, c, geodesic_midpoint(dom, p1, p2)), r, tol);
}

inline void check_busemann_midpoint(Rng& rng, const PolygonDomain& dom, LemmaStats& st, double tol) {
    const Point a = random_interior_point(rng, dom), b = random_interior_point(rng, dom);
    const Point c = random_interior_point(rng, dom), d = random_interior_point(rng, dom);
    const double lhs = geodesic_distance(dom, geodesic_midpoint(dom, a, b), geodesic_midpoint(dom, c, d));
    st.record(lhs, 0.5 * (geodesic_distance(dom, a, c) + geodesic_distance(dom, b, d)), tol);
}

inline void check_thales(Rng& rng, const PolygonDomain& dom, LemmaStats& st, double tol) {
    const Point o = random_interior_point(rng, dom);
    const Point a = random_interior_point(rng, dom), b = random_interior_point(rng, dom);
    const double t = rng.uniform();
    const Point pa = point_at_fraction(shortest_path(dom, o, a), t);
    const Point pb = point_at_fraction(shortest_path(dom, o, b), t);
    st.record(geodesic_distance(dom, pa, pb), t * geodesic_distance(dom, a, b), tol);
}

inline void check_quadrangle(Rng& rng, const PolygonDomain& dom, LemmaStats& st, double tol) {
    const Point x = random_interior_point(rng, dom), y = random_interior_point(rng, dom);
    const Point u = random_interior_point(rng, dom), v = random_interior_point(rng, dom);
    if (!paths_intersect(shortest_path(dom, x, y), shortest_path(dom, u, v))) return;
    const double lhs = std::max(geodesic_distance(dom, x, u) + geodesic_distance(dom, y, v),
                                geodesic_distance(dom, x, v) + geodesic_distance(dom, y, u));
    st.record(lhs, geodesic_distance(dom, x, y) + geodesic_distance(dom, u, v), tol);
}

/// Point of the geodesic triangle xyz: on [x, a] for a on [y, z].
inline Point sample_in_triangle(Rng& rng, const PolygonDomain& dom, Point x, Point y, Point z) {
    const Point a = point_at_fraction(shortest_path(dom, y, z), rng.uniform());
    return point_at_fraction(shortest_path(dom, x, a), rng.uniform());
}

inline double perimeter(const PolygonDomain& dom, Point a, Point b, Point c) {
    return geodesic_distance(dom, a, b) + geodesic_distance(dom, b, c) + geodesic_distance(dom, c, a);
}

inline void check_perimeter_monotonicity(Rng& rng, const PolygonDomain& dom, LemmaStats& st, double tol) {
    const Point x = random_interior_point(rng, dom), y = random_interior_point(rng, dom);
    const Point z = random_interior_point(rng, dom);
    const Point a = sample_in_triangle(rng, dom, x, y, z);
    const Point b = sample_in_triangle(rng, dom, x, y, z);
    const Point c = sample_in_triangle(rng, dom, x, y, z);
    st.record(perimeter(dom, a, b, c), perimeter(dom, x, y, z), tol);
}

/// Draws until `checks` samples were applicable (or 50x that many draws),
/// cycling through `domains`.
inline LemmaStats run_lemma(const Sampler& sampler, std::span<const PolygonDomain> domains, Rng& rng,
                            std::size_t checks, double tol) {
    LemmaStats st;
    for (std::size_t k = 0; st.applicable < checks && k < 50 * checks; ++k) {
        sampler(rng, domains[k % domains.size()], st, tol);
        ++st.samples;
    }
    return st;
}

}  // namespace geopack::testing
