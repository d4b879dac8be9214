#pragma once
#ifndef GEOPACK_COVER_CORE_HPP
#define GEOPACK_COVER_CORE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geopack/chord.hpp"
#include "geopack/hull.hpp"
#include "geopack/one_center.hpp"
#include "geopack/oracles.hpp"

namespace geopack {

// ---------------------------------------------------------------------------
// Critical triangles
// ---------------------------------------------------------------------------

struct CriticalTriangle {
    std::array<Point, 3> base;
    /// apexes[k] lies opposite base[k]: within delta of the other two base points.
    std::array<Point, 3> apexes;
    double perimeter = 0.0;
    bool critical = false;
};

namespace detail {

inline double perimeter3(const PolygonDomain& dom, Point a, Point b, Point c) {
    return geodesic_distance(dom, a, b) + geodesic_distance(dom, b, c) + geodesic_distance(dom, c, a);
}

/// Newton solve of d(p,y) = d(p,z) = delta from `start`.
inline std::optional<Point> two_sphere_point(const PolygonDomain& dom, Point y, Point z, double delta, Point start) {
    if (!dom.contains(start)) return std::nullopt;
    auto residual = [&](Point p, GeodesicPath& py, GeodesicPath& pz) {
        py = shortest_path(dom, p, y);
        pz = shortest_path(dom, p, z);
        return std::array<double, 2>{py.length - delta, pz.length - delta};
    };
    GeodesicPath py, pz;
    Point p = start;
    auto f = residual(p, py, pz);
    double fn = std::hypot(f[0], f[1]);
    for (int iter = 0; iter < 50 && fn > 1e-13 * delta; ++iter) {
        const auto gy = distance_gradient(py);
        const auto gz = distance_gradient(pz);
        if (!gy || !gz) return std::nullopt;
        const double det = cross(*gy, *gz);
        if (std::abs(det) < 1e-12) return std::nullopt;
        // Solve [gy; gz] * s = -f.
        const Point step{(-f[0] * gz->y + f[1] * gy->y) / det, (-gy->x * f[1] + gz->x * f[0]) / det};
        double t = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
            const Point cand = p + t * step;
            if (!dom.contains(cand)) continue;
            GeodesicPath cy, cz;
            const auto fc = residual(cand, cy, cz);
            const double cn = std::hypot(fc[0], fc[1]);
            if (cn < fn) {
                p = cand;
                f = fc;
                fn = cn;
                py = std::move(cy);
                pz = std::move(cz);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (fn > 1e-9 * delta) return std::nullopt;
    return p;
}

/// Point of Delta(x,y,z) on both spheres of radius delta around y and z.
inline std::optional<Point> critical_apex(const PolygonDomain& dom, Point x, Point y, Point z, double delta) {
    const GeodesicPath yz = shortest_path(dom, y, z);
    const Point mid = point_at_fraction(yz, 0.5);
    const double half = 0.5 * yz.length;
    // Touching spheres: the midpoint is the only common point.
    if (half >= delta * (1.0 - 1e-9)) return mid;

    const double h = std::sqrt(delta * delta - half * half);
    std::vector<Point> starts;
    const GeodesicPath to_x = shortest_path(dom, mid, x);
    if (to_x.waypoints.size() >= 2) {
        // Offset normal to [y,z] at the midpoint, toward x.
        const double s = std::clamp(half, 0.0, yz.length);
        std::size_t seg = 1;
        double acc = 0.0;
        for (; seg + 1 < yz.waypoints.size(); ++seg) {
            const double l = dist(yz.waypoints[seg - 1], yz.waypoints[seg]);
            if (acc + l >= s) break;
            acc += l;
        }
        const Point tan = yz.waypoints[seg] - yz.waypoints[seg - 1];
        Point nrm{-tan.y, tan.x};
        nrm = nrm * (1.0 / norm(nrm));
        if (dot(nrm, to_x.waypoints[1] - mid) < 0) nrm = nrm * -1.0;
        starts.push_back(mid + h * nrm);
        starts.push_back(point_along(to_x, std::min(h, to_x.length)));
        // Boundary of A_x along [mid, x] by bisection.
        double lo = 0.0, hi = to_x.length;
        auto over = [&](double s2) {
            const Point p = point_along(to_x, s2);
            return std::max(geodesic_distance(dom, p, y), geodesic_distance(dom, p, z)) > delta;
        };
        if (over(hi)) {
            for (int it = 0; it < 60; ++it) {
                const double m = 0.5 * (lo + hi);
                (over(m) ? hi : lo) = m;
            }
            starts.push_back(point_along(to_x, lo));
        }
    }
    const std::array<Point, 3> corners{x, y, z};
    const auto ring = geodesic_polygon_ring(dom, corners);
    const double tol = kGeomEps * std::max(1.0, delta);
    for (const Point& s : starts) {
        auto p = two_sphere_point(dom, y, z, delta, s);
        if (p && locate_in_ring(*p, ring, tol) != Location::Outside) return p;
    }
    return std::nullopt;
}

/// Boundary point of A_x on [mid(y,z), x]: within delta of y and z, used when
/// the two-sphere solve fails.
inline Point apex_fallback(const PolygonDomain& dom, Point x, Point y, Point z, double delta) {
    const Point mid = geodesic_midpoint(dom, y, z);
    const GeodesicPath to_x = shortest_path(dom, mid, x);
    auto inside = [&](double s) {
        const Point p = point_along(to_x, s);
        return std::max(geodesic_distance(dom, p, y), geodesic_distance(dom, p, z)) <= delta;
    };
    double lo = 0.0, hi = to_x.length;
    if (inside(hi)) return x;
    for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (lo + hi);
        (inside(m) ? lo : hi) = m;
    }
    return point_along(to_x, lo);
}

}  // namespace detail

/// Critical triangle of the triplet x, y, z. A non-critical triplet (the three
/// delta-balls share a point) returns the one-center three times.
inline CriticalTriangle critical_triangle(const PolygonDomain& dom, double delta, Point x, Point y, Point z) {
    const double lim = 2.0 * delta * (1.0 + kCoverEps);
    if (geodesic_distance(dom, x, y) > lim || geodesic_distance(dom, y, z) > lim || geodesic_distance(dom, x, z) > lim)
        throw Error(ErrorCode::NotASimplex, "triplet has a pair farther apart than 2*delta");
    CriticalTriangle tri;
    tri.base = {x, y, z};
    const std::array<Point, 3> pts{x, y, z};
    const CenterResult one = geodesic_one_center(dom, pts);
    if (one.radius <= delta * (1.0 + kCoverEps)) {
        tri.apexes = {one.center, one.center, one.center};
        tri.critical = false;
        return tri;
    }
    tri.critical = true;
    for (int k = 0; k < 3; ++k) {
        const Point a = pts[k], b = pts[(k + 1) % 3], c = pts[(k + 2) % 3];
        auto apex = detail::critical_apex(dom, a, b, c, delta);
        tri.apexes[k] = apex ? *apex : detail::apex_fallback(dom, a, b, c, delta);
    }
    tri.perimeter = detail::perimeter3(dom, tri.apexes[0], tri.apexes[1], tri.apexes[2]);
    return tri;
}

// ---------------------------------------------------------------------------
// Three-ball cover of a delta-simplex
// ---------------------------------------------------------------------------

enum class SimplexMethod { Single, OneBall, CriticalTriangle, Fallback };

inline const char* to_string(SimplexMethod m) {
    switch (m) {
        case SimplexMethod::Single: return "single";
        case SimplexMethod::OneBall: return "one_ball";
        case SimplexMethod::CriticalTriangle: return "critical_triangle";
        case SimplexMethod::Fallback: return "fallback";
    }
    return "?";
}

struct SimplexCover {
    Cover cover;
    SimplexMethod method = SimplexMethod::Single;
    std::optional<CriticalTriangle> triangle;
    std::size_t triplets_examined = 0;
};

namespace detail {

/// Bitset over point indices.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
    bool covers(const PointSet& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (other.words_[w] & ~words_[w]) return false;
        return true;
    }
    PointSet minus(const PointSet& other) const {
        PointSet r(*this);
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~other.words_[w];
        return r;
    }
    std::optional<std::size_t> first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }
    static PointSet full(std::size_t n) {
        PointSet s(n);
        for (std::size_t i = 0; i < n; ++i) s.set(i);
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::vector<std::size_t> assign_nearest(const PolygonDomain& dom, std::span<const Point> pts,
                                               const std::vector<Point>& centers) {
    std::vector<std::size_t> out(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double d = geodesic_distance(dom, pts[i], centers[c]);
            if (d < best) {
                best = d;
                out[i] = c;
            }
        }
    }
    return out;
}

/// Fewest (at most max_k) candidate balls of radius r covering all points.
inline std::optional<std::vector<Point>> small_candidate_cover(const PolygonDomain& dom, std::span<const Point> pts,
                                                               const std::vector<Point>& cands, double r,
                                                               std::size_t max_k) {
    const std::size_t n = pts.size();
    std::vector<PointSet> cov;
    std::vector<Point> where;
    for (const Point& c : cands) {
        if (!dom.contains(c)) continue;
        PointSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (geodesic_distance(dom, c, pts[i]) <= r) s.set(i);
        cov.push_back(std::move(s));
        where.push_back(c);
    }
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, const PointSet& open, std::size_t left) -> bool {
        const auto f = open.first();
        if (!f) return true;
        if (left == 0) return false;
        for (std::size_t k = 0; k < cov.size(); ++k) {
            if (!cov[k].test(*f)) continue;
            pick.push_back(k);
            if (self(self, open.minus(cov[k]), left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= max_k; ++k) {
        pick.clear();
        if (search(search, PointSet::full(n), k)) {
            std::vector<Point> out;
            for (std::size_t i : pick) out.push_back(where[i]);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// At most three delta-balls covering a set of geodesic diameter <= 2*delta:
/// one ball when the one-center suffices, else balls at the apexes of the
/// critical triangle of largest perimeter, else an exhaustive candidate search.
inline SimplexCover cover_simplex_detailed(const PolygonDomain& dom, std::span<const Point> pts, double delta) {
    if (pts.empty()) throw Error(ErrorCode::EmptySet, "cover_simplex of an empty set");
    if (!(delta > 0)) throw Error(ErrorCode::InvalidInput, "delta must be positive");
    SimplexCover out;
    out.cover.radius = delta;
    const std::size_t n = pts.size();
    if (n == 1) {
        out.cover.centers = {pts[0]};
        out.cover.assignment = {0};
        out.method = SimplexMethod::Single;
        return out;
    }
    const double r = delta * (1.0 + kCoverEps);
    const DistanceMatrix d = DistanceMatrix::geodesic(dom, pts);
    double diam = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) diam = std::max(diam, d(i, j));
    if (diam > 2.0 * r) throw Error(ErrorCode::DiameterTooLarge, "set is not a delta-simplex");

    const CenterResult one = geodesic_one_center(dom, pts);
    if (one.radius <= r) {
        out.cover.centers = {one.center};
        out.cover.assignment.assign(n, 0);
        out.method = SimplexMethod::OneBall;
        return out;
    }

    // Pair midpoints, computed once.
    std::vector<Point> mids(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) mids[i * n + j] = mids[j * n + i] = geodesic_midpoint(dom, pts[i], pts[j]);

    struct Triple {
        double bound;
        std::size_t i, j, k;
    };
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) triples.push_back({0.5 * (d(i, j) + d(j, k) + d(i, k)), i, j, k});
    std::stable_sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) { return a.bound > b.bound; });

    std::vector<Point> apex_pool;
    std::optional<CriticalTriangle> best;
    const double slack = 1e-9 * std::max(1.0, diam);
    for (const Triple& t : triples) {
        if (best && t.bound + slack < best->perimeter) break;
        ++out.triplets_examined;
        // A pair midpoint within delta of the third point is common to all three balls.
        if (geodesic_distance(dom, mids[t.j * n + t.k], pts[t.i]) <= r ||
            geodesic_distance(dom, mids[t.i * n + t.k], pts[t.j]) <= r ||
            geodesic_distance(dom, mids[t.i * n + t.j], pts[t.k]) <= r)
            continue;
        const CriticalTriangle tri = critical_triangle(dom, delta, pts[t.i], pts[t.j], pts[t.k]);
        if (!tri.critical) continue;
        apex_pool.insert(apex_pool.end(), tri.apexes.begin(), tri.apexes.end());
        if (!best || tri.perimeter > best->perimeter) best = tri;
    }

    if (best) {
        std::vector<Point> centers(best->apexes.begin(), best->apexes.end());
        Cover c{delta, centers, detail::assign_nearest(dom, pts, centers)};
        if (verify_cover(dom, pts, c).ok) {
            out.cover = std::move(c);
            out.method = SimplexMethod::CriticalTriangle;
            out.triangle = best;
            return out;
        }
    }

    out.method = SimplexMethod::Fallback;
    out.triangle = best;
    std::vector<Point> cands(pts.begin(), pts.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cands.push_back(mids[i * n + j]);
    cands.insert(cands.end(), apex_pool.begin(), apex_pool.end());
    cands.push_back(one.center);
    auto found = detail::small_candidate_cover(dom, pts, cands, r, 3);
    if (!found) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    const std::array<Point, 3> tri{pts[i], pts[j], pts[k]};
                    cands.push_back(geodesic_one_center(dom, tri).center);
                }
        found = detail::small_candidate_cover(dom, pts, cands, r, 3);
    }
    if (!found) throw Error(ErrorCode::CoverageFailure, "no cover of the simplex with three balls was found");
    out.cover.centers = *found;
    out.cover.assignment = detail::assign_nearest(dom, pts, out.cover.centers);
    return out;
}

inline Cover cover_simplex(const PolygonDomain& dom, std::span<const Point> pts, double delta) {
    return cover_simplex_detailed(dom, pts, delta).cover;
}

// ---------------------------------------------------------------------------
// Nineteen-ball cover of B_{2 delta}(v)
// ---------------------------------------------------------------------------

enum class Region { A, B, C };

inline const char* to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::C: return "C";
    }
    return "?";
}

struct QuadCover {
    std::array<Point, 4> corners;  // x, x', w, v
    std::array<Point, 4> centers;  // p, q, r, s: midpoints of [x,x'], [x',w], [w,v], [v,x]
    Point m;                       // midpoint of [q,s]
};

/// Four midpoint balls covering the geodesic quadrilateral x, x', w, v.
inline QuadCover quad_cover(const PolygonDomain& dom, Point x, Point x_prime, Point w, Point v, double delta) {
    const std::array<Point, 4> c{x, x_prime, w, v};
    const double lim = 2.0 * delta * (1.0 + kCoverEps);
    QuadCover out;
    out.corners = c;
    for (int k = 0; k < 4; ++k) {
        const GeodesicPath side = shortest_path(dom, c[k], c[(k + 1) % 4]);
        if (side.length > lim) throw Error(ErrorCode::SideTooLong, "quadrilateral side longer than 2*delta");
        out.centers[k] = point_at_fraction(side, 0.5);
    }
    // [v,x] is traversed from v, matching the other side of the chord.
    out.centers[3] = geodesic_midpoint(dom, v, x);
    out.m = geodesic_midpoint(dom, out.centers[1], out.centers[3]);
    return out;
}

/// Point on [v,u] at distance 2*delta from v.
inline Point neighborhood_x(const PolygonDomain& dom, Point u, Point v, double delta) {
    return point_along(shortest_path(dom, v, u), 2.0 * delta);
}

/// Point on [u,w] with d(u,x') = t*d(u,w), t = 1 - 2*delta/d(u,v).
inline Point neighborhood_x_prime(const PolygonDomain& dom, Point u, Point v, Point w, double delta) {
    const double t = 1.0 - 2.0 * delta / geodesic_distance(dom, u, v);
    const GeodesicPath uw = shortest_path(dom, u, w);
    return point_along(uw, std::clamp(t, 0.0, 1.0) * uw.length);
}

namespace detail {

/// Roots of d(v,.) = radius along the closed ring, found by subdividing
/// segments wherever the 1-Lipschitz bound allows a sign change.
inline std::vector<Point> ring_sphere_roots(const PolygonDomain& dom, const std::vector<Point>& ring, Point v,
                                            double radius, double resolution) {
    std::vector<Point> roots;
    auto f = [&](Point p) { return geodesic_distance(dom, v, p) - radius; };
    auto refine = [&](Point a, Point b, double fa, double fb) {
        for (int it = 0; it < 80 && dist(a, b) > kGeomEps * 1e-3; ++it) {
            const Point m = lerp(a, b, 0.5);
            const double fm = f(m);
            if ((fm > 0) == (fa > 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
                fb = fm;
            }
        }
        (void)fb;
        return lerp(a, b, 0.5);
    };
    auto scan = [&](auto&& self, Point a, Point b, double fa, double fb, int depth) -> void {
        const double len = dist(a, b);
        if (fa == 0.0) roots.push_back(a);
        if (std::abs(fa) + std::abs(fb) > len * (1.0 + 1e-12) && (fa > 0) == (fb > 0)) return;
        if (len <= resolution || depth > 40) {
            if ((fa > 0) != (fb > 0) && fb != 0.0) roots.push_back(refine(a, b, fa, fb));
            return;
        }
        const Point m = lerp(a, b, 0.5);
        const double fm = f(m);
        self(self, a, m, fa, fm, depth + 1);
        self(self, m, b, fm, fb, depth + 1);
    };
    const std::size_t k = ring.size();
    if (k < 2) return roots;
    for (std::size_t i = 0; i < k; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % k];
        scan(scan, a, b, f(a), f(b), 0);
    }
    return roots;
}

}  // namespace detail

/// Candidates for w on one side, best first (largest distance to u): x, the
/// points at arclength 2*delta along [v,z] for far points z, and crossings of
/// the side's relative hull boundary with the sphere of radius 2*delta at v.
inline std::vector<Point> select_w_candidates(const PolygonDomain& dom, std::span<const Point> side, Point u, Point v,
                                              double delta) {
    const double two = 2.0 * delta;
    std::vector<Point> cands{neighborhood_x(dom, u, v, delta)};
    for (const Point& z : side) {
        const GeodesicPath vz = shortest_path(dom, v, z);
        if (vz.length >= two) cands.push_back(point_along(vz, two));
    }
    if (!side.empty()) {
        const RelativeHull hull = relative_convex_hull(dom, side);
        for (const Point& p : detail::ring_sphere_roots(dom, hull.boundary, v, two, delta / 100.0)) {
            // Snap onto the sphere exactly along [v,p].
            const GeodesicPath vp = shortest_path(dom, v, p);
            cands.push_back(vp.length >= two ? point_along(vp, two) : p);
        }
    }
    std::vector<std::pair<double, Point>> scored;
    for (const Point& c : cands) scored.emplace_back(geodesic_distance(dom, u, c), c);
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Point> out;
    for (const auto& [score, c] : scored) {
        bool dup = false;
        for (const Point& o : out) dup = dup || dist(o, c) <= kGeomEps;
        if (!dup) out.push_back(c);
    }
    return out;
}

inline Point select_w(const PolygonDomain& dom, std::span<const Point> side, Point u, Point v, double delta) {
    return select_w_candidates(dom, side, u, v, delta).front();
}

/// Region of z: A if inside the quadrilateral x, x', w, v; else B if [u,z]
/// meets [v,w]; else C if [z,v] meets [u,w]; else A.
inline Region classify_region(const PolygonDomain& dom, Point u, Point v, Point w, Point x, Point x_prime, Point z) {
    const std::array<Point, 4> quad{x, x_prime, w, v};
    if (locate_in_ring(z, geodesic_polygon_ring(dom, quad), kGeomEps) != Location::Outside) return Region::A;
    if (paths_intersect(shortest_path(dom, u, z), shortest_path(dom, v, w))) return Region::B;
    if (paths_intersect(shortest_path(dom, z, v), shortest_path(dom, u, w))) return Region::C;
    return Region::A;
}

struct SideDecomposition {
    bool present = false;
    Point w, x, x_prime;
    std::vector<std::size_t> region_a, region_b, region_c;  // indices into the input set
    std::optional<QuadCover> quad;
    std::vector<Point> centers;
    double diam_b = 0.0, diam_c = 0.0;
    std::size_t w_attempts = 0;
};

struct NeighborhoodDecomposition {
    std::size_t u = 0, v = 0;
    double diameter = 0.0;
    bool simplex_case = false;
    std::optional<Chord> chord;
    std::array<SideDecomposition, 2> sides;  // left, right
};

struct NeighborhoodCover {
    std::vector<Point> centers;
    /// Indices of the points of B_{2 delta}(v), all covered by `centers`.
    std::vector<std::size_t> targets;
    NeighborhoodDecomposition decomposition;
};

namespace detail {

inline std::vector<Point> dedupe_snapped(const std::vector<Point>& pts) {
    std::vector<Point> out;
    std::vector<std::pair<long long, long long>> keys;
    for (const Point& p : pts) {
        const std::pair<long long, long long> key{std::llround(p.x / kGeomEps), std::llround(p.y / kGeomEps)};
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(key);
        out.push_back(p);
    }
    return out;
}

/// Drops centers, last first, whose removal keeps every point covered.
inline std::vector<Point> prune_centers(const PolygonDomain& dom, std::span<const Point> pts, std::vector<Point> centers,
                                        double delta) {
    const double r = delta * (1.0 + kCoverEps);
    std::vector<std::vector<char>> hit(centers.size(), std::vector<char>(pts.size(), 0));
    std::vector<int> count(pts.size(), 0);
    for (std::size_t c = 0; c < centers.size(); ++c)
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (geodesic_distance(dom, centers[c], pts[i]) <= r) {
                hit[c][i] = 1;
                ++count[i];
            }
    std::vector<char> keep(centers.size(), 1);
    for (std::size_t c = centers.size(); c-- > 0;) {
        bool needed = false;
        for (std::size_t i = 0; i < pts.size() && !needed; ++i) needed = hit[c][i] && count[i] == 1;
        if (needed) continue;
        keep[c] = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) count[i] -= hit[c][i];
    }
    std::vector<Point> out;
    for (std::size_t c = 0; c < centers.size(); ++c)
        if (keep[c]) out.push_back(centers[c]);
    return out;
}

inline double subset_diameter(const PolygonDomain& dom, std::span<const Point> all, const std::vector<std::size_t>& idx) {
    double d = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) d = std::max(d, geodesic_distance(dom, all[idx[a]], all[idx[b]]));
    return d;
}

/// Builds one side for a given w; returns nullopt when a runtime check fails.
inline std::optional<SideDecomposition> build_side(const PolygonDomain& dom, std::span<const Point> all,
                                                   const std::vector<std::size_t>& near, Point u, Point v, Point w,
                                                   double delta, std::string& why) {
    SideDecomposition sd;
    sd.present = true;
    sd.w = w;
    sd.x = neighborhood_x(dom, u, v, delta);
    sd.x_prime = neighborhood_x_prime(dom, u, v, w, delta);
    for (std::size_t i : near) {
        switch (classify_region(dom, u, v, w, sd.x, sd.x_prime, all[i])) {
            case Region::A: sd.region_a.push_back(i); break;
            case Region::B: sd.region_b.push_back(i); break;
            case Region::C: sd.region_c.push_back(i); break;
        }
    }
    const double lim = 2.0 * delta * (1.0 + kCoverEps);
    sd.diam_b = subset_diameter(dom, all, sd.region_b);
    sd.diam_c = subset_diameter(dom, all, sd.region_c);
    if (sd.diam_b > lim || sd.diam_c > lim) {
        why = "region diameter check failed";
        return std::nullopt;
    }
    for (const auto* region : {&sd.region_b, &sd.region_c}) {
        if (region->empty()) continue;
        std::vector<Point> sub;
        for (std::size_t i : *region) sub.push_back(all[i]);
        const Cover c = cover_simplex(dom, sub, delta);
        sd.centers.insert(sd.centers.end(), c.centers.begin(), c.centers.end());
    }
    if (!sd.region_a.empty()) {
        try {
            sd.quad = quad_cover(dom, sd.x, sd.x_prime, w, v, delta);
        } catch (const Error& e) {
            why = e.what();
            return std::nullopt;
        }
        sd.centers.insert(sd.centers.end(), sd.quad->centers.begin(), sd.quad->centers.end());
    }
    // Every point of this side must be covered by this side's balls.
    std::vector<Point> side_pts;
    for (std::size_t i : near) side_pts.push_back(all[i]);
    const Cover check{delta, sd.centers, {}};
    if (!verify_cover(dom, side_pts, check).ok) {
        why = "side cover does not cover all points";
        return std::nullopt;
    }
    return sd;
}

}  // namespace detail

/// At most 19 delta-balls covering S within 2*delta of v, for a diametral pair (u, v) of S.
inline NeighborhoodCover cover_neighborhood(const PolygonDomain& dom, std::span<const Point> pts, std::size_t v_idx,
                                            std::size_t u_idx, double delta) {
    if (pts.empty()) throw Error(ErrorCode::EmptySet, "cover_neighborhood of an empty set");
    if (v_idx >= pts.size() || u_idx >= pts.size()) throw Error(ErrorCode::OutOfRange, "pair index out of range");
    NeighborhoodCover out;
    auto& dec = out.decomposition;
    dec.u = u_idx;
    dec.v = v_idx;
    const Point u = pts[u_idx], v = pts[v_idx];
    dec.diameter = geodesic_distance(dom, u, v);
    const double two = 2.0 * delta;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (geodesic_distance(dom, v, pts[i]) <= two) out.targets.push_back(i);

    std::vector<Point> target_pts;
    for (std::size_t i : out.targets) target_pts.push_back(pts[i]);
    // The neighborhood itself may already be a delta-simplex.
    if (pts.size() == 1 || dec.diameter <= two || geodesic_diameter(dom, target_pts) <= two) {
        dec.simplex_case = true;
        out.centers = cover_simplex(dom, target_pts, delta).centers;
        return out;
    }

    dec.chord = chord_extension(dom, shortest_path(dom, u, v));
    std::array<std::vector<std::size_t>, 2> side_all, side_near;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Side s = side_of(*dec.chord, pts[i]);
        const bool near = geodesic_distance(dom, v, pts[i]) <= two;
        for (int k = 0; k < 2; ++k) {
            if (s == Side::On || (k == 0 ? s == Side::Left : s == Side::Right)) {
                side_all[k].push_back(i);
                if (near) side_near[k].push_back(i);
            }
        }
    }

    std::vector<Point> centers;
    for (int k = 0; k < 2; ++k) {
        if (side_near[k].empty()) continue;
        std::vector<Point> side_pts;
        for (std::size_t i : side_all[k]) side_pts.push_back(pts[i]);
        const auto cands = select_w_candidates(dom, side_pts, u, v, delta);
        std::string why;
        std::optional<SideDecomposition> sd;
        std::size_t attempts = 0;
        for (const Point& w : cands) {
            ++attempts;
            sd = detail::build_side(dom, pts, side_near[k], u, v, w, delta, why);
            if (sd) break;
        }
        if (!sd) throw Error(ErrorCode::CoverageFailure, "neighborhood side could not be covered: " + why);
        sd->w_attempts = attempts;
        centers.insert(centers.end(), sd->centers.begin(), sd->centers.end());
        dec.sides[k] = std::move(*sd);
    }
    out.centers = detail::prune_centers(dom, target_pts, detail::dedupe_snapped(centers), delta);
    return out;
}

// ---------------------------------------------------------------------------
// Primal-dual driver
// ---------------------------------------------------------------------------

struct IterationTrace {
    std::size_t v = 0, u = 0;
    std::size_t remaining = 0;  // |S_i| before the step
    std::size_t targets = 0;    // |S_i within 2*delta of v|
    std::size_t balls = 0;
    std::size_t removed = 0;
    bool simplex_case = false;
    std::array<std::array<std::size_t, 3>, 2> regions{};  // per side: |A|, |B|, |C|
};

struct PackCoverResult {
    Cover cover;
    Packing packing;
    std::vector<IterationTrace> trace;
};

/// Greedy primal-dual cover and packing with |cover| <= 19 |packing|.
inline PackCoverResult pack_and_cover(const PolygonDomain& dom, std::span<const Point> pts, double delta) {
    if (pts.empty()) throw Error(ErrorCode::EmptySet, "pack_and_cover of an empty set");
    if (!(delta > 0) || !std::isfinite(delta)) throw Error(ErrorCode::InvalidInput, "delta must be positive");
    for (const Point& p : pts)
        if (!is_finite(p) || !dom.locate(p)) throw Error(ErrorCode::PointOutsidePolygon, "point lies outside the polygon");

    PackCoverResult res;
    res.cover.radius = delta;
    res.packing.radius = delta;
    const double r = delta * (1.0 + kCoverEps);
    std::vector<std::size_t> alive(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) alive[i] = i;

    while (!alive.empty()) {
        std::vector<Point> cur;
        for (std::size_t i : alive) cur.push_back(pts[i]);
        const DiametralPair dp = diametral_pair(dom, cur);
        const NeighborhoodCover nc = cover_neighborhood(dom, cur, dp.v, dp.u, delta);

        IterationTrace tr;
        tr.v = alive[dp.v];
        tr.u = alive[dp.u];
        tr.remaining = alive.size();
        tr.targets = nc.targets.size();
        tr.balls = nc.centers.size();
        tr.simplex_case = nc.decomposition.simplex_case;
        for (int k = 0; k < 2; ++k) {
            const auto& sd = nc.decomposition.sides[k];
            tr.regions[k] = {sd.region_a.size(), sd.region_b.size(), sd.region_c.size()};
        }

        res.packing.indices.push_back(alive[dp.v]);
        res.packing.points.push_back(pts[alive[dp.v]]);
        res.cover.centers.insert(res.cover.centers.end(), nc.centers.begin(), nc.centers.end());

        std::vector<char> gone(cur.size(), 0);
        for (std::size_t i : nc.targets) gone[i] = 1;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (gone[i]) continue;
            for (const Point& c : nc.centers)
                if (geodesic_distance(dom, cur[i], c) <= r) {
                    gone[i] = 1;
                    break;
                }
        }
        if (!gone[dp.v]) throw Error(ErrorCode::CoverageFailure, "no progress: v was not covered");
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (!gone[i]) next.push_back(alive[i]);
        tr.removed = alive.size() - next.size();
        res.trace.push_back(tr);
        alive = std::move(next);
    }
    res.cover.assignment = detail::assign_nearest(dom, pts, res.cover.centers);
    return res;
}

}  // namespace geopack

#endif  // GEOPACK_COVER_CORE_HPP
