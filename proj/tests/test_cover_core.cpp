#include <gtest/gtest.h>

#include <cmath>

#include "geopack/cover_core.hpp"
#include "support/fixtures.hpp"

using namespace geopack;
using namespace geopack::testing;

namespace {

std::vector<Point> equilateral(Point base, double side) {
    return {base, base + Point{side, 0}, base + Point{side / 2, side * std::sqrt(3.0) / 2}};
}

/// Random point set of geodesic diameter <= 2*delta: points near a random center.
std::vector<Point> random_simplex(Rng& rng, const PolygonDomain& dom, std::size_t n, double delta) {
    const Point c = random_interior_point(rng, dom);
    std::vector<Point> out;
    for (int guard = 0; out.size() < n && guard < 100000; ++guard) {
        const Point p = random_interior_point(rng, dom);
        if (geodesic_distance(dom, c, p) > 1.3 * delta) continue;
        bool ok = true;
        for (const Point& q : out) ok = ok && geodesic_distance(dom, p, q) <= 2 * delta;
        if (ok) out.push_back(p);
    }
    return out;
}

/// Near-equilateral triple with circumradius about 1.1*delta, so usually critical.
std::vector<Point> random_wide_triple(Rng& rng, const PolygonDomain& dom, double delta) {
    for (int guard = 0; guard < 10000; ++guard) {
        const Point c = random_interior_point(rng, dom);
        const double rot = 2 * M_PI * rng.uniform();
        std::vector<Point> out;
        for (int k = 0; k < 3; ++k) {
            const double th = rot + 2 * M_PI * k / 3 + 0.15 * (rng.uniform() - 0.5);
            const Point p = c + 1.1 * delta * Point{std::cos(th), std::sin(th)};
            if (!dom.contains(p)) break;
            out.push_back(p);
        }
        if (out.size() < 3) continue;
        bool ok = true;
        for (int a = 0; a < 3; ++a) ok = ok && geodesic_distance(dom, out[a], out[(a + 1) % 3]) <= 2 * delta;
        if (ok) return out;
    }
    return {};
}

}  // namespace

TEST(CriticalTriangle, SmallCircumradiusIsNotCritical) {
    const PolygonDomain dom = square_domain(100);
    const auto tri = equilateral({40, 40}, 10.0);
    const CriticalTriangle ct = critical_triangle(dom, 6.0, tri[0], tri[1], tri[2]);
    EXPECT_FALSE(ct.critical);
    EXPECT_EQ(ct.apexes[0], ct.apexes[1]);
    EXPECT_EQ(ct.apexes[1], ct.apexes[2]);
}

TEST(CriticalTriangle, CollinearTripleIsNotCritical) {
    const PolygonDomain dom = square_domain(100);
    const CriticalTriangle ct = critical_triangle(dom, 5.0, {10, 10}, {15, 10}, {20, 10});
    EXPECT_FALSE(ct.critical);
    EXPECT_NEAR(ct.apexes[0].x, 15.0, 1e-6);
}

TEST(CriticalTriangle, SideTwoDeltaGivesMedialTriangle) {
    const PolygonDomain dom = square_domain(100);
    const double delta = 5.0;
    const auto tri = equilateral({30, 30}, 2 * delta);
    const CriticalTriangle ct = critical_triangle(dom, delta, tri[0], tri[1], tri[2]);
    ASSERT_TRUE(ct.critical);
    EXPECT_NEAR(ct.perimeter, 3 * delta, 1e-9);
    const Point mid12 = lerp(tri[1], tri[2], 0.5);
    EXPECT_NEAR(dist(ct.apexes[0], mid12), 0.0, 1e-9);
}

TEST(CriticalTriangle, ApexesOnBothSpheres) {
    const PolygonDomain dom = square_domain(100);
    const double delta = 5.0, s = 9.0;  // circumradius s/sqrt(3) > delta
    const auto tri = equilateral({30, 30}, s);
    const CriticalTriangle ct = critical_triangle(dom, delta, tri[0], tri[1], tri[2]);
    ASSERT_TRUE(ct.critical);
    // Apex opposite tri[0] sits on the bisector of [tri1, tri2], sqrt(delta^2 - (s/2)^2) from its midpoint.
    const Point mid = lerp(tri[1], tri[2], 0.5);
    const double h = std::sqrt(delta * delta - s * s / 4);
    EXPECT_NEAR(dist(ct.apexes[0], mid), h, 1e-9);
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(dist(ct.apexes[k], tri[(k + 1) % 3]), delta, 1e-9);
        EXPECT_NEAR(dist(ct.apexes[k], tri[(k + 2) % 3]), delta, 1e-9);
        EXPECT_LE(dist(ct.apexes[k], ct.apexes[(k + 1) % 3]), delta * (1 + kCoverEps));
    }
}

TEST(CriticalTriangle, NotASimplexThrows) {
    const PolygonDomain dom = square_domain(100);
    try {
        (void)critical_triangle(dom, 1.0, {10, 10}, {20, 10}, {15, 12});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotASimplex);
    }
}

TEST(CriticalTriangle, RandomInvariants) {
    Rng rng(31);
    int critical = 0;
    for (int inst = 0; inst < 60; ++inst) {
        const PolygonDomain dom = random_domain(rng, 5 + rng.index(20));
        const double delta = 8.0 + 10.0 * rng.uniform();
        const auto s = random_wide_triple(rng, dom, delta);
        if (s.size() < 3) continue;
        const CriticalTriangle ct = critical_triangle(dom, delta, s[0], s[1], s[2]);
        if (!ct.critical) continue;
        ++critical;
        const double lim = delta * (1 + kCoverEps);
        const double medial = geodesic_distance(dom, geodesic_midpoint(dom, s[0], s[1]), geodesic_midpoint(dom, s[1], s[2])) +
                              geodesic_distance(dom, geodesic_midpoint(dom, s[1], s[2]), geodesic_midpoint(dom, s[2], s[0])) +
                              geodesic_distance(dom, geodesic_midpoint(dom, s[2], s[0]), geodesic_midpoint(dom, s[0], s[1]));
        EXPECT_LE(ct.perimeter, medial + 1e-9);
        for (int k = 0; k < 3; ++k) {
            EXPECT_LE(geodesic_distance(dom, ct.apexes[k], s[(k + 1) % 3]), lim);
            EXPECT_LE(geodesic_distance(dom, ct.apexes[k], s[(k + 2) % 3]), lim);
            EXPECT_GE(geodesic_distance(dom, ct.apexes[k], s[(k + 1) % 3]), delta * (1 - kCoverEps));
            EXPECT_LE(geodesic_distance(dom, ct.apexes[k], ct.apexes[(k + 1) % 3]), lim);
            EXPECT_TRUE(in_geodesic_triangle(dom, s[0], s[1], s[2], ct.apexes[k], 1e-7));
        }
    }
    EXPECT_GT(critical, 20);
}

TEST(CoverSimplex, Examples) {
    const PolygonDomain dom = square_domain(100);
    const std::vector<Point> one{{7, 7}};
    const Cover c1 = cover_simplex(dom, one, 1.0);
    ASSERT_EQ(c1.centers.size(), 1u);
    EXPECT_EQ(c1.centers[0], (Point{7, 7}));

    const std::vector<Point> two{{10, 10}, {20, 10}};
    const Cover c2 = cover_simplex(dom, two, 5.0);
    ASSERT_EQ(c2.centers.size(), 1u);
    EXPECT_NEAR(c2.centers[0].x, 15.0, 1e-6);
    EXPECT_NEAR(c2.centers[0].y, 10.0, 1e-6);

    const auto tri = equilateral({30, 30}, 10.0);
    const Cover c3 = cover_simplex(dom, tri, 5.0);
    EXPECT_LE(c3.centers.size(), 3u);
    EXPECT_TRUE(verify_cover(dom, tri, c3).ok);
    std::vector<Point> cands(tri);
    for (int i = 0; i < 3; ++i) cands.push_back(lerp(tri[i], tri[(i + 1) % 3], 0.5));
    EXPECT_EQ(min_cover_exact(dom, tri, 5.0, cands).centers.size(), 2u);
}

TEST(CoverSimplex, DiameterTooLarge) {
    const PolygonDomain dom = square_domain(100);
    const std::vector<Point> far{{10, 10}, {30, 10}};
    try {
        (void)cover_simplex(dom, far, 5.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DiameterTooLarge);
    }
}

TEST(CoverSimplex, RandomSimplicesUseAtMostThreeBalls) {
    Rng rng(12);
    for (int inst = 0; inst < 30; ++inst) {
        const PolygonDomain dom = random_domain(rng, 5 + rng.index(20));
        const double delta = 8.0 + 12.0 * rng.uniform();
        const auto s = random_simplex(rng, dom, 3 + rng.index(15), delta);
        const SimplexCover sc = cover_simplex_detailed(dom, s, delta);
        EXPECT_LE(sc.cover.centers.size(), 3u);
        EXPECT_TRUE(verify_cover(dom, s, sc.cover).ok) << "instance " << inst;
    }
}

TEST(QuadCover, SquareOfSideTwoDeltaIsCovered) {
    const PolygonDomain dom = square_domain(100);
    const double delta = 5.0;
    const Point x{20, 20}, xp{20, 30}, w{30, 30}, v{30, 20};
    const QuadCover q = quad_cover(dom, x, xp, w, v, delta);
    EXPECT_NEAR(dist(q.centers[0], {20, 25}), 0.0, 1e-12);
    EXPECT_NEAR(dist(q.centers[3], {25, 20}), 0.0, 1e-12);
    EXPECT_LE(dist(q.centers[0], q.m), delta + 1e-9);
    EXPECT_LE(dist(q.m, q.centers[2]), delta + 1e-9);
    const int steps = 50;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            const Point p{20 + 10.0 * i / steps, 20 + 10.0 * j / steps};
            double best = 1e300;
            for (const Point& c : q.centers) best = std::min(best, dist(p, c));
            EXPECT_LE(best, delta * (1 + kCoverEps));
        }
}

TEST(QuadCover, DegenerateAndTooLong) {
    const PolygonDomain dom = square_domain(100);
    const QuadCover q = quad_cover(dom, {20, 20}, {20, 20}, {25, 28}, {30, 20}, 5.0);
    EXPECT_EQ(q.centers[0], (Point{20, 20}));
    try {
        (void)quad_cover(dom, {20, 20}, {20, 40}, {30, 40}, {30, 20}, 5.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SideTooLong);
    }
}

TEST(SelectW, OnlyEndpointsGiveX) {
    const PolygonDomain dom = square_domain(100);
    const Point u{10, 50}, v{60, 50};
    const std::vector<Point> side{u, v};
    const Point w = select_w(dom, side, u, v, 5.0);
    EXPECT_NEAR(w.x, 50.0, 1e-9);
    EXPECT_NEAR(w.y, 50.0, 1e-9);
}

TEST(SelectW, FarPointGivesLargerDistance) {
    const PolygonDomain dom = square_domain(100);
    const Point u{10, 50}, v{60, 50}, z{45, 60};
    const std::vector<Point> side{u, v, z};
    const double delta = 5.0;
    const Point w = select_w(dom, side, u, v, delta);
    EXPECT_NEAR(dist(v, w), 2 * delta, 1e-9);
    EXPECT_GE(dist(u, w), dist(u, Point{50, 50}) - 1e-12);
}

TEST(ClassifyRegion, CornersAndB) {
    const PolygonDomain dom = square_domain(100);
    const Point u{10, 50}, v{60, 50};
    const double delta = 5.0;
    const Point w{60 - 6, 50 + 8};  // |v-w| = 10
    const Point x = neighborhood_x(dom, u, v, delta);
    const Point xp = neighborhood_x_prime(dom, u, v, w, delta);
    EXPECT_EQ(classify_region(dom, u, v, w, x, xp, v), Region::A);
    EXPECT_EQ(classify_region(dom, u, v, w, x, xp, x), Region::A);
    // Beyond [v,w] as seen from u.
    const Point zb{60, 57};
    EXPECT_TRUE(paths_intersect(shortest_path(dom, u, zb), shortest_path(dom, v, w)));
    EXPECT_EQ(classify_region(dom, u, v, w, x, xp, zb), Region::B);
    // Beyond [u,w] as seen from v.
    const Point zc{45, 58};
    EXPECT_EQ(classify_region(dom, u, v, w, x, xp, zc), Region::C);
}

TEST(CoverNeighborhood, SingletonAndSimplex) {
    const PolygonDomain dom = square_domain(100);
    const std::vector<Point> one{{5, 5}};
    EXPECT_EQ(cover_neighborhood(dom, one, 0, 0, 1.0).centers.size(), 1u);
    const auto tri = equilateral({30, 30}, 9.0);
    const NeighborhoodCover nc = cover_neighborhood(dom, tri, 1, 0, 5.0);
    EXPECT_LE(nc.centers.size(), 3u);
    EXPECT_TRUE(nc.decomposition.simplex_case);
}

TEST(CoverNeighborhood, RandomLPolygonInstances) {
    Rng rng(21);
    const std::vector<Point> l{{0, 0}, {100, 0}, {100, 40}, {40, 40}, {40, 100}, {0, 100}};
    const PolygonDomain dom{validate_polygon(l)};
    for (int inst = 0; inst < 8; ++inst) {
        const auto pts = random_points(rng, dom, 30);
        const double delta = 6.0 + 10.0 * rng.uniform();
        const DiametralPair dp = diametral_pair(dom, pts);
        const NeighborhoodCover nc = cover_neighborhood(dom, pts, dp.v, dp.u, delta);
        EXPECT_LE(nc.centers.size(), 19u);
        for (const auto& sd : nc.decomposition.sides) {
            EXPECT_LE(sd.centers.size(), 10u);
            EXPECT_LE(sd.diam_b, 2 * delta * (1 + 1e-6));
            EXPECT_LE(sd.diam_c, 2 * delta * (1 + 1e-6));
        }
        std::vector<Point> targets;
        for (std::size_t i : nc.targets) targets.push_back(pts[i]);
        EXPECT_TRUE(verify_cover(dom, targets, Cover{delta, nc.centers, {}}).ok);
    }
}

TEST(PackAndCover, Singleton) {
    const std::vector<Point> one{{5, 5}};
    const auto res = pack_and_cover(square_domain(), one, 1.0);
    EXPECT_EQ(res.cover.centers.size(), 1u);
    EXPECT_EQ(res.packing.points.size(), 1u);
}

TEST(PackAndCover, FarApartPoints) {
    const std::vector<Point> pts{{10, 10}, {90, 10}, {50, 90}};
    const auto res = pack_and_cover(square_domain(100), pts, 5.0);
    EXPECT_EQ(res.trace.size(), 3u);
    EXPECT_EQ(res.packing.points.size(), 3u);
    EXPECT_EQ(res.cover.centers.size(), 3u);
}

TEST(PackAndCover, RandomInstancesCertify) {
    Rng rng(99);
    for (int inst = 0; inst < 10; ++inst) {
        const PolygonDomain dom = random_domain(rng, 6 + rng.index(20));
        const auto pts = random_points(rng, dom, 10 + rng.index(25));
        const double delta = 4.0 + 12.0 * rng.uniform();
        const auto res = pack_and_cover(dom, pts, delta);
        EXPECT_TRUE(verify_cover(dom, pts, res.cover).ok) << "instance " << inst;
        EXPECT_TRUE(verify_packing(dom, res.packing).ok) << "instance " << inst;
        EXPECT_LE(res.cover.centers.size(), 19 * res.packing.points.size());
        const auto nu = max_packing_exact(DistanceMatrix::geodesic(dom, pts), delta).nu;
        EXPECT_LE(res.packing.points.size(), nu);
    }
}
