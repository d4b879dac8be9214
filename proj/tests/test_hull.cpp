#include <gtest/gtest.h>

#include "geopack/hull.hpp"
#include "support/fixtures.hpp"

using namespace geopack;
using namespace geopack::testing;

TEST(RelativeHull, ConvexPolygonGivesEuclideanHull) {
    const PolygonDomain dom = square_domain();
    const std::vector<Point> pts{{1, 1}, {9, 1}, {5, 5}, {9, 9}, {1, 9}, {4, 6}};
    const RelativeHull hull = relative_convex_hull(dom, pts);
    ASSERT_EQ(hull.corners.size(), 4u);
    EXPECT_NEAR(signed_area(hull.boundary), 64.0, 1e-12);
    for (const Point& p : pts) EXPECT_TRUE(hull.contains(p));
}

TEST(RelativeHull, SinglePoint) {
    const std::vector<Point> one{{2, 3}};
    const RelativeHull hull = relative_convex_hull(square_domain(), one);
    ASSERT_EQ(hull.boundary.size(), 1u);
    EXPECT_EQ(hull.boundary[0], (Point{2, 3}));
}

TEST(RelativeHull, TwoPointsInLHexagonFollowBentGeodesic) {
    const std::vector<Point> two{{3.5, 0.5}, {0.5, 3.5}};
    const RelativeHull hull = relative_convex_hull(l_hexagon(), two);
    EXPECT_EQ(hull.corners.size(), 2u);
    EXPECT_NEAR(polyline_length(hull.boundary) + dist(hull.boundary.back(), hull.boundary.front()),
                2 * 3 * std::sqrt(2.0), 1e-12);
    EXPECT_TRUE(hull.contains({2, 2}));
    EXPECT_FALSE(hull.contains({1, 1}));
}

TEST(RelativeHull, ReflexCornerWrapsAround) {
    const PolygonDomain dom = l_hexagon();
    const std::vector<Point> pts{{3.5, 0.5}, {0.5, 3.5}, {0.5, 0.5}, {3.5, 1.5}, {1.5, 3.5}};
    const RelativeHull hull = relative_convex_hull(dom, pts);
    EXPECT_EQ(hull.corners.size(), 5u);
    EXPECT_TRUE(hull.contains({2, 2}));
    EXPECT_TRUE(hull.contains({1, 1}));
    EXPECT_FALSE(hull.contains({3.9, 1.9}));
    // Ring (0.5,0.5),(3.5,0.5),(3.5,1.5),(2,2),(1.5,3.5),(0.5,3.5) by shoelace.
    EXPECT_NEAR(signed_area(hull.boundary), 6.0, 1e-12);
}

TEST(RelativeHull, ContainsInputAndIsGeodesicallyConvex) {
    Rng rng(8);
    for (int inst = 0; inst < 30; ++inst) {
        const PolygonDomain dom = random_domain(rng, 6 + rng.index(20));
        const auto pts = random_points(rng, dom, 2 + rng.index(15));
        const RelativeHull hull = relative_convex_hull(dom, pts);
        for (const Point& p : pts) EXPECT_TRUE(hull.contains(p, 1e-7)) << "instance " << inst;
        if (hull.corners.size() < 3) continue;
        // Midpoints of pairs of input points stay in the hull.
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            EXPECT_TRUE(hull.contains(geodesic_midpoint(dom, pts[i], pts[i + 1]), 1e-7)) << "instance " << inst;
        }
    }
}
