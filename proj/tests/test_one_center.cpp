#include <gtest/gtest.h>

#include <cmath>

#include "geopack/one_center.hpp"
#include "support/fixtures.hpp"

using namespace geopack;
using namespace geopack::testing;

namespace {

/// Grid search followed by local grid refinement; slow but independent.
double grid_one_center_radius(const PolygonDomain& dom, const std::vector<Point>& pts) {
    const auto v = dom.polygon().vertices();
    double lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
    for (const Point& p : v) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    auto ecc = [&](Point c) {
        double r = 0.0;
        for (const Point& s : pts) r = std::max(r, geodesic_distance(dom, c, s));
        return r;
    };
    Point best = pts[0];
    double best_r = ecc(best);
    constexpr int kGrid = 60;
    for (int i = 0; i <= kGrid; ++i)
        for (int j = 0; j <= kGrid; ++j) {
            const Point c{lo_x + (hi_x - lo_x) * i / kGrid, lo_y + (hi_y - lo_y) * j / kGrid};
            if (!dom.contains(c)) continue;
            const double r = ecc(c);
            if (r < best_r) {
                best_r = r;
                best = c;
            }
        }
    double h = std::max(hi_x - lo_x, hi_y - lo_y) / kGrid;
    while (h > 1e-10) {
        Point next = best;
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                const Point c{best.x + h * i / 2.0, best.y + h * j / 2.0};
                if (!dom.contains(c)) continue;
                const double r = ecc(c);
                if (r < best_r) {
                    best_r = r;
                    next = c;
                }
            }
        if (next == best) h *= 0.5;
        best = next;
    }
    return best_r;
}

}  // namespace

TEST(OneCenter, SinglePoint) {
    const PolygonDomain dom = square_domain();
    const std::vector<Point> one{{2, 3}};
    const auto c = geodesic_one_center(dom, one);
    EXPECT_EQ(c.center, (Point{2, 3}));
    EXPECT_EQ(c.radius, 0.0);
}

TEST(OneCenter, TwoPointsGiveMidpoint) {
    const PolygonDomain dom = l_hexagon();
    const std::vector<Point> two{{3.5, 0.5}, {0.5, 3.5}};
    const auto c = geodesic_one_center(dom, two);
    EXPECT_NEAR(c.center.x, 2.0, 1e-9);
    EXPECT_NEAR(c.center.y, 2.0, 1e-9);
    EXPECT_NEAR(c.radius, 1.5 * std::sqrt(2.0), 1e-9);
}

TEST(OneCenter, EquilateralTriangle) {
    const PolygonDomain dom = square_domain();
    const double s = 6.0;
    const std::vector<Point> tri{{2, 2}, {2 + s, 2}, {2 + s / 2, 2 + s * std::sqrt(3.0) / 2}};
    const auto c = geodesic_one_center(dom, tri);
    EXPECT_NEAR(c.radius, s / std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(c.center.x, 5.0, 1e-9);
}

TEST(OneCenter, EmptyThrows) {
    const std::vector<Point> none;
    EXPECT_THROW((void)geodesic_one_center(square_domain(), none), Error);
}

TEST(OneCenter, MatchesGridSearchOnRandomInstances) {
    Rng rng(42);
    for (int inst = 0; inst < 12; ++inst) {
        const PolygonDomain dom = random_domain(rng, 5 + rng.index(15));
        const auto pts = random_points(rng, dom, 2 + rng.index(7));
        const auto c = geodesic_one_center(dom, pts);
        double ecc = 0.0;
        for (const Point& s : pts) ecc = std::max(ecc, geodesic_distance(dom, c.center, s));
        EXPECT_NEAR(ecc, c.radius, 1e-9 * std::max(1.0, ecc));
        const double ref = grid_one_center_radius(dom, pts);
        const double diam = geodesic_diameter(dom, pts);
        EXPECT_LE(c.radius, ref + 1e-7 * diam) << "instance " << inst;
        EXPECT_GE(c.radius, 0.5 * diam - 1e-9);
    }
}
