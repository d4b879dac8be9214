#include <gtest/gtest.h>

#include "geopack/chord.hpp"
#include "support/fixtures.hpp"

using namespace geopack;
using namespace geopack::testing;

TEST(ChordExtension, SquareHorizontalSegment) {
    const PolygonDomain dom = square_domain();
    const Chord chord = chord_extension(dom, shortest_path(dom, {3, 5}, {7, 5}));
    const auto& w = chord.polyline.waypoints;
    EXPECT_NEAR(w.front().x, 0.0, 1e-12);
    EXPECT_NEAR(w.front().y, 5.0, 1e-12);
    EXPECT_NEAR(w.back().x, 10.0, 1e-12);
    EXPECT_NEAR(w.back().y, 5.0, 1e-12);
    EXPECT_NEAR(chord.polyline.length, 10.0, 1e-12);
    EXPECT_NEAR(chord.inner_begin, 3.0, 1e-12);
    EXPECT_NEAR(chord.inner_end, 7.0, 1e-12);
}

TEST(SideOf, SquareSides) {
    const PolygonDomain dom = square_domain();
    const Chord chord = chord_extension(dom, shortest_path(dom, {3, 5}, {7, 5}));
    // Travelling +x, the left face is above.
    EXPECT_EQ(side_of(chord, {5, 8}), Side::Left);
    EXPECT_EQ(side_of(chord, {5, 2}), Side::Right);
    EXPECT_EQ(side_of(chord, {5, 5}), Side::On);
    EXPECT_EQ(side_of(chord, {0, 5}), Side::On);
    EXPECT_EQ(side_of(chord, {0, 10}), Side::Left);
    EXPECT_EQ(side_of(chord, {10, 0}), Side::Right);
}

TEST(SideOf, ReversedChordSwapsSides) {
    const PolygonDomain dom = square_domain();
    const Chord fwd = chord_extension(dom, shortest_path(dom, {3, 5}, {7, 5}));
    const Chord rev = chord_extension(dom, shortest_path(dom, {7, 5}, {3, 5}));
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const Point p = random_interior_point(rng, dom);
        const Side a = side_of(fwd, p), b = side_of(rev, p);
        if (a == Side::On) {
            EXPECT_EQ(b, Side::On);
        } else {
            EXPECT_NE(a, b);
            EXPECT_NE(b, Side::On);
        }
    }
}

TEST(ChordExtension, BentGeodesicInLHexagon) {
    const PolygonDomain dom = l_hexagon();
    const GeodesicPath path = shortest_path(dom, {3.5, 0.5}, {0.5, 3.5});
    const Chord chord = chord_extension(dom, path);
    const auto& w = chord.polyline.waypoints;
    // Straight continuations of both legs hit the outer walls.
    EXPECT_NEAR(w.front().x, 4.0, 1e-12);
    EXPECT_NEAR(w.front().y, 0.0, 1e-12);
    EXPECT_NEAR(w.back().x, 0.0, 1e-12);
    EXPECT_NEAR(w.back().y, 4.0, 1e-12);
    EXPECT_EQ(side_of(chord, {0.5, 0.5}), Side::Left);
    EXPECT_EQ(side_of(chord, {3.5, 1.5}), Side::Right);
    EXPECT_EQ(side_of(chord, {2, 2}), Side::On);
}

TEST(ChordExtension, EndingAtReflexVertexStops) {
    const PolygonDomain dom = l_hexagon();
    // Continuing (1,1)->(2,2) would leave the polygon immediately.
    const Chord chord = chord_extension(dom, shortest_path(dom, {1, 1}, {2, 2}));
    EXPECT_EQ(chord.polyline.waypoints.back(), (Point{2, 2}));
    EXPECT_NEAR(chord.polyline.waypoints.front().x, 0.0, 1e-12);
    EXPECT_NEAR(chord.polyline.waypoints.front().y, 0.0, 1e-12);
    EXPECT_EQ(side_of(chord, {3, 1}), Side::Right);
    EXPECT_EQ(side_of(chord, {1, 3}), Side::Left);
}

TEST(ChordExtension, RandomChordsPartitionSamples) {
    Rng rng(11);
    for (int inst = 0; inst < 30; ++inst) {
        const PolygonDomain dom = random_domain(rng, 6 + rng.index(20));
        const Point u = random_interior_point(rng, dom), v = random_interior_point(rng, dom);
        const Chord chord = chord_extension(dom, shortest_path(dom, u, v));
        EXPECT_EQ(side_of(chord, u), Side::On);
        EXPECT_EQ(side_of(chord, v), Side::On);
        // A shortest path between points on opposite sides must cross the chord.
        for (int k = 0; k < 20; ++k) {
            const Point p = random_interior_point(rng, dom), q = random_interior_point(rng, dom);
            const Side sp = side_of(chord, p), sq = side_of(chord, q);
            if (sp == Side::On || sq == Side::On || sp == sq) continue;
            EXPECT_TRUE(paths_intersect(shortest_path(dom, p, q), chord.polyline, 1e-9)) << "instance " << inst;
        }
    }
}

TEST(ChordExtension, ZeroLengthThrows) {
    const PolygonDomain dom = square_domain();
    EXPECT_THROW((void)chord_extension(dom, shortest_path(dom, {1, 1}, {1, 1})), Error);
}
