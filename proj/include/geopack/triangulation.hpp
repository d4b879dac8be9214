#pragma once
#ifndef GEOPACK_TRIANGULATION_HPP
#define GEOPACK_TRIANGULATION_HPP

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "geopack/polygon.hpp"

namespace geopack {

/// Triangles are CCW vertex-index triples into the polygon. neighbor[t][k]
/// is the triangle across the edge (tri[k], tri[(k+1)%3]), or -1 on the boundary.
struct Triangulation {
    std::vector<std::array<std::size_t, 3>> triangles;
    std::vector<std::array<int, 3>> neighbor;

    std::size_t size() const { return triangles.size(); }
};

namespace detail {

inline bool in_closed_triangle(Point p, Point a, Point b, Point c) {
    return orient(a, b, p) >= 0.0 && orient(b, c, p) >= 0.0 && orient(c, a, p) >= 0.0;
}

inline void link_dual(Triangulation& tri) {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>> edge_owner;
    tri.neighbor.assign(tri.triangles.size(), {-1, -1, -1});
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            std::size_t a = tri.triangles[t][k];
            std::size_t b = tri.triangles[t][(k + 1) % 3];
            auto key = std::minmax(a, b);
            auto it = edge_owner.find(key);
            if (it == edge_owner.end()) {
                edge_owner.emplace(key, std::make_pair(t, k));
            } else {
                tri.neighbor[t][k] = static_cast<int>(it->second.first);
                tri.neighbor[it->second.first][it->second.second] = static_cast<int>(t);
            }
        }
    }
}

}  // namespace detail

/// Ear-clipping triangulation; yields n-2 CCW triangles whose dual graph is a tree.
inline Triangulation triangulate(const SimplePolygon& poly) {
    const std::size_t n = poly.size();
    std::vector<std::size_t> ring(n);
    for (std::size_t i = 0; i < n; ++i) ring[i] = i;

    Triangulation tri;
    tri.triangles.reserve(n - 2);
    while (ring.size() > 3) {
        const std::size_t m = ring.size();
        std::size_t best = m;
        double best_quality = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t ia = ring[(i + m - 1) % m];
            const std::size_t ib = ring[i];
            const std::size_t ic = ring[(i + 1) % m];
            const Point a = poly[ia], b = poly[ib], c = poly[ic];
            const double area2 = orient(a, b, c);
            if (area2 <= 0.0) continue;
            bool empty = true;
            for (std::size_t j = 0; j < m && empty; ++j) {
                const std::size_t iv = ring[j];
                if (iv == ia || iv == ib || iv == ic) continue;
                const Point v = poly[iv];
                if (v == a || v == b || v == c) continue;
                if (detail::in_closed_triangle(v, a, b, c)) empty = false;
            }
            if (!empty) continue;
            // Prefer well-shaped ears: normalized area over squared longest side.
            const double longest = std::max({dist(a, b), dist(b, c), dist(c, a)});
            const double quality = area2 / (longest * longest);
            if (quality > best_quality) {
                best_quality = quality;
                best = i;
            }
        }
        if (best == m) throw Error(ErrorCode::DegenerateArea, "ear clipping found no ear");
        tri.triangles.push_back({ring[(best + m - 1) % m], ring[best], ring[(best + 1) % m]});
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(best));
    }
    tri.triangles.push_back({ring[0], ring[1], ring[2]});
    detail::link_dual(tri);
    return tri;
}

}  // namespace geopack

#endif  // GEOPACK_TRIANGULATION_HPP
