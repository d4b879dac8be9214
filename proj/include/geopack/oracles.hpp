#pragma once
#ifndef GEOPACK_ORACLES_HPP
#define GEOPACK_ORACLES_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geopack/one_center.hpp"

namespace geopack {

/// Symmetric matrix of pairwise distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    /// Abstract input; rejects non-square, asymmetric, negative or non-zero diagonal data.
    explicit DistanceMatrix(std::vector<std::vector<double>> rows) : n_(rows.size()), d_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_) throw Error(ErrorCode::InvalidInput, "distance matrix is not square");
            for (std::size_t j = 0; j < n_; ++j) {
                const double v = rows[i][j];
                if (!std::isfinite(v) || v < 0) throw Error(ErrorCode::InvalidInput, "bad distance entry");
                d_[i * n_ + j] = v;
            }
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (d_[i * n_ + i] != 0.0) throw Error(ErrorCode::InvalidInput, "non-zero diagonal");
            for (std::size_t j = 0; j < i; ++j)
                if (d_[i * n_ + j] != d_[j * n_ + i]) throw Error(ErrorCode::InvalidInput, "asymmetric distances");
        }
    }

    static DistanceMatrix geodesic(const PolygonDomain& dom, std::span<const Point> pts) {
        DistanceMatrix m;
        m.n_ = pts.size();
        m.d_.assign(m.n_ * m.n_, 0.0);
        for (std::size_t i = 0; i < m.n_; ++i)
            for (std::size_t j = i + 1; j < m.n_; ++j) {
                const double v = geodesic_distance(dom, pts[i], pts[j]);
                m.d_[i * m.n_ + j] = v;
                m.d_[j * m.n_ + i] = v;
            }
        return m;
    }

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Edge {i,j} iff d(i,j) <= threshold (or < threshold when strict).
struct DeltaGraph {
    std::size_t n = 0;
    double threshold = 0.0;
    bool strict = false;
    std::vector<std::vector<std::size_t>> adjacency;

    bool has_edge(std::size_t i, std::size_t j) const {
        return std::binary_search(adjacency[i].begin(), adjacency[i].end(), j);
    }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& a : adjacency) e += a.size();
        return e / 2;
    }
};

inline DeltaGraph delta_graph(const DistanceMatrix& d, double threshold, bool strict) {
    if (!(threshold >= 0)) throw Error(ErrorCode::InvalidInput, "threshold must be non-negative");
    DeltaGraph g{d.size(), threshold, strict, std::vector<std::vector<std::size_t>>(d.size())};
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            if (strict ? d(i, j) < threshold : d(i, j) <= threshold) g.adjacency[i].push_back(j);
        }
    return g;
}

struct Cover {
    double radius = 0.0;
    std::vector<Point> centers;
    /// assignment[i] = index of the center covering point i.
    std::vector<std::size_t> assignment;
};

struct Packing {
    double radius = 0.0;
    std::vector<std::size_t> indices;
    std::vector<Point> points;
};

struct PackingNumbers {
    std::size_t nu = 0;
    std::vector<std::size_t> witness;
    std::size_t nu_open = 0;
    std::vector<std::size_t> witness_open;
};

struct SimplexCoverResult {
    std::size_t theta = 0;
    std::vector<std::vector<std::size_t>> parts;
};

struct OracleCaps {
    std::size_t packing = 40;
    std::size_t simplex = 15;
    std::size_t cover = 20;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

inline std::vector<std::size_t> mask_indices(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

/// Maximum independent set by branch and bound. conflict[i] holds the
/// neighbours of i. Ties keep the first maximum found, which is deterministic.
class IndependentSetSolver {
public:
    explicit IndependentSetSolver(std::vector<Mask> conflict) : conflict_(std::move(conflict)) {}

    Mask solve() {
        const std::size_t n = conflict_.size();
        Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
        best_ = 0;
        best_size_ = 0;
        search(all, 0, 0);
        return best_;
    }

private:
    /// Upper bound: greedy clique cover of the candidates (each clique holds
    /// at most one independent vertex).
    int clique_cover_bound(Mask cand) const {
        int cliques = 0;
        while (cand) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
            Mask clique = bit(v);
            Mask pool = cand & conflict_[v];
            while (pool) {
                const std::size_t w = static_cast<std::size_t>(std::countr_zero(pool));
                clique |= bit(w);
                pool &= conflict_[w];
            }
            cand &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void search(Mask cand, Mask chosen, int size) {
        if (!cand) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        if (size + std::popcount(cand) <= best_size_) return;
        if (size + clique_cover_bound(cand) <= best_size_) return;
        // Isolated candidates are always taken.
        std::size_t pick = 64;
        int pick_deg = -1;
        for (Mask m = cand; m; m &= m - 1) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
            const int deg = std::popcount(conflict_[v] & cand);
            if (deg == 0) {
                search(cand & ~bit(v), chosen | bit(v), size + 1);
                return;
            }
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        search(cand & ~bit(pick) & ~conflict_[pick], chosen | bit(pick), size + 1);
        search(cand & ~bit(pick), chosen, size);
    }

    std::vector<Mask> conflict_;
    Mask best_ = 0;
    int best_size_ = 0;
};

inline std::vector<Mask> conflict_masks(const DistanceMatrix& d, double threshold, bool strict) {
    std::vector<Mask> out(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (i != j && (strict ? d(i, j) < threshold : d(i, j) <= threshold)) out[i] |= bit(j);
    return out;
}

}  // namespace detail

/// nu: largest subset with pairwise distance > 2*delta; nu_open: pairwise >= 2*delta.
inline PackingNumbers max_packing_exact(const DistanceMatrix& d, double delta, std::size_t cap = 40) {
    if (d.size() > cap || d.size() > 64) throw Error(ErrorCode::InstanceTooLarge, "packing oracle size cap exceeded");
    PackingNumbers out;
    if (d.size() == 0) return out;
    const double t = 2.0 * delta;
    detail::IndependentSetSolver closed(detail::conflict_masks(d, t, false));
    detail::IndependentSetSolver open(detail::conflict_masks(d, t, true));
    out.witness = detail::mask_indices(closed.solve());
    out.nu = out.witness.size();
    out.witness_open = detail::mask_indices(open.solve());
    out.nu_open = out.witness_open.size();
    return out;
}

/// theta: fewest parts of diameter <= 2*delta (minimum clique cover of G_{2 delta}).
inline SimplexCoverResult min_simplex_cover_exact(const DistanceMatrix& d, double delta, std::size_t cap = 15) {
    const std::size_t n = d.size();
    if (n > cap || n > 24) throw Error(ErrorCode::InstanceTooLarge, "simplex-cover oracle size cap exceeded");
    SimplexCoverResult out;
    if (n == 0) return out;
    const double t = 2.0 * delta;
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<detail::Mask> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d(i, j) <= t) adj[i] |= detail::bit(j);
    std::vector<char> clique(full + 1, 0);
    clique[0] = 1;
    for (std::size_t m = 1; m <= full; ++m) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
        const std::size_t rest = m & (m - 1);
        clique[m] = clique[rest] && (rest & ~adj[low]) == 0;
    }
    constexpr std::uint8_t kInf = 255;
    std::vector<std::uint8_t> dp(full + 1, kInf);
    std::vector<std::uint32_t> choice(full + 1, 0);
    dp[0] = 0;
    for (std::size_t m = 1; m <= full; ++m) {
        const std::size_t low = m & (~m + 1);
        const std::size_t rest = m ^ low;
        // Parts containing the lowest element of m.
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            const std::size_t part = sub | low;
            if (clique[part] && dp[m ^ part] != kInf && dp[m ^ part] + 1 < dp[m]) {
                dp[m] = static_cast<std::uint8_t>(dp[m ^ part] + 1);
                choice[m] = static_cast<std::uint32_t>(part);
            }
            if (sub == 0) break;
        }
    }
    out.theta = dp[full];
    for (std::size_t m = full; m; m ^= choice[m]) out.parts.push_back(detail::mask_indices(choice[m]));
    return out;
}

/// Smallest set of candidate-centered balls of radius delta*(1+tol) covering pts.
inline Cover min_cover_exact(const PolygonDomain& dom, std::span<const Point> pts, double delta,
                             std::span<const Point> candidates, double tol = kCoverEps, std::size_t cap = 20) {
    const std::size_t n = pts.size();
    if (n > cap || n > 64) throw Error(ErrorCode::InstanceTooLarge, "cover oracle size cap exceeded");
    Cover out;
    out.radius = delta;
    if (n == 0) return out;
    const double r = delta * (1.0 + tol);
    const detail::Mask full = n == 64 ? ~detail::Mask{0} : detail::bit(n) - 1;

    // Distinct coverage sets, keeping the first candidate for each.
    std::vector<std::pair<detail::Mask, std::size_t>> sets;
    {
        std::unordered_map<detail::Mask, std::size_t> seen;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!dom.contains(candidates[c])) continue;
            detail::Mask m = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (geodesic_distance(dom, candidates[c], pts[i]) <= r) m |= detail::bit(i);
            if (m && seen.emplace(m, c).second) sets.emplace_back(m, c);
        }
    }
    // Drop dominated sets.
    std::vector<std::pair<detail::Mask, std::size_t>> kept;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < sets.size() && !dominated; ++b)
            dominated = b != a && (sets[a].first & ~sets[b].first) == 0 && sets[a].first != sets[b].first;
        if (!dominated) kept.push_back(sets[a]);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return std::popcount(a.first) > std::popcount(b.first); });
    detail::Mask reach = 0;
    for (const auto& s : kept) reach |= s.first;
    if (reach != full) throw Error(ErrorCode::Infeasible, "some point is not within delta of any candidate");

    std::vector<std::size_t> best;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cur;
    std::unordered_map<detail::Mask, std::size_t> memo;  // uncovered -> fewest extra sets known to fail below
    int max_pop = 0;
    for (const auto& s : kept) max_pop = std::max(max_pop, std::popcount(s.first));

    auto search = [&](auto&& self, detail::Mask covered) -> void {
        if (covered == full) {
            if (cur.size() < best_size) {
                best_size = cur.size();
                best = cur;
            }
            return;
        }
        const detail::Mask open = full & ~covered;
        const std::size_t lower = (static_cast<std::size_t>(std::popcount(open)) + max_pop - 1) / max_pop;
        if (cur.size() + lower >= best_size) return;
        if (auto it = memo.find(open); it != memo.end() && cur.size() >= it->second) return;
        memo[open] = cur.size();
        const std::size_t first = static_cast<std::size_t>(std::countr_zero(open));
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (!(kept[k].first & detail::bit(first))) continue;
            cur.push_back(k);
            self(self, covered | kept[k].first);
            cur.pop_back();
        }
    };
    search(search, 0);

    for (std::size_t k : best) out.centers.push_back(candidates[kept[k].second]);
    out.assignment.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < best.size(); ++c)
            if (kept[best[c]].first & detail::bit(i)) {
                out.assignment[i] = c;
                break;
            }
    return out;
}

struct CoverReport {
    bool ok = false;
    std::vector<std::size_t> uncovered;
    std::vector<std::size_t> centers_outside;
    double worst_ratio = 0.0;  // max over points of (nearest-center distance) / delta
};

/// Every point within delta*(1+tol) of some center, every center in the polygon.
inline CoverReport verify_cover(const PolygonDomain& dom, std::span<const Point> pts, const Cover& cover,
                                double tol = kCoverEps) {
    CoverReport rep;
    std::vector<char> usable(cover.centers.size(), 0);
    for (std::size_t c = 0; c < cover.centers.size(); ++c) {
        usable[c] = is_finite(cover.centers[c]) && dom.locate(cover.centers[c]).has_value();
        if (!usable[c]) rep.centers_outside.push_back(c);
    }
    const double r = cover.radius * (1.0 + tol);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cover.centers.size(); ++c)
            if (usable[c]) best = std::min(best, geodesic_distance(dom, pts[i], cover.centers[c]));
        if (!(best <= r)) rep.uncovered.push_back(i);
        rep.worst_ratio = std::max(rep.worst_ratio, cover.radius > 0 ? best / cover.radius : (best > 0 ? std::numeric_limits<double>::infinity() : 0.0));
    }
    rep.ok = rep.uncovered.empty() && rep.centers_outside.empty();
    return rep;
}

struct PackingReport {
    bool ok = false;
    std::optional<std::pair<std::size_t, std::size_t>> violating;
};

/// Pairwise geodesic distance strictly greater than 2*radius.
inline PackingReport verify_packing(const PolygonDomain& dom, const Packing& packing) {
    PackingReport rep;
    const auto& p = packing.points;
    for (std::size_t i = 0; i < p.size() && !rep.violating; ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (!(geodesic_distance(dom, p[i], p[j]) > 2.0 * packing.radius)) {
                rep.violating = std::make_pair(i, j);
                break;
            }
    rep.ok = !rep.violating;
    return rep;
}

/// S, pairwise geodesic midpoints, and the one-center of every triple.
inline std::vector<Point> standard_candidates(const PolygonDomain& dom, std::span<const Point> pts) {
    std::vector<Point> out(pts.begin(), pts.end());
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(geodesic_midpoint(dom, pts[i], pts[j]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::array<Point, 3> tri{pts[i], pts[j], pts[k]};
                out.push_back(geodesic_one_center(dom, tri).center);
            }
    return out;
}

struct OracleReport {
    std::size_t nu = 0;
    std::size_t nu_open = 0;
    std::size_t theta = 0;
    std::size_t rho_hat = 0;
    std::size_t nu_half = 0;
    std::vector<std::size_t> nu_witness;
    std::vector<std::size_t> nu_open_witness;
    std::vector<std::vector<std::size_t>> theta_witness;
    Cover rho_witness;
    bool nu_le_theta = false;
    bool theta_le_rho = false;
    bool rho_le_nu_half = false;

    bool holds() const { return nu_le_theta && theta_le_rho && rho_le_nu_half; }
};

/// nu_delta <= theta_delta <= rho_hat_delta <= nu_{delta/2}. rho_hat uses
/// standard_candidates with exact (zero-tolerance) ball membership.
inline OracleReport kt_chain_check(const PolygonDomain& dom, std::span<const Point> pts, double delta,
                                   const OracleCaps& caps = {}) {
    const std::size_t n = pts.size();
    if (n > caps.packing || n > caps.simplex || n > caps.cover)
        throw Error(ErrorCode::InstanceTooLarge, "oracle size cap exceeded");
    OracleReport rep;
    const DistanceMatrix d = DistanceMatrix::geodesic(dom, pts);
    const PackingNumbers pk = max_packing_exact(d, delta, caps.packing);
    rep.nu = pk.nu;
    rep.nu_open = pk.nu_open;
    rep.nu_witness = pk.witness;
    rep.nu_open_witness = pk.witness_open;
    const SimplexCoverResult sc = min_simplex_cover_exact(d, delta, caps.simplex);
    rep.theta = sc.theta;
    rep.theta_witness = sc.parts;
    const auto cands = standard_candidates(dom, pts);
    rep.rho_witness = min_cover_exact(dom, pts, delta, cands, 0.0, caps.cover);
    rep.rho_hat = rep.rho_witness.centers.size();
    rep.nu_half = max_packing_exact(d, 0.5 * delta, caps.packing).nu;
    rep.nu_le_theta = rep.nu <= rep.theta;
    rep.theta_le_rho = rep.theta <= rep.rho_hat;
    rep.rho_le_nu_half = rep.rho_hat <= rep.nu_half;
    return rep;
}

}  // namespace geopack

#endif  // GEOPACK_ORACLES_HPP
