#pragma once
#ifndef GEOPACK_IO_HPP
#define GEOPACK_IO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geopack/cover_core.hpp"
#include "geopack/oracles.hpp"
#include "geopack/random.hpp"

namespace geopack {

using Json = nlohmann::ordered_json;

struct Instance {
    std::vector<Point> vertices;
    std::vector<Point> points;
    double delta = 1.0;
    std::optional<std::int64_t> seed;

    PolygonDomain domain() const { return PolygonDomain::from_vertices(vertices); }

    friend bool operator==(const Instance& a, const Instance& b) {
        auto same = [](const std::vector<Point>& p, const std::vector<Point>& q) {
            return std::equal(p.begin(), p.end(), q.begin(), q.end(),
                              [](Point s, Point t) { return s.x == t.x && s.y == t.y; });
        };
        return same(a.vertices, b.vertices) && same(a.points, b.points) && a.delta == b.delta && a.seed == b.seed;
    }
};

struct Certificate {
    double radius = 0.0;
    std::vector<Point> centers;
    std::vector<std::size_t> assignment;
    std::vector<std::size_t> packing;
    bool cover_ok = false;
    bool packing_ok = false;
    bool ratio_ok = false;
    std::vector<IterationTrace> trace;

    double ratio() const { return packing.empty() ? 0.0 : static_cast<double>(centers.size()) / packing.size(); }
    bool verified() const { return cover_ok && packing_ok && ratio_ok; }
};

namespace detail {

inline Json points_json(const std::vector<Point>& pts) {
    Json a = Json::array();
    for (const Point& p : pts) a.push_back({p.x, p.y});
    return a;
}

inline std::vector<Point> points_from(const Json& a, const char* what) {
    if (!a.is_array()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an array");
    std::vector<Point> out;
    for (const Json& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw Error(ErrorCode::InvalidInput, std::string(what) + " entries must be [x, y]");
        out.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return out;
}

inline std::vector<std::size_t> indices_from(const Json& a, const char* what) {
    if (!a.is_array()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    for (const Json& e : a) {
        if (!e.is_number_unsigned()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must hold indices");
        out.push_back(e.get<std::size_t>());
    }
    return out;
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

inline Json to_json(const Instance& inst) {
    Json j;
    j["polygon"] = {{"vertices", detail::points_json(inst.vertices)}};
    j["points"] = detail::points_json(inst.points);
    j["delta"] = inst.delta;
    if (inst.seed) j["seed"] = *inst.seed;
    return j;
}

inline Instance instance_from_json(const Json& j) {
    Instance inst;
    inst.vertices = detail::points_from(detail::field(detail::field(j, "polygon"), "vertices"), "polygon.vertices");
    inst.points = detail::points_from(detail::field(j, "points"), "points");
    const Json& d = detail::field(j, "delta");
    if (!d.is_number()) throw Error(ErrorCode::InvalidInput, "delta must be a number");
    inst.delta = d.get<double>();
    if (j.contains("seed") && !j["seed"].is_null()) {
        if (!j["seed"].is_number_integer()) throw Error(ErrorCode::InvalidInput, "seed must be an integer");
        inst.seed = j["seed"].get<std::int64_t>();
    }
    return inst;
}

/// Parses and checks the instance: valid polygon, delta > 0, points inside.
inline Instance parse_instance(const std::string& text) {
    Instance inst = instance_from_json(detail::parse_json(text));
    if (!(inst.delta > 0) || !std::isfinite(inst.delta)) throw Error(ErrorCode::InvalidInput, "delta must be positive");
    const PolygonDomain dom = inst.domain();
    for (const Point& p : inst.points)
        if (!is_finite(p) || !dom.locate(p)) throw Error(ErrorCode::PointOutsidePolygon, "instance point outside polygon");
    return inst;
}

inline std::string serialize(const Instance& inst) { return to_json(inst).dump() + "\n"; }

struct GenOptions {
    std::uint64_t seed = 0;
    std::size_t vertices = 12;
    std::size_t points = 20;
    double delta_quantile = 0.3;
    bool allow_empty = false;
    double scale = 100.0;
};

/// q-quantile (nearest rank from below) of the pairwise geodesic distances.
inline double distance_quantile(const PolygonDomain& dom, std::span<const Point> pts, double q) {
    std::vector<double> d;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back(geodesic_distance(dom, pts[i], pts[j]));
    if (d.empty()) return 1.0;
    std::sort(d.begin(), d.end());
    const auto k = static_cast<std::size_t>(std::floor(q * static_cast<double>(d.size() - 1)));
    return d[std::min(k, d.size() - 1)];
}

inline Instance gen_instance(const GenOptions& opt) {
    if (opt.vertices < 3) throw Error(ErrorCode::TooFewVertices, "a polygon needs at least 3 vertices");
    if (!(opt.delta_quantile > 0.0 && opt.delta_quantile <= 1.0))
        throw Error(ErrorCode::InvalidInput, "delta quantile must lie in (0, 1]");
    if (opt.points == 0 && !opt.allow_empty) throw Error(ErrorCode::EmptySet, "zero points requested");
    Rng rng(opt.seed);
    std::optional<SimplePolygon> poly;
    for (int attempt = 0; attempt < 1000 && !poly; ++attempt) poly = random_simple_polygon(rng, opt.vertices, opt.scale);
    if (!poly) throw Error(ErrorCode::GenerationTimeout, "no simple polygon after 1000 attempts");
    const PolygonDomain dom(*poly);

    Instance inst;
    inst.vertices.assign(poly->vertices().begin(), poly->vertices().end());
    for (std::size_t i = 0; i < opt.points; ++i) inst.points.push_back(random_interior_point(rng, dom));
    inst.delta = distance_quantile(dom, inst.points, opt.delta_quantile);
    if (!(inst.delta > 0)) throw Error(ErrorCode::GenerationTimeout, "degenerate point sample");
    inst.seed = static_cast<std::int64_t>(opt.seed);
    return inst;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

inline Certificate make_certificate(const PolygonDomain& dom, std::span<const Point> pts, const PackCoverResult& res) {
    Certificate c;
    c.radius = res.cover.radius;
    c.centers = res.cover.centers;
    c.assignment = res.cover.assignment;
    c.packing = res.packing.indices;
    c.trace = res.trace;
    c.cover_ok = verify_cover(dom, pts, res.cover).ok;
    c.packing_ok = verify_packing(dom, res.packing).ok;
    c.ratio_ok = c.centers.size() <= 19 * c.packing.size() && (pts.empty() || !c.packing.empty());
    return c;
}

inline Certificate run_cover(const Instance& inst) {
    const PolygonDomain dom = inst.domain();
    if (inst.points.empty()) {
        PackCoverResult none;
        none.cover.radius = none.packing.radius = inst.delta;
        return make_certificate(dom, inst.points, none);
    }
    return make_certificate(dom, inst.points, pack_and_cover(dom, inst.points, inst.delta));
}

inline Json to_json(const IterationTrace& t) {
    Json j;
    j["v"] = t.v;
    j["u"] = t.u;
    j["remaining"] = t.remaining;
    j["targets"] = t.targets;
    j["balls"] = t.balls;
    j["removed"] = t.removed;
    j["simplex_case"] = t.simplex_case;
    j["regions"] = Json::array();
    for (const auto& side : t.regions) j["regions"].push_back({side[0], side[1], side[2]});
    return j;
}

inline Json to_json(const Certificate& c) {
    Json j;
    j["cover"] = {{"radius", c.radius}, {"centers", detail::points_json(c.centers)}, {"assignment", c.assignment}};
    j["packing"] = {{"indices", c.packing}};
    j["counts"] = {{"cover", c.centers.size()}, {"packing", c.packing.size()}};
    j["ratio"] = c.ratio();
    j["verification"] = {{"cover", c.cover_ok}, {"packing", c.packing_ok}, {"ratio", c.ratio_ok}};
    j["trace"] = Json::array();
    for (const auto& t : c.trace) j["trace"].push_back(to_json(t));
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    using detail::field;
    Certificate c;
    const Json& cover = field(j, "cover");
    if (!field(cover, "radius").is_number()) throw Error(ErrorCode::InvalidInput, "cover.radius must be a number");
    c.radius = cover["radius"].get<double>();
    c.centers = detail::points_from(field(cover, "centers"), "cover.centers");
    c.assignment = detail::indices_from(field(cover, "assignment"), "cover.assignment");
    c.packing = detail::indices_from(field(field(j, "packing"), "indices"), "packing.indices");
    if (j.contains("verification")) {
        const Json& v = j["verification"];
        c.cover_ok = v.value("cover", false);
        c.packing_ok = v.value("packing", false);
        c.ratio_ok = v.value("ratio", false);
    }
    if (j.contains("trace")) {
        for (const Json& t : j["trace"]) {
            IterationTrace tr;
            tr.v = field(t, "v").get<std::size_t>();
            tr.u = field(t, "u").get<std::size_t>();
            tr.remaining = field(t, "remaining").get<std::size_t>();
            tr.targets = field(t, "targets").get<std::size_t>();
            tr.balls = field(t, "balls").get<std::size_t>();
            tr.removed = field(t, "removed").get<std::size_t>();
            tr.simplex_case = field(t, "simplex_case").get<bool>();
            const Json& r = field(t, "regions");
            for (std::size_t k = 0; k < 2 && k < r.size(); ++k)
                for (std::size_t m = 0; m < 3 && m < r[k].size(); ++m) tr.regions[k][m] = r[k][m].get<std::size_t>();
            c.trace.push_back(tr);
        }
    }
    return c;
}

inline Certificate parse_certificate(const std::string& text) {
    try {
        return certificate_from_json(detail::parse_json(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed certificate: ") + e.what());
    }
}

inline std::string serialize(const Certificate& c) { return to_json(c).dump() + "\n"; }

struct VerifyReport {
    bool radius_ok = false;
    bool indices_ok = false;
    bool cover_ok = false;
    bool packing_ok = false;
    bool ratio_ok = false;
    std::vector<std::size_t> uncovered;

    bool ok() const { return radius_ok && indices_ok && cover_ok && packing_ok && ratio_ok; }
};

/// Recomputes every claim of the certificate from scratch; flags stored in
/// the file are ignored.
inline VerifyReport run_verify(const Instance& inst, const Certificate& c) {
    VerifyReport rep;
    const PolygonDomain dom = inst.domain();
    rep.radius_ok = c.radius == inst.delta;
    rep.indices_ok = std::all_of(c.packing.begin(), c.packing.end(), [&](std::size_t i) { return i < inst.points.size(); });
    Cover cover{inst.delta, c.centers, c.assignment};
    const CoverReport cr = verify_cover(dom, inst.points, cover);
    rep.cover_ok = cr.ok;
    rep.uncovered = cr.uncovered;
    if (rep.indices_ok) {
        Packing pk{inst.delta, c.packing, {}};
        for (std::size_t i : c.packing) pk.points.push_back(inst.points[i]);
        std::vector<std::size_t> sorted = c.packing;
        std::sort(sorted.begin(), sorted.end());
        rep.packing_ok = verify_packing(dom, pk).ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    rep.ratio_ok = (inst.points.empty() || !c.packing.empty()) && c.centers.size() <= 19 * c.packing.size();
    return rep;
}

inline Json to_json(const OracleReport& r) {
    Json j;
    j["nu"] = r.nu;
    j["nu_open"] = r.nu_open;
    j["theta"] = r.theta;
    j["rho_hat"] = r.rho_hat;
    j["nu_half"] = r.nu_half;
    j["chain"] = {{"nu_le_theta", r.nu_le_theta}, {"theta_le_rho", r.theta_le_rho}, {"rho_le_nu_half", r.rho_le_nu_half}};
    j["witness"] = {{"packing", r.nu_witness},
                    {"packing_open", r.nu_open_witness},
                    {"simplices", r.theta_witness},
                    {"cover", detail::points_json(r.rho_witness.centers)}};
    return j;
}

// ---------------------------------------------------------------------------
// CSV point lists ("x,y" header)
// ---------------------------------------------------------------------------

inline std::vector<Point> parse_points_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Point> out;
    bool header = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line == "x,y") continue;
            throw Error(ErrorCode::InvalidInput, "CSV must start with an \"x,y\" header");
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::InvalidInput, "CSV line " + std::to_string(lineno) + ": expected x,y");
        try {
            std::size_t used = 0;
            const std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
            const double x = std::stod(xs, &used);
            if (used != xs.size()) throw std::invalid_argument(xs);
            const double y = std::stod(ys, &used);
            if (used != ys.size()) throw std::invalid_argument(ys);
            out.push_back({x, y});
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidInput, "CSV line " + std::to_string(lineno) + ": not a number");
        }
    }
    return out;
}

inline std::string points_csv(const std::vector<Point>& pts) {
    std::string out = "x,y\n";
    char buf[64];
    for (const Point& p : pts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    out << text;
}

}  // namespace geopack

#endif  // GEOPACK_IO_HPP
