// geopack: generate instances, compute certified covers/packings, verify,
// run the exact oracles and draw SVG plots.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 oracle cap.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "geopack/geopack.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kTooLarge = 3 };

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        geopack::write_file(path, text);
}

geopack::Instance load_instance(const std::string& path, const std::string& csv) {
    geopack::Instance inst = geopack::parse_instance(geopack::read_file(path));
    if (!csv.empty()) {
        inst.points = geopack::parse_points_csv(geopack::read_file(csv));
        inst = geopack::parse_instance(geopack::serialize(inst));
    }
    return inst;
}

int exit_for(const geopack::Error& e) {
    switch (e.code()) {
        case geopack::ErrorCode::InstanceTooLarge: return kTooLarge;
        case geopack::ErrorCode::CoverageFailure:
        case geopack::ErrorCode::DiameterTooLarge:
        case geopack::ErrorCode::SideTooLong: return kVerifyFailed;
        default: return kInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesic ball packing and covering in simple polygons"};
    app.require_subcommand(1);

    geopack::GenOptions gen;
    std::string out_path, in_path, cert_path, csv_path;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
    gen_cmd->add_option("--vertices", gen.vertices, "Polygon vertex count")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--points", gen.points, "Number of points");
    gen_cmd->add_option("--delta-quantile", gen.delta_quantile, "Quantile of pairwise distances used as delta");
    gen_cmd->add_option("--scale", gen.scale, "Bounding box side")->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--allow-empty", gen.allow_empty, "Accept --points 0");
    gen_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* cover_cmd = app.add_subcommand("cover", "Compute a certified cover and packing");
    cover_cmd->add_option("-i,--instance", in_path)->required();
    cover_cmd->add_option("--points-csv", csv_path, "Replace the instance points with an x,y CSV list");
    cover_cmd->add_option("-o,--output", out_path, "Certificate file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
    verify_cmd->add_option("-i,--instance", in_path)->required();
    verify_cmd->add_option("-c,--certificate", cert_path)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact packing / simplex-cover / cover numbers");
    oracle_cmd->add_option("-i,--instance", in_path)->required();
    oracle_cmd->add_option("--points-csv", csv_path, "Replace the instance points with an x,y CSV list");
    oracle_cmd->add_option("-o,--output", out_path, "Report file (default stdout)");

    auto* plot_cmd = app.add_subcommand("plot", "Draw instance and certificate as SVG");
    plot_cmd->add_option("-i,--instance", in_path)->required();
    plot_cmd->add_option("-c,--certificate", cert_path);
    plot_cmd->add_option("-o,--output", out_path, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (gen_cmd->parsed()) {
            emit(out_path, geopack::serialize(geopack::gen_instance(gen)));
            return kOk;
        }
        if (cover_cmd->parsed()) {
            const auto inst = load_instance(in_path, csv_path);
            const auto cert = geopack::run_cover(inst);
            emit(out_path, geopack::serialize(cert));
            if (!cert.verified()) {
                std::cerr << "certificate failed self-verification\n";
                return kVerifyFailed;
            }
            return kOk;
        }
        if (verify_cmd->parsed()) {
            const auto inst = load_instance(in_path, "");
            const auto cert = geopack::parse_certificate(geopack::read_file(cert_path));
            const auto rep = geopack::run_verify(inst, cert);
            geopack::Json j{{"ok", rep.ok()},         {"radius", rep.radius_ok}, {"indices", rep.indices_ok},
                            {"cover", rep.cover_ok},  {"packing", rep.packing_ok}, {"ratio", rep.ratio_ok},
                            {"uncovered", rep.uncovered}};
            std::cout << j.dump() << "\n";
            return rep.ok() ? kOk : kVerifyFailed;
        }
        if (oracle_cmd->parsed()) {
            const auto inst = load_instance(in_path, csv_path);
            const auto rep = geopack::kt_chain_check(inst.domain(), inst.points, inst.delta);
            emit(out_path, geopack::to_json(rep).dump() + "\n");
            return rep.holds() ? kOk : kVerifyFailed;
        }
        if (plot_cmd->parsed()) {
            const auto inst = load_instance(in_path, "");
            std::optional<geopack::Certificate> cert;
            if (!cert_path.empty()) cert = geopack::parse_certificate(geopack::read_file(cert_path));
            emit(out_path, geopack::render_svg(inst, cert ? &*cert : nullptr));
            return kOk;
        }
    } catch (const geopack::Error& e) {
        std::cerr << "geopack: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "geopack: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
