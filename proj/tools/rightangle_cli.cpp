// rightangle: score, certify, search and draw planar point configurations by
// their deviation from right angles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rightangle/certificate.hpp"
#include "rightangle/constructions.hpp"
#include "rightangle/error.hpp"
#include "rightangle/io.hpp"
#include "rightangle/optimizer.hpp"
#include "rightangle/scorer.hpp"
#include "rightangle/witnesses.hpp"

namespace ra = rightangle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string indices(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i : v) out += (out.empty() ? "" : " ") + std::to_string(i);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        ra::write_file(out_path, text);
    }
}

std::size_t resolve_k(const ra::PointsDocument& doc, std::optional<std::size_t> flag) {
    if (flag) return *flag;
    return doc.k.value_or(4);
}

void print_gamma(const ra::GammaResult& r) {
    std::cout << "gamma_deg " << fmt(r.gamma_deg, 9) << "\n"
              << "delta_deg " << fmt(r.delta_deg, 9) << "\n"
              << "witness " << indices(r.witness) << "\n"
              << "argmin P" << r.argmin_angle.a << " P" << r.argmin_angle.b << " P"
              << r.argmin_angle.c << " angle_deg " << fmt(r.argmin_angle.angle_deg, 9)
              << " deviation_deg " << fmt(r.argmin_angle.deviation_deg, 9) << "\n"
              << "subsets_examined " << r.subsets_examined << "\n"
              << "subsets_pruned " << r.subsets_pruned << "\n";
}

ra::PolylineSpec parse_chain(const std::string& spec) {
    ra::PolylineSpec chain;
    std::string body = spec;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        const std::string style = spec.substr(0, colon);
        body = spec.substr(colon + 1);
        if (style == "dashed") {
            chain.style = ra::StrokeStyle::dashed;
        } else if (style == "dotted") {
            chain.style = ra::StrokeStyle::dotted;
        } else if (style == "solid") {
            chain.style = ra::StrokeStyle::solid;
        } else {
            throw ra::Error(ra::ErrorCode::ParseError, "unknown chain style '" + style + "'");
        }
    }
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            chain.indices.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw ra::Error(ra::ErrorCode::ParseError, "bad chain index '" + item + "'");
        }
    }
    return chain;
}

void print_trace(std::ostream& os, const std::vector<ra::TraceRecord>& trace) {
    for (const ra::TraceRecord& t : trace) {
        os << t.iter << ' ' << fmt(t.temperature, 9) << ' ' << fmt(t.gamma_current, 9) << ' '
           << fmt(t.gamma_best, 9) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Right-angle deviation toolkit: score, certify, search and render point sets"};
    app.require_subcommand(1);

    std::string out_path;
    std::optional<std::size_t> k_flag;
    std::uint64_t budget = ra::kDefaultBudget;
    double tol = ra::kDefaultVerifyTolerance;
    std::uint64_t seed = 1;

    int exit_code = kExitOk;

    // score
    auto* score = app.add_subcommand("score", "gamma and delta of a points file");
    std::string score_file;
    std::string mode = "pruned";
    score->add_option("file", score_file, "points file")->required();
    score->add_option("--k", k_flag, "subset size (default: file's k, else 4)");
    score->add_option("--mode", mode, "oracle or pruned")->check(CLI::IsMember({"oracle", "pruned"}));
    score->add_option("--budget", budget, "maximum subsets to enumerate");
    score->callback([&] {
        const ra::PointsDocument doc = ra::read_points_document(score_file);
        const ra::ScoreOptions opts{mode == "oracle" ? ra::ScoreMode::oracle : ra::ScoreMode::pruned,
                                    budget};
        print_gamma(ra::gamma(doc.points, resolve_k(doc, k_flag), opts));
    });

    // cert generate | verify | table
    auto* cert = app.add_subcommand("cert", "certificate generation and verification");
    cert->require_subcommand(1);
    auto* gen = cert->add_subcommand("generate", "group every subset by its nearest right angle");
    std::string gen_file;
    bool gen_table = false;
    gen->add_option("file", gen_file, "points file")->required();
    gen->add_option("--k", k_flag, "subset size");
    gen->add_option("--budget", budget, "maximum subsets to enumerate");
    gen->add_option("--out", out_path, "write the certificate here instead of stdout");
    gen->add_flag("--table", gen_table, "emit the two-column table instead of JSON");
    gen->callback([&] {
        const ra::PointsDocument doc = ra::read_points_document(gen_file);
        const ra::Certificate c = ra::generate_certificate(doc.points, resolve_k(doc, k_flag), budget);
        emit(gen_table ? ra::render_table(c) : ra::certificate_to_json(c), out_path);
    });

    auto* ver = cert->add_subcommand("verify", "check a certificate against a points file");
    std::string ver_points;
    std::string ver_cert;
    ver->add_option("points", ver_points, "points file")->required();
    ver->add_option("certificate", ver_cert, "certificate JSON")->required();
    ver->add_option("--tol", tol, "tolerance in degrees");
    ver->callback([&] {
        const ra::Configuration s = ra::load_points(ver_points);
        const ra::Certificate c = ra::certificate_from_json(ra::read_file(ver_cert));
        const ra::VerifyReport r = ra::verify_certificate(s, c, tol);
        if (r.pass) {
            std::cout << "PASS " << r.message << "\n";
        } else {
            std::cout << "FAIL check " << static_cast<int>(r.failed_check) << ": " << r.message << "\n";
            exit_code = kExitVerifyFailed;
        }
    });

    auto* table = cert->add_subcommand("table", "render a certificate as a two-column table");
    std::string table_cert;
    table->add_option("certificate", table_cert, "certificate JSON")->required();
    table->callback([&] {
        std::cout << ra::render_table(ra::certificate_from_json(ra::read_file(table_cert)));
    });

    // witness monotone | binchain
    auto* witness = app.add_subcommand("witness", "constructive subset witnesses");
    witness->require_subcommand(1);
    auto* mono = witness->add_subcommand("monotone", "direction-gap rotation + monotone run");
    std::string mono_file;
    mono->add_option("file", mono_file, "points file")->required();
    mono->add_option("--k", k_flag, "subset size");
    mono->callback([&] {
        const ra::PointsDocument doc = ra::read_points_document(mono_file);
        const ra::MonotoneWitness w = ra::monotone_witness(doc.points, resolve_k(doc, k_flag));
        std::cout << "subset " << indices(w.subset) << "\n"
                  << "rotation_deg " << fmt(w.rotation_deg) << "\n"
                  << "direction "
                  << (w.direction == ra::Monotone::increasing ? "increasing" : "decreasing") << "\n"
                  << "guaranteed_deviation_deg " << fmt(w.guaranteed_deviation_deg) << "\n"
                  << "measured_deviation_deg " << fmt(w.measured_deviation_deg) << "\n";
    });

    auto* bin = witness->add_subcommand("binchain", "pigeonhole chain in one direction bin");
    std::string bin_file;
    std::size_t bins = 4;
    bin->add_option("file", bin_file, "points file")->required();
    bin->add_option("--k", k_flag, "subset size");
    bin->add_option("--m", bins, "number of direction bins")->check(CLI::PositiveNumber);
    bin->callback([&] {
        const ra::PointsDocument doc = ra::read_points_document(bin_file);
        // Centre the widest direction gap on the vertical so no segment is
        // vertical, which makes every x coordinate distinct.
        const double rotation = ra::gap_rotation(doc.points, 90.0);
        const ra::Configuration rotated = ra::transform(doc.points, ra::Transform::rotation(rotation));
        const ra::BinChainWitness w = ra::bin_chain_witness(rotated, resolve_k(doc, k_flag), bins);
        std::cout << "subset " << indices(w.subset) << "\n"
                  << "chain " << indices(w.chain) << "\n"
                  << "rotation_deg " << fmt(rotation) << "\n"
                  << "bin " << w.bin << " of " << w.bin_count << "\n"
                  << "measured_deviation_deg "
                  << fmt(ra::subset_min_deviation(doc.points, w.subset).deviation_deg) << "\n";
    });

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named construction");
    construct->require_subcommand(1);
    auto emit_config = [&](const ra::Configuration& s) {
        if (out_path.empty()) {
            std::cout << ra::format_points_text(s);
        } else {
            ra::save_points(s, out_path, k_flag);
        }
    };
    construct->add_subcommand("seven", "{0,1,2}^2 minus (0,2),(2,2)")->callback([&] {
        emit_config(ra::seven_point());
    });
    double cluster_n = 1e6;
    auto* cluster = construct->add_subcommand("cluster", "{0,N,2N} x {0,1,2}");
    cluster->add_option("--N", cluster_n, "column spacing, > 2");
    cluster->callback([&] { emit_config(ra::cluster_grid(cluster_n)); });
    std::size_t circle_n = 12;
    auto* circle = construct->add_subcommand("circle", "equally spaced points on the unit circle");
    circle->add_option("--n", circle_n, "point count");
    circle->callback([&] { emit_config(ra::circle_points(circle_n)); });
    ra::SzekeresParams sz{3, 1e4};
    std::optional<std::size_t> sz_n;
    auto* szek = construct->add_subcommand("szekeres", "binary-vector construction, 2^t points");
    szek->add_option("--t", sz.t, "depth t");
    szek->add_option("--R", sz.base, "scale base R > 1");
    szek->add_option("--n", sz_n, "truncate to the first n points");
    szek->callback([&] {
        emit_config(sz_n ? ra::szekeres_truncated(*sz_n, sz.base) : ra::szekeres(sz));
    });
    construct->add_subcommand("paper10", "the 10-point record configuration")->callback([&] {
        emit_config(ra::paper_config_10());
    });
    construct->add_subcommand("paper11", "the 11-point lattice configuration")->callback([&] {
        emit_config(ra::paper_config_11());
    });
    for (CLI::App* sub : construct->get_subcommands({})) {
        sub->add_option("--out", out_path, "output points file (.json for the document form)");
        sub->add_option("--k", k_flag, "subset size recorded in a .json document");
    }

    // anneal
    auto* ann = app.add_subcommand("anneal", "simulated annealing on a lattice");
    ra::AnnealParams ap;
    std::size_t seeds = 1;
    std::size_t threads = 0;
    std::string trace_path;
    ann->add_option("--n", ap.n, "point count");
    ann->add_option("--k", ap.k, "subset size");
    ann->add_option("--grid", ap.grid, "lattice side N");
    ann->add_option("--iters", ap.iterations, "iterations per chain");
    ann->add_option("--t0", ap.t_initial, "initial temperature (degrees)");
    ann->add_option("--cooling", ap.cooling, "geometric cooling factor");
    ann->add_option("--relocate", ap.relocate_prob, "probability of a global move");
    ann->add_option("--radius", ap.local_radius, "local move L-infinity radius");
    ann->add_option("--seed", seed, "first seed");
    ann->add_option("--seeds", seeds, "number of chains (seeds seed..seed+seeds-1)");
    ann->add_option("--threads", threads, "worker threads (0 = hardware)");
    ann->add_option("--trace-every", ap.trace_every, "trace stride");
    ann->add_option("--trace", trace_path, "write the best chain's trace here");
    ann->add_option("--out", out_path, "write the best configuration here");
    ann->add_option("--budget", ap.budget, "maximum subsets to enumerate");
    ann->callback([&] {
        ap.seed = seed;
        const std::vector<ra::AnnealResult> runs = ra::anneal_seeds(ap, seeds, threads);
        std::size_t best = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            std::cout << "seed " << ap.seed + i << " gamma_deg " << fmt(runs[i].result.gamma_deg)
                      << " accepted " << runs[i].accepted << "\n";
            if (runs[i].result.gamma_deg < runs[best].result.gamma_deg) best = i;
        }
        std::cout << "best_seed " << ap.seed + best << "\n";
        print_gamma(runs[best].result);
        if (!trace_path.empty()) {
            std::ostringstream os;
            os << "# iter T gamma_current gamma_best\n";
            print_trace(os, runs[best].trace);
            ra::write_file(trace_path, os.str());
        }
        if (!out_path.empty()) ra::save_points(runs[best].best, out_path, ap.k);
    });

    // refine
    auto* ref = app.add_subcommand("refine", "gradient refinement of continuous coordinates");
    std::string ref_file;
    ra::RefineParams rp;
    ref->add_option("file", ref_file, "points file")->required();
    ref->add_option("--k", k_flag, "subset size");
    ref->add_option("--betas", rp.beta_schedule, "increasing smoothing temperatures");
    ref->add_option("--fd-step", rp.fd_step, "finite-difference step");
    ref->add_option("--max-iters", rp.max_iters, "gradient steps per beta");
    ref->add_option("--min-rel", rp.min_rel_improvement, "relative improvement stopping threshold");
    ref->add_option("--out", out_path, "write the refined configuration here");
    ref->callback([&] {
        const ra::PointsDocument doc = ra::read_points_document(ref_file);
        const std::size_t k = resolve_k(doc, k_flag);
        const double before = ra::gamma(doc.points, k).gamma_deg;
        const ra::RefineResult r = ra::refine(doc.points, k, rp);
        std::cout << "input_gamma_deg " << fmt(before, 9) << "\n"
                  << "accepted_steps " << r.accepted_steps << "\n";
        print_gamma(r.result);
        if (!out_path.empty()) ra::save_points(r.config, out_path, k);
    });

    // render
    auto* render = app.add_subcommand("render", "draw a configuration as SVG");
    std::string render_file;
    std::vector<std::string> chains;
    bool figure_chains = false;
    bool no_labels = false;
    ra::SvgOptions svg;
    render->add_option("file", render_file, "points file")->required();
    render->add_option("--out", out_path, "SVG output path")->required();
    render->add_option("--chain", chains, "polyline as style:i,j,... (style: dashed|dotted|solid)");
    render->add_flag("--figure-chains", figure_chains,
                     "add the two chains drawn for the 10-point record configuration");
    render->add_flag("--no-labels", no_labels, "omit point labels");
    render->add_option("--width", svg.width_px, "image width in px");
    render->callback([&] {
        const ra::Configuration s = ra::load_points(render_file);
        if (figure_chains) {
            svg.chains.push_back({{7, 3, 6, 5, 0}, ra::StrokeStyle::dashed});
            svg.chains.push_back({{0, 3, 4, 2, 1}, ra::StrokeStyle::dotted});
        }
        for (const std::string& c : chains) svg.chains.push_back(parse_chain(c));
        svg.labels = !no_labels;
        ra::render_svg(s, out_path, svg);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ra::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
