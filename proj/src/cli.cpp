#include "polychrome/cli.hpp"

#include "polychrome/checks.hpp"
#include "polychrome/coloring.hpp"
#include "polychrome/error.hpp"
#include "polychrome/io.hpp"
#include "polychrome/render.hpp"
#include "polychrome/rigidity.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <functional>
#include <ostream>

namespace polychrome::cli {

using nlohmann::json;

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::precondition: return precondition;
        case ErrorKind::sizing: return sizing;
        case ErrorKind::format: return format_error;
        case ErrorKind::io: return io_error;
        case ErrorKind::verification: return check_failed;
    }
    return precondition;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
}

void apply_thread_env() {
    if (const char* env = std::getenv(kThreadsEnv)) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1) fail(ErrorKind::precondition, std::string(kThreadsEnv) + " must be a positive integer");
        omp_set_num_threads(static_cast<int>(n));
    }
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") out << text;
    else io::write_text(path, text);
}

json toast_report_json(const ToastReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json jv{{"kind", to_string(v.kind)}, {"pieces", v.pieces}, {"message", v.message}};
        if (v.vertex) jv["vertex"] = *v.vertex;
        violations.push_back(jv);
    }
    return json{{"valid", report.ok}, {"violations", violations}, {"uncovered_unlisted", report.uncovered}};
}

json plan_report_json(const PlanReport& r, const Torus& domain) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"cube_base", domain.coords(v.base)}, {"piece", v.piece}, {"reason", v.reason}});
    return json{{"ok", r.ok()},
                {"cubes_checked", r.cubes_checked},
                {"exterior_cubes", r.exterior_cubes},
                {"gap_cubes", r.gap_cubes},
                {"inner_seam_cubes", r.inner_seam_cubes},
                {"outer_seam_cubes", r.outer_seam_cubes},
                {"violation_count", r.violation_count},
                {"violations", violations}};
}

json invariance_json(const InvarianceReport& r) {
    json matrix = json::array();
    for (const auto& row : r.inv) {
        json jr = json::array();
        for (bool b : row) jr.push_back(b);
        matrix.push_back(jr);
    }
    return json{{"d", r.d}, {"inv", matrix}, {"n", r.n()}, {"non_invariant", r.non_invariant()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polychromatic colourings of Z^d torus grids: toasts, (2^d-1)-colourings, rigidity of 2^d-colourings",
                 "polychrome"};
    app.require_subcommand(1);
    std::function<int()> action;

    // toast gen | validate
    auto* toast = app.add_subcommand("toast", "Generate or validate toast decompositions");
    toast->require_subcommand(1);
    struct {
        int d = 0;
        std::string sides;
        int r = -1;
        int levels = 0;
        std::uint64_t seed = 0;
        GenerationPolicy policy;
        std::string out;
    } gen;
    auto* toast_gen = toast->add_subcommand("gen", "Generate a toast of random nested boxes");
    toast_gen->add_option("-d,--dim", gen.d, "Dimension")->required();
    toast_gen->add_option("--sides", gen.sides, "Side lengths, e.g. 512x512")->required();
    toast_gen->add_option("-r,--separation", gen.r, "Separation radius r (default (2^{d+3}+1)d)");
    toast_gen->add_option("--levels", gen.levels, "Generations of boxes below the whole torus")->required();
    toast_gen->add_option("--seed", gen.seed, "RNG seed")->required();
    toast_gen->add_option("--leaf-min", gen.policy.leaf_min, "Smallest leaf box side");
    toast_gen->add_option("--leaf-max", gen.policy.leaf_max, "Largest leaf box side");
    toast_gen->add_option("--max-children", gen.policy.max_children, "Boxes attempted per parent");
    toast_gen->add_option("--retry-cap", gen.policy.retry_cap, "Random draws per placement");
    toast_gen->add_option("--size-spread", gen.policy.size_spread_percent, "Percent of slack used by inner boxes");
    toast_gen->add_option("-o,--output", gen.out, "Output toast file")->required();
    toast_gen->callback([&] {
        action = [&] {
            const Torus domain(parse_sides(gen.sides));
            require(domain.dim() == gen.d, "-d " + std::to_string(gen.d) + " does not match sides " + gen.sides);
            const int r = gen.r < 0 ? default_separation(gen.d) : gen.r;
            const Toast t = generate(domain, r, gen.levels, gen.seed, gen.policy);
            io::write_toast(gen.out, t);
            out << json{{"pieces", t.size()}, {"r", r}, {"output", gen.out}}.dump() << "\n";
            return ok;
        };
    });

    std::string toast_file;
    auto* toast_validate = toast->add_subcommand("validate", "Check the toast conditions exhaustively");
    toast_validate->add_option("toast", toast_file, "Toast file")->required();
    toast_validate->callback([&] {
        action = [&] {
            const auto report = validate(io::read_toast(toast_file));
            out << toast_report_json(report).dump() << "\n";
            return report.ok ? ok : check_failed;
        };
    });

    // color build | verify
    auto* color = app.add_subcommand("color", "Build or verify (2^d-1)-polychromatic colourings");
    color->require_subcommand(1);
    struct {
        std::string toast, base, out, labeling;
        std::optional<int> R;
        std::optional<int> k;
    } col;
    auto* color_build = color->add_subcommand("build", "Colour a torus by induction over a toast");
    color_build->add_option("--toast", col.toast, "Toast file")->required();
    color_build->add_option("--base", col.base, "Surjective base cube labeling (JSON array)")->required();
    color_build->add_option("--R", col.R, "Thickening radius (default 2^{d+2}d)");
    color_build->add_option("-o,--output", col.out, "Output labeling file")->required();
    color_build->callback([&] {
        action = [&] {
            const Toast t = io::read_toast(col.toast);
            const CubeLabeling base = io::read_cube(col.base);
            const Labeling c = build_coloring(make_plan(t, base, col.R));
            io::write_labeling(col.out, c);
            out << json{{"k", c.k()}, {"output", col.out}, {"vertices", c.domain().size()}}.dump() << "\n";
            return ok;
        };
    });
    auto* color_verify = color->add_subcommand("verify", "Check polychromaticity (and the plan invariants when given the plan)");
    color_verify->add_option("labeling", col.labeling, "Labeling file")->required();
    color_verify->add_option("-k", col.k, "Colour count to require (default: the file's k)");
    auto* verify_toast = color_verify->add_option("--toast", col.toast, "Toast the labeling was built from");
    auto* verify_base = color_verify->add_option("--base", col.base, "Base cube labeling it was built from");
    verify_toast->needs(verify_base);
    verify_base->needs(verify_toast);
    color_verify->add_option("--R", col.R, "Thickening radius used for the build");
    color_verify->callback([&] {
        action = [&] {
            const Labeling c = io::read_labeling(col.labeling);
            const int k = col.k.value_or(c.k());
            const auto poly = is_polychromatic(c, k);
            json result{{"k", k}, {"polychromatic", poly.ok}};
            if (!poly.ok) {
                result["diagnostic"] = poly.diagnostic;
                if (poly.witness) result["witness"] = c.domain().coords(*poly.witness);
            }
            bool pass = poly.ok;
            if (!col.toast.empty()) {
                const auto plan = make_plan(io::read_toast(col.toast), io::read_cube(col.base), col.R);
                const auto report = verify_plan_invariants(plan, c);
                result["plan"] = plan_report_json(report, c.domain());
                pass = pass && report.ok();
            }
            out << result.dump() << "\n";
            return pass ? ok : check_failed;
        };
    });

    // connect-cubes
    std::string cube_a, cube_b;
    auto* connect_cmd = app.add_subcommand("connect-cubes", "Single-vertex path between two surjective cube labelings");
    connect_cmd->add_option("a", cube_a, "Source cube labeling (JSON array of 2^d colours)")->required();
    connect_cmd->add_option("b", cube_b, "Target cube labeling")->required();
    connect_cmd->callback([&] {
        action = [&] {
            const auto path = connect(io::read_cube(cube_a), io::read_cube(cube_b));
            out << io::path_to_json(path).dump() << "\n";
            return ok;
        };
    });

    // rigidity extract | assemble | report | dichotomy
    auto* rig = app.add_subcommand("rigidity", "Tools for 2^d-polychromatic colourings");
    rig->require_subcommand(1);
    struct {
        std::string input, out, sides, dump;
        int marker = 0;
        std::optional<int> direction;
    } rg;
    auto* rig_extract = rig->add_subcommand("extract", "Per-direction proper 2-colourings of a 2^d-polychromatic colouring");
    rig_extract->add_option("labeling", rg.input, "2^d-polychromatic labeling file")->required();
    rig_extract->add_option("--marker", rg.marker, "Tracked colour")->capture_default_str();
    rig_extract->add_option("--direction", rg.direction, "Extract only this direction (writes a labeling)");
    rig_extract->add_option("-o,--output", rg.out, "Output file (tuple, or labeling with --direction)")->required();
    rig_extract->callback([&] {
        action = [&] {
            const Labeling c = io::read_labeling(rg.input);
            require(rg.marker >= 0 && rg.marker < c.k(), "marker colour out of range");
            const auto marker = static_cast<Color>(rg.marker);
            if (rg.direction) {
                io::write_labeling(rg.out, extract_2_coloring(c, *rg.direction, marker));
            } else {
                io::write_text(rg.out, io::tuple_to_json(extract_tuple(c, marker)).dump() + "\n");
            }
            out << json{{"output", rg.out}}.dump() << "\n";
            return ok;
        };
    });
    auto* rig_assemble = rig->add_subcommand("assemble", "Product colouring of a (d-1)-fold invariant tuple");
    rig_assemble->add_option("tuple", rg.input, "Tuple file")->required();
    rig_assemble->add_option("-o,--output", rg.out, "Output labeling file")->required();
    rig_assemble->callback([&] {
        action = [&] {
            const auto tuple = io::tuple_from_json(io::parse(io::read_text(rg.input), rg.input));
            const Labeling c = assemble(tuple);
            io::write_labeling(rg.out, c);
            out << json{{"k", c.k()}, {"output", rg.out}}.dump() << "\n";
            return ok;
        };
    });
    auto* rig_report = rig->add_subcommand("report", "Orthogonal-invariance matrix of a tuple");
    rig_report->add_option("tuple", rg.input, "Tuple file")->required();
    rig_report->callback([&] {
        action = [&] {
            const auto tuple = io::tuple_from_json(io::parse(io::read_text(rg.input), rg.input));
            out << invariance_json(invariance_report(tuple)).dump() << "\n";
            return ok;
        };
    });
    auto* rig_dichotomy = rig->add_subcommand("dichotomy", "Exhaustive e0^2 / e1^2 invariance census of 4-polychromatic colourings");
    rig_dichotomy->add_option("--sides", rg.sides, "Torus sides: 4x4, 4x6, 6x4 or 6x6")->required();
    rig_dichotomy->add_option("--dump", rg.dump, "Also write every enumerated labeling to this file");
    rig_dichotomy->callback([&] {
        action = [&] {
            const Torus domain(parse_sides(rg.sides));
            check_enumeration_size(domain, 4);
            const auto report = verify_dichotomy_d2(domain);
            json result{{"sides", domain.sides()},
                        {"total", report.total},
                        {"up_to_color_permutation", report.canonical_total},
                        {"e0_squared_only", report.e0_only},
                        {"e1_squared_only", report.e1_only},
                        {"both", report.both},
                        {"violations", report.violations}};
            if (report.counterexample) result["counterexample"] = report.counterexample->data();
            if (!rg.dump.empty()) {
                json all = json::array();
                enumerate_polychromatic(domain, 4, [&](const Labeling& c) {
                    all.push_back(c.data());
                    return true;
                });
                io::write_text(rg.dump, json{{"format_version", io::kFormatVersion}, {"d", 2}, {"sides", domain.sides()},
                                             {"k", 4}, {"labelings", all}}
                                                .dump() +
                                            "\n");
            }
            out << result.dump() << "\n";
            return report.ok() ? ok : check_failed;
        };
    });

    // render
    struct {
        std::string input, format = "ascii", out;
    } rd;
    auto* render = app.add_subcommand("render", "Draw a d=2 labeling as ASCII or SVG");
    render->add_option("labeling", rd.input, "Labeling file")->required();
    render->add_option("--format", rd.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
    render->add_option("-o,--output", rd.out, "Output file (default stdout)");
    render->callback([&] {
        action = [&] {
            const Labeling c = io::read_labeling(rd.input);
            emit(out, rd.out, rd.format == "svg" ? render_svg(c) : render_ascii(c));
            return ok;
        };
    });

    std::vector<std::string> argv_storage{"polychrome"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what(), usage);
        return usage;
    }

    try {
        apply_thread_env();
        return action ? action() : usage;
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        report_error(err, to_string(e.kind()), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what(), precondition);
        return precondition;
    }
}

}  // namespace polychrome::cli
