#include "gallery/cli.h"

#include "gallery/oracle.h"
#include "gallery/polygon_io.h"
#include "gallery/structured.h"
#include "gallery/svg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gallery::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << content;
}

struct SolveArgs {
    std::string polygon;
    int k = -1;
    std::string variant = "vv";
    bool min_k = false;
    bool oracle = false;
    std::string svg;
    std::string dump_dir;
    std::string report = "text";
    int threads = 1;
    bool progress = false;
};

Json guard_json(const Workspace& w, std::size_t g) {
    Json j;
    int src = w.source_vertex[g];
    j["vertex"] = src < 0 ? Json(nullptr) : Json(src + 1);
    j["x"] = to_string(w.polygon.vertex(g).x);
    j["y"] = to_string(w.polygon.vertex(g).y);
    return j;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    auto variant = parse_variant(a.variant);
    if (!variant) throw InputError("unknown variant '" + a.variant + "' (expected vv, vb or bv)");
    if (!a.min_k && a.k < 0) throw InputError("--k is required unless --min-k is given");
    geom::Polygon polygon = geom::load_polygon(a.polygon);

    const auto start = std::chrono::steady_clock::now();
    Workspace w = build_workspace(polygon, *variant, a.threads);

    std::vector<int> budgets;
    if (a.min_k) {
        int top = std::max<int>(1, static_cast<int>(polygon.reflex_count()));
        for (int k = 0; k <= top; ++k) budgets.push_back(k);
    } else {
        budgets.push_back(a.k);
    }

    if (!a.dump_dir.empty()) std::filesystem::create_directories(a.dump_dir);
    SolveResult result;
    int k_used = budgets.front();
    std::uint64_t tried = 0;
    for (int k : budgets) {
        SolveOptions opts;
        opts.threads = a.threads;
        if (!a.dump_dir.empty()) {
            opts.on_instance = [&, k](std::uint64_t ordinal, const csp::CspInstance& inst) {
                write_file((std::filesystem::path(a.dump_dir) /
                            ("k" + std::to_string(k) + "-guess" + std::to_string(ordinal) + ".csp"))
                               .string(),
                           csp::to_text(inst));
            };
        }
        if (a.progress) {
            opts.progress = [&err, k](std::uint64_t done, std::uint64_t) {
                if (done % 1000 == 0) err << "k=" << k << ": " << done << " guesses\n";
            };
        }
        result = solve(w, k, opts);
        tried += result.guesses_tried;
        k_used = k;

        if (a.oracle) {
            try {
                auto truth = oracle::brute_force(polygon, k, *variant);
                if (truth.yes != result.yes) {
                    err << "oracle disagrees at k=" << k << ": solver says " << (result.yes ? "Yes" : "No")
                        << ", exhaustive search says " << (truth.yes ? "Yes" : "No") << '\n';
                    return kOracleDisagrees;
                }
            } catch (const oracle::TooLarge& e) {
                err << "oracle skipped: " << e.what() << '\n';
            }
        }
        if (result.yes) break;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::vector<geom::Point> guard_points;
    if (result.yes)
        for (std::size_t g : result.solution->guards) guard_points.push_back(w.polygon.vertex(g));

    if (a.report == "json") {
        Json j;
        j["answer"] = result.yes ? "Yes" : "No";
        j["k"] = k_used;
        j["variant"] = short_name(*variant);
        if (result.yes) {
            j["guards"] = Json::array();
            for (std::size_t g : result.solution->guards) j["guards"].push_back(guard_json(w, g));
        } else {
            j["guards"] = nullptr;
        }
        j["guessesTried"] = tried;
        j["elapsedMs"] = elapsed;
        out << j.dump(2) << '\n';
    } else {
        out << "answer: " << (result.yes ? "Yes" : "No") << '\n';
        out << "k: " << k_used << '\n';
        out << "variant: " << short_name(*variant) << '\n';
        if (result.yes) {
            out << "guards:";
            for (std::size_t g : result.solution->guards) {
                int src = w.source_vertex[g];
                out << ' ' << (src < 0 ? std::string("-") : std::to_string(src + 1)) << " ("
                    << to_string(w.polygon.vertex(g).x) << ',' << to_string(w.polygon.vertex(g).y) << ')';
            }
            out << '\n';
        }
        out << "guessesTried: " << tried << '\n';
        out << "elapsedMs: " << elapsed << '\n';
    }

    if (!a.svg.empty()) write_file(a.svg, render_svg(polygon, guard_points));
    return result.yes ? kYes : kNo;
}

int cmd_csp(const std::string& path, const std::string& report, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    csp::CspInstance inst = csp::read_csp(in);
    auto alpha = csp::solve_csp(inst);
    if (report == "json") {
        Json j;
        j["answer"] = alpha ? "Satisfiable" : "Unsatisfiable";
        j["assignment"] = alpha ? Json(*alpha) : Json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << (alpha ? "Satisfiable" : "Unsatisfiable") << '\n';
        if (alpha)
            for (std::size_t x = 0; x < alpha->size(); ++x) out << 'x' << x << " = " << (*alpha)[x] << '\n';
    }
    return alpha ? kYes : kNo;
}

int cmd_gen(int n, std::uint64_t seed, int reflex, const std::string& path, std::ostream& out) {
    geom::Polygon p;
    try {
        p = oracle::random_polygon({n, reflex, seed});
    } catch (const oracle::GenerationFailed& e) {
        throw InputError(e.what());
    }
    std::ostringstream text;
    text << "# n=" << p.size() << " seed=" << seed << '\n';
    geom::write_polygon(text, p.vertices());
    write_file(path, text.str());
    out << "r " << p.reflex_count() << '\n';
    return kYes;
}

std::vector<std::size_t> parse_guard_list(const std::string& text, std::size_t n) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        long v = -1;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v < 1 || static_cast<std::size_t>(v) > n)
            throw InputError("bad guard index '" + item + "'");
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

int cmd_viz(const std::string& path, const std::string& guards, bool visibility, const std::string& svg_path) {
    geom::Polygon polygon = geom::load_polygon(path);
    std::vector<geom::Point> points;
    for (std::size_t g : parse_guard_list(guards, polygon.size())) points.push_back(polygon.vertex(g));
    SvgOptions opts;
    opts.visibility = visibility;
    write_file(svg_path, render_svg(polygon, points, opts));
    return kYes;
}

/// GALLERY_THREADS when set, else 1. A malformed value is an input error rather than silently ignored.
int threads_from_env() {
    const char* text = std::getenv("GALLERY_THREADS");
    if (text == nullptr || *text == '\0') return 1;
    int value = 0;
    const char* end = text + std::strlen(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end || value < 1)
        throw InputError(std::string("GALLERY_THREADS must be a positive integer, got '") + text + "'");
    return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact art gallery solver parameterized by the number of reflex vertices", "gallery"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide whether k guards suffice");
    solve->add_option("--polygon", solve_args.polygon, "Polygon file")->required();
    solve->add_option("--k", solve_args.k, "Guard budget")->check(CLI::NonNegativeNumber);
    solve->add_option("--variant", solve_args.variant, "vv, vb or bv")->check(CLI::IsMember({"vv", "vb", "bv"}));
    solve->add_flag("--min-k", solve_args.min_k, "Find the smallest sufficient budget");
    solve->add_flag("--oracle", solve_args.oracle, "Cross-check with exhaustive search");
    solve->add_option("--svg", solve_args.svg, "Write a figure of the answer");
    solve->add_option("--dump-csp", solve_args.dump_dir, "Write every built constraint instance here");
    solve->add_option("--report", solve_args.report, "text or json")->check(CLI::IsMember({"text", "json"}));
    auto* threads_opt = solve->add_option("--threads", solve_args.threads, "Worker threads (default: GALLERY_THREADS, else 1)")
                            ->check(CLI::PositiveNumber);
    solve->add_flag("--progress", solve_args.progress, "Print guess counts to stderr");

    std::string csp_path, csp_report = "text";
    auto* csp_cmd = app.add_subcommand("csp", "Solve a monotone 2-CSP instance file");
    csp_cmd->add_option("--instance", csp_path, "Instance file")->required();
    csp_cmd->add_option("--report", csp_report, "text or json")->check(CLI::IsMember({"text", "json"}));

    int gen_n = 0, gen_reflex = -1;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write a random simple polygon");
    gen->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::Range(3, 100000));
    gen->add_option("--seed", gen_seed, "Random seed")->required();
    gen->add_option("--reflex", gen_reflex, "Desired reflex count (best effort)");
    gen->add_option("--out", gen_out, "Output file")->required();

    std::string viz_polygon, viz_guards, viz_out;
    bool viz_visibility = false;
    auto* viz = app.add_subcommand("viz", "Render a polygon and guards as SVG");
    viz->add_option("--polygon", viz_polygon, "Polygon file")->required();
    viz->add_option("--guards", viz_guards, "Comma-separated 1-based vertex indices");
    viz->add_flag("--visibility", viz_visibility, "Draw what each guard sees");
    viz->add_option("--out", viz_out, "SVG file")->required();

    std::vector<std::string> argv_store{"gallery"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (solve->parsed()) {
            if (threads_opt->count() == 0) solve_args.threads = threads_from_env();
            return cmd_solve(solve_args, out, err);
        }
        if (csp_cmd->parsed()) return cmd_csp(csp_path, csp_report, out);
        if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_reflex, gen_out, out);
        if (viz->parsed()) return cmd_viz(viz_polygon, viz_guards, viz_visibility, viz_out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const geom::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const geom::GeometryError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const csp::InvalidInstance& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace gallery::cli
