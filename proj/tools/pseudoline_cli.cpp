// Command-line front end: generate, validate, inspect, color, solve exactly,
// search and render wiring diagrams.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pseudoline/pseudoline.hpp>

namespace pl = pseudoline;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kInvalidArrangement = 3,
    kVerificationFailed = 4,
    kCapExceeded = 5,
};

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PSEUDOLINE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else pl::write_text_file(path, text);
}

pl::WiringDiagram load_diagram(const std::string& path) {
    const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                         : pl::read_text_file(path);
    pl::WiringDiagram d = pl::parse_wd(text);
    pl::require_valid(d);
    return d;
}

// "N:a-b,c-d" with vertices numbered from 1.
pl::Graph parse_graph(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw pl::ParseError("graph: expected N:a-b,...");
    pl::Graph g;
    try {
        g.vertex_count = std::stoi(spec.substr(0, colon));
        std::istringstream in(spec.substr(colon + 1));
        for (std::string item; std::getline(in, item, ',');) {
            if (item.empty()) continue;
            const auto dash = item.find('-');
            if (dash == std::string::npos) throw pl::ParseError("graph: bad edge '" + item + "'");
            g.edges.emplace_back(std::stoi(item.substr(0, dash)) - 1, std::stoi(item.substr(dash + 1)) - 1);
        }
    } catch (const std::logic_error&) {
        throw pl::ParseError("graph: cannot parse '" + spec + "'");
    }
    return g;
}

int need(const std::vector<int>& params, std::size_t count, const std::string& kind) {
    if (params.size() != count)
        throw CliError(kFailure, "generate " + kind + ": expected " + std::to_string(count) + " parameter(s)");
    return params[0];
}

int run_generate(const std::string& kind, const std::vector<int>& params, std::uint64_t seed,
                 const std::string& graph, bool canonical, const std::string& out) {
    pl::WiringDiagram d;
    if (kind == "simple") d = pl::gen_random_simple(need(params, 1, kind), seed);
    else if (kind == "random") d = pl::gen_random(need(params, 1, kind), seed);
    else if (kind == "staircase") d = pl::gen_staircase(need(params, 1, kind));
    else if (kind == "trivial") d = pl::gen_trivial(need(params, 1, kind));
    else if (kind == "polygon") d = pl::construct_polygon_cell(need(params, 1, kind));
    else if (kind == "twisted-bundles") {
        need(params, 2, kind);
        d = pl::construct_twisted_bundles(params[0], params[1]);
    } else if (kind == "gap") d = pl::construct_gap(need(params, 1, kind));
    else if (kind == "efl-reduction") {
        if (graph.empty()) throw CliError(kFailure, "generate efl-reduction needs --graph N:a-b,...");
        d = pl::construct_efl_reduction(parse_graph(graph));
    } else if (kind == "enumerate") {
        const int n = need(params, 1, kind);
        if (out.empty() || out == "-") {
            pl::for_each_diagram(
                n,
                [](const pl::WiringDiagram& x) {
                    std::cout << pl::to_inline(x) << "\n";
                    return true;
                },
                canonical);
            return kOk;
        }
        std::filesystem::create_directories(out);
        std::size_t index = 0;
        pl::for_each_diagram(
            n,
            [&](const pl::WiringDiagram& x) {
                char name[64];
                std::snprintf(name, sizeof name, "n%d_%06zu.wd", n, index++);
                pl::write_text_file((std::filesystem::path(out) / name).string(), pl::to_wd(x));
                return true;
            },
            canonical);
        std::cerr << index << " diagrams written to " << out << "\n";
        return kOk;
    } else {
        throw CliError(kFailure, "unknown generator '" + kind + "'");
    }
    emit(out, pl::to_wd(d));
    return kOk;
}

int run_validate(const std::string& path) {
    const std::string text = pl::read_text_file(path);
    const pl::WiringDiagram d = pl::parse_wd(text);
    const pl::ValidationReport r = pl::validate(d);
    if (r.valid) {
        std::cout << "valid: " << d.wire_count() << " wires, " << d.event_count() << " crossings\n";
        return kOk;
    }
    std::cout << "invalid: " << r.violations.size() << " wire pair(s) not crossing exactly once\n";
    for (const auto& v : r.violations) {
        std::cout << "  wires " << v.first << "," << v.second << " cross " << v.events.size() << " time(s)";
        if (!v.events.empty()) {
            std::cout << " at events";
            for (auto e : v.events) std::cout << " " << e;
        }
        std::cout << "\n";
    }
    return kInvalidArrangement;
}

int run_stats(const std::string& path) {
    const pl::WiringDiagram d = load_diagram(path);
    const pl::CellComplex cx = pl::build_cells(d);
    std::map<int, int> degrees;
    for (const auto& c : pl::crossings(d)) ++degrees[c.degree()];
    std::size_t max_boundary = 0;
    for (const auto& b : cx.boundary) max_boundary = std::max(max_boundary, b.size());
    std::cout << "wires: " << d.wire_count() << "\n"
              << "crossings: " << d.event_count() << "\n"
              << "simple: " << (pl::is_simple(d) ? "yes" : "no") << "\n"
              << "trivial: " << (pl::is_trivial(d) ? "yes" : "no") << "\n"
              << "mx: " << pl::mx(d) << "\n"
              << "ordinary points: " << pl::ordinary_points(d).size() << "\n"
              << "cells: " << cx.cells.size() << "\n"
              << "bounded cells: " << cx.bounded_count() << "\n"
              << "max cell boundary: " << max_boundary << "\n"
              << "degree histogram:";
    for (auto [deg, count] : degrees) std::cout << " " << deg << "x" << count;
    std::cout << "\n";
    return kOk;
}

struct ColorOptions {
    std::string mode;
    std::uint64_t seed = 0;
    int l = 3;
    int r = 0;
    std::optional<int> k;
    std::optional<int> budget;
    std::string out;
};

int run_color(const std::string& path, const ColorOptions& o) {
    const pl::WiringDiagram d = load_diagram(path);
    pl::Coloring col;
    pl::Mode check;
    if (o.mode == "cell") {
        col = pl::greedy_cell_coloring(d);
        check = pl::Mode::cell();
    } else if (o.mode == "line") {
        col = pl::line_respecting_coloring(d, o.budget);
        check = pl::Mode::line();
    } else if (o.mode == "pl") {
        col = pl::greedy_pseudoline_coloring(d);
        check = pl::Mode::pl();
    } else if (o.mode == "deg4") {
        const auto res = pl::degree_ge4_coloring(d, o.seed);
        col = res.coloring;
        check = pl::Mode::pl_degree_at_least(4);
        std::cout << "bundles: " << res.bundles.size() << "\n";
    } else if (o.mode == "lll") {
        col = pl::lll_coloring(d, o.l, o.r, {o.k, o.seed, std::nullopt});
        check = pl::Mode::pl_degree_at_least(o.l);
    } else {
        throw CliError(kFailure, "unknown color mode '" + o.mode + "'");
    }
    auto violations = pl::verify_coloring(d, col, check);
    if (o.mode == "lll")
        std::erase_if(violations, [&](const pl::Violation& v) {
            return d.event(v.first).width > o.l + o.r;
        });
    std::cout << "colors: " << col.color_count() << "\n";
    std::cout << "verified: " << (violations.empty() ? "yes" : "no") << "\n";
    if (!o.out.empty()) pl::write_text_file(o.out, pl::to_coloring_text(col));
    return violations.empty() ? kOk : kVerificationFailed;
}

int run_exact(const std::string& path, const std::string& mode_name, std::optional<int> cap, const std::string& out) {
    const pl::WiringDiagram d = load_diagram(path);
    const pl::Mode mode = pl::parse_mode(mode_name);
    const auto r = pl::min_colors(d, mode, cap);
    if (r.exceeds_cap()) {
        std::cout << "minimum: exceeds cap " << r.cap << "\n";
        return kCapExceeded;
    }
    std::cout << "minimum: " << *r.minimum << "\n";
    if (!pl::verify_coloring(d, *r.witness, mode).empty()) {
        std::cout << "verified: no\n";
        return kVerificationFailed;
    }
    std::cout << "verified: yes\n";
    if (!out.empty()) pl::write_text_file(out, pl::to_coloring_text(*r.witness));
    return kOk;
}

int run_search(const std::string& kind, int n, std::optional<int> threshold, unsigned workers, std::size_t samples,
               std::uint64_t seed, std::size_t start, const std::string& out) {
    pl::SearchReport report;
    if (kind == "simultaneous") report = pl::search_simultaneous_counterexample(n, threshold.value_or(n + 1), workers, start);
    else if (kind == "mx-gap") report = pl::mx_gap_scan(n, samples, seed, workers);
    else throw CliError(kFailure, "unknown search '" + kind + "'");
    std::cerr << "examined " << report.examined << " diagrams, " << report.witnesses.size() << " witness(es) in "
              << report.elapsed_seconds << " s\n";
    emit(out, pl::format_report(report));
    return kOk;
}

int run_render(const std::string& path, const std::string& coloring_path, const std::string& out) {
    const pl::WiringDiagram d = load_diagram(path);
    std::optional<pl::Coloring> col;
    if (!coloring_path.empty()) col = pl::parse_coloring(pl::read_text_file(coloring_path));
    emit(out, pl::render_svg(d, col));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudoline arrangements as wiring diagrams: constructions, colorings and exact checks"};
    app.require_subcommand(1);

    std::string out;
    std::uint64_t seed = default_seed();

    auto* gen = app.add_subcommand("generate", "Write a .wd diagram");
    std::string gen_kind;
    std::vector<int> gen_params;
    std::string graph;
    bool canonical = false;
    gen->add_option("kind", gen_kind,
                    "simple | random | staircase | trivial | polygon | twisted-bundles | gap | efl-reduction | "
                    "enumerate")
        ->required();
    gen->add_option("params", gen_params, "Integer parameters of the generator");
    gen->add_option("--seed", seed, "Random seed (default: $PSEUDOLINE_SEED or 0)");
    gen->add_option("--graph", graph, "Graph for efl-reduction, N:a-b,c-d with vertices from 1");
    gen->add_flag("--canonical", canonical, "enumerate: only canonical representatives");
    gen->add_option("-o,--out", out, "Output file (enumerate: directory); default stdout");

    auto* val = app.add_subcommand("validate", "Check that every wire pair crosses exactly once");
    std::string in_path;
    val->add_option("file", in_path)->required();

    auto* stats = app.add_subcommand("stats", "Print derived statistics");
    stats->add_option("file", in_path)->required();

    auto* color = app.add_subcommand("color", "Color with one of the constructive algorithms and self-verify");
    ColorOptions copt;
    color->add_option("file", in_path)->required();
    color->add_option("--mode", copt.mode, "cell | line | pl | deg4 | lll")
        ->required()
        ->check(CLI::IsMember({"cell", "line", "pl", "deg4", "lll"}));
    color->add_option("--seed", seed);
    color->add_option("--l", copt.l, "lll: smallest constrained degree (>= 3)");
    color->add_option("--r", copt.r, "lll: constrained degrees are l..l+r");
    color->add_option("--k", copt.k, "lll: palette size (default: the local-lemma budget)");
    color->add_option("--budget", copt.budget, "line: color budget (default n)");
    color->add_option("-o,--out", copt.out, "Write the coloring here");

    auto* exact = app.add_subcommand("exact", "Exact minimum number of colors");
    std::string exact_mode;
    std::optional<int> cap;
    exact->add_option("file", in_path)->required();
    exact->add_option("--mode", exact_mode, "cell | line | pl | simultaneous")
        ->required()
        ->check(CLI::IsMember({"cell", "line", "pl", "simultaneous"}));
    exact->add_option("--cap", cap, "Largest color count to try");
    exact->add_option("-o,--out", out, "Write the optimal coloring here");

    auto* search = app.add_subcommand("search", "Exhaustive searches over all diagrams on n wires");
    std::string search_kind;
    int search_n = 0;
    std::optional<int> threshold;
    unsigned workers = 0;
    std::size_t samples = 200;
    std::size_t start = 0;
    search->add_option("kind", search_kind, "simultaneous | mx-gap")
        ->required()
        ->check(CLI::IsMember({"simultaneous", "mx-gap"}));
    search->add_option("n,--n", search_n, "Number of wires")->required();
    search->add_option("--threshold", threshold, "simultaneous: search cap (default n + 1)");
    search->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");
    search->add_option("--samples", samples, "mx-gap with n > 5: random diagrams to sample");
    search->add_option("--seed", seed);
    search->add_option("--start", start, "simultaneous: resume from this enumeration index");
    search->add_option("-o,--out", out, "Report file; default stdout");

    auto* render = app.add_subcommand("render", "Draw the diagram as SVG");
    std::string coloring_path;
    render->add_option("file", in_path)->required();
    render->add_option("--coloring", coloring_path, "Coloring file to apply");
    render->add_option("-o,--out", out, "SVG file; default stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return run_generate(gen_kind, gen_params, seed, graph, canonical, out);
        if (*val) return run_validate(in_path);
        if (*stats) return run_stats(in_path);
        if (*color) {
            copt.seed = seed;
            return run_color(in_path, copt);
        }
        if (*exact) return run_exact(in_path, exact_mode, cap, out);
        if (*search) return run_search(search_kind, search_n, threshold, workers, samples, seed, start, out);
        if (*render) return run_render(in_path, coloring_path, out);
    } catch (const pl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const pl::InvalidDiagram& e) {
        std::cerr << e.what() << "\n";
        return kInvalidArrangement;
    } catch (const CliError& e) {
        std::cerr << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
