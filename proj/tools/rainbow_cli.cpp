// Command-line front end: gen, stats, colour, verify, exact, bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 precondition or capacity error, 4 internal error. Errors go to stderr
// as "rainbow: error[<kind>]: <message>".

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/rainbow.hpp"

namespace fs = std::filesystem;
using namespace rainbow;

namespace {

enum ExitCode { kOk = 0, kNotRainbow = 1, kUsage = 2, kPrecondition = 3, kInternal = 4 };

struct CliFailure {
    int code;
    std::string kind;
    std::string message;
};

[[noreturn]] void fail(int code, std::string kind, std::string message) {
    throw CliFailure{code, std::move(kind), std::move(message)};
}

ParsedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(kUsage, "io", "cannot open graph file '" + path + "'");
    auto parsed = parse_edge_list(in);
    if (parsed.duplicates_removed > 0) {
        std::cerr << "rainbow: warning: " << path << ": merged " << parsed.duplicates_removed << " duplicate edge(s)\n";
    }
    return parsed;
}

/// Runs `write` against the named file, or stdout for "" and "-".
template <class Fn>
void with_output(const std::string& path, Fn&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) fail(kUsage, "io", "cannot write '" + path + "'");
    write(out);
}

std::string format_ratio(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
    return std::string(buf, res.ptr);
}

ColouringResult run_mode(const Graph& g, const std::string& mode, const ColourOptions& opts) {
    if (mode == "radius") return colour_bridgeless_radius(g, opts);
    if (mode == "diameter") return colour_bridgeless_diameter(g, opts);
    if (mode == "general-radius") return colour_general(g, PipelineMode::general_radius, opts);
    if (mode == "general-diameter") return colour_general(g, PipelineMode::general_diameter, opts);
    fail(kUsage, "usage", "unknown mode '" + mode + "'");
}

/// auto: radius up to 10^4 vertices, diameter beyond; the general variant
/// whenever the graph has bridges.
std::string resolve_auto_mode(const Graph& g) {
    const std::string base = g.vertex_count() <= 10'000 ? "radius" : "diameter";
    if (g.vertex_count() <= 1) return base;
    require_connected(g, "colour");
    return find_bridges(g).empty() ? base : "general-" + base;
}

// ---------------------------------------------------------------- bench --

struct BenchItem {
    std::string id;
    std::function<Graph()> load;
};

struct BenchRow {
    std::string id;
    std::string line;
};

FamilySpec parse_spec_tokens(const std::vector<std::string>& tokens, std::size_t line_no) {
    if (tokens.size() < 2) fail(kUsage, "parse", "spec line " + std::to_string(line_no) + ": need 'id family key=value...'");
    FamilySpec spec;
    spec.family = tokens[1];
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos) fail(kUsage, "parse", "spec line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = tokens[i].substr(0, eq);
        const std::string value = tokens[i].substr(eq + 1);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
            fail(kUsage, "parse", "spec line " + std::to_string(line_no) + ": bad integer '" + value + "'");
        }
        if (key == "r") spec.r = static_cast<std::int32_t>(v);
        else if (key == "zeta") spec.zeta = static_cast<std::int32_t>(v);
        else if (key == "kappa") spec.kappa = static_cast<std::int32_t>(v);
        else if (key == "n") spec.n = static_cast<std::int32_t>(v);
        else if (key == "m") spec.m = v;
        else if (key == "seed") spec.seed = static_cast<std::uint64_t>(v);
        else fail(kUsage, "parse", "spec line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    return spec;
}

std::vector<BenchItem> collect_bench_items(const std::string& input) {
    std::vector<BenchItem> items;
    if (fs::is_directory(input)) {
        for (const auto& entry : fs::directory_iterator(input)) {
            if (!entry.is_regular_file()) continue;
            const auto ext = entry.path().extension().string();
            if (ext != ".txt" && ext != ".edges" && ext != ".el") continue;
            const std::string path = entry.path().string();
            items.push_back({entry.path().stem().string(), [path] { return load_graph(path).graph; }});
        }
    } else {
        std::ifstream in(input);
        if (!in) fail(kUsage, "io", "cannot open bench input '" + input + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            for (std::string t; ss >> t;) tokens.push_back(t);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            const FamilySpec spec = parse_spec_tokens(tokens, line_no);
            items.push_back({tokens[0], [spec] { return generate(spec); }});
        }
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return items;
}

BenchRow bench_one(const BenchItem& item) {
    using clock = std::chrono::steady_clock;
    const Graph g = item.load();
    const auto metrics = radius_diameter_center(g);
    const auto b = static_cast<std::int32_t>(find_bridges(g).count());
    auto timed = [&](PipelineMode mode) {
        const auto t0 = clock::now();
        auto res = colour_general(g, mode);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        return std::pair{res.report, ms};
    };
    const auto [rad, ms_rad] = timed(PipelineMode::general_radius);
    const auto [dia, ms_dia] = timed(PipelineMode::general_diameter);
    const std::int32_t lower = g.edge_count() == 0 ? 0 : std::max({metrics.diameter, b, 1});
    std::ostringstream row;
    row << item.id << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << metrics.radius << ','
        << metrics.diameter << ',' << b << ',' << (rad.zeta ? std::to_string(*rad.zeta) : "fallback") << ','
        << rad.colours_used << ',' << dia.colours_used << ',' << lower << ','
        << (lower == 0 ? std::string("1.000") : format_ratio(static_cast<double>(rad.colours_used) / lower)) << ','
        << ms_rad << ',' << ms_dia;
    return {item.id, row.str()};
}

int cmd_bench(const std::string& input, const std::string& out_path, unsigned jobs) {
    const auto items = collect_bench_items(input);
    std::vector<BenchRow> rows(items.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::optional<CliFailure> first_error;
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                rows[i] = bench_one(items[i]);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = CliFailure{kPrecondition, "bench", items[i].id + ": " + e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (first_error) throw *first_error;

    with_output(out_path, [&](std::ostream& out) {
        out << "graph_id,n,m,r,d,b,zeta_bound,colours_radius,colours_diameter,lower_bound,ratio,ms_radius,ms_diameter\n";
        for (const auto& row : rows) out << row.line << '\n';
    });
    return kOk;
}

// ------------------------------------------------------------- commands --

int cmd_stats(const std::string& path, bool iso, bool chord, bool json) {
    const Graph g = load_graph(path).graph;
    nlohmann::ordered_json report{{"schema", kReportSchema}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
    const bool connected = is_connected(g);
    report["connected"] = connected;
    if (connected && g.vertex_count() > 0) {
        const auto metrics = radius_diameter_center(g);
        const auto bridges = find_bridges(g);
        report["r"] = metrics.radius;
        report["d"] = metrics.diameter;
        report["center"] = metrics.center;
        report["b"] = bridges.count();
        if (iso) {
            if (!bridges.empty() || g.vertex_count() < 3) {
                report["zeta"] = nullptr;
            } else if (g.vertex_count() <= IsoOptions{}.exact_cap) {
                report["zeta"] = largest_isometric_cycle(g);
            } else {
                const auto est = estimate_isometric_cycle(g);
                report["zeta"] = nullptr;
                report["zeta_lower"] = est.lower;
                report["zeta_upper"] = est.upper;
            }
        }
    }
    if (chord) report["chordality"] = chordality(g);
    if (json) {
        std::cout << report.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : report.items()) {
            if (key == "schema") continue;
            std::cout << key << ' ' << value.dump() << '\n';
        }
    }
    return kOk;
}

int cmd_colour(const std::string& path, std::string mode, bool verify, const std::string& out_path,
               const std::string& report_path) {
    const Graph g = load_graph(path).graph;
    const bool automatic = mode == "auto";
    if (automatic) mode = resolve_auto_mode(g);
    ColourOptions opts;
    opts.verify = verify;
    opts.verify_options = verify_options_from_env();
    const auto result = run_mode(g, mode, opts);
    with_output(out_path, [&](std::ostream& out) { write_colouring(out, g, result.colouring); });
    auto json = report_to_json(result.report);
    json["auto_mode"] = automatic;
    with_output(report_path, [&](std::ostream& out) { out << json.dump(2) << '\n'; });
    if (result.report.verified && !*result.report.verified) {
        std::cerr << "rainbow: error[verify]: produced colouring is not rainbow connected\n";
        return kNotRainbow;
    }
    return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& colouring_path) {
    const Graph g = load_graph(graph_path).graph;
    std::ifstream in(colouring_path);
    if (!in) fail(kUsage, "io", "cannot open colouring file '" + colouring_path + "'");
    const EdgeColouring c = parse_colouring(in, g);
    const auto result = verify_rainbow_connected(g, c, verify_options_from_env());
    if (result.rainbow_connected) {
        std::cout << "RAINBOW CONNECTED\n";
        return kOk;
    }
    std::cout << "NOT RAINBOW CONNECTED " << result.witness_failure->first << ' ' << result.witness_failure->second
              << '\n';
    return kNotRainbow;
}

int cmd_exact(const std::string& path, std::optional<std::int32_t> max_edges, const std::string& out_path) {
    const Graph g = load_graph(path).graph;
    ExactOptions opts;
    if (max_edges) opts.max_edges = *max_edges;
    const auto result = exact_rc(g, opts);
    std::cout << result.rc << '\n';
    if (!out_path.empty()) {
        with_output(out_path, [&](std::ostream& out) { write_colouring(out, g, result.witness); });
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow colouring of graphs by dominating-set growth"};
    app.require_subcommand(1);

    FamilySpec spec;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    gen->add_option("family", spec.family,
                    "h | theorem-tight | x | example-tight | path | cycle | star | complete | "
                    "random-bridgeless | random-connected | random-tree")
        ->required();
    gen->add_option("--r", spec.r, "radius parameter");
    gen->add_option("--zeta", spec.zeta, "isometric cycle size (h, theorem-tight)");
    gen->add_option("--kappa", spec.kappa, "connectivity (x, example-tight)");
    gen->add_option("--n", spec.n, "vertex count (classic and random families)");
    gen->add_option("--m", spec.m, "edge count (random families)");
    gen->add_option("--seed", spec.seed, "random seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    std::string graph_path;
    bool want_iso = false, want_chord = false, want_json = false;
    auto* stats = app.add_subcommand("stats", "Report n, m, radius, diameter, bridges");
    stats->add_option("graph", graph_path)->required();
    stats->add_flag("--iso", want_iso, "compute the largest isometric cycle");
    stats->add_flag("--chordality", want_chord, "compute the longest induced cycle");
    stats->add_flag("--json", want_json, "JSON output");

    std::string mode = "auto", colour_out, report_out;
    bool want_verify = false;
    auto* colour = app.add_subcommand("colour", "Rainbow-colour a graph");
    colour->alias("color");
    colour->add_option("graph", graph_path)->required();
    colour->add_option("--mode", mode, "radius | diameter | general-radius | general-diameter | auto")
        ->check(CLI::IsMember({"radius", "diameter", "general-radius", "general-diameter", "auto"}));
    colour->add_flag("--verify", want_verify, "verify rainbow connectivity of the result");
    colour->add_option("--out", colour_out, "colouring output path (default stdout)");
    colour->add_option("--report", report_out, "JSON report path (default stdout)");

    std::string colouring_path;
    auto* verify = app.add_subcommand("verify", "Check a colouring for rainbow connectivity");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("colouring", colouring_path)->required();

    std::optional<std::int32_t> max_edges;
    std::string witness_out;
    auto* exact = app.add_subcommand("exact", "Exact rainbow connection number of a small graph");
    exact->add_option("graph", graph_path)->required();
    exact->add_option("--max-edges", max_edges, "override the edge-count cap");
    exact->add_option("--out", witness_out, "write the optimal colouring here");

    std::string bench_in, bench_out;
    unsigned jobs = 1;
    auto* bench = app.add_subcommand("bench", "Colour a corpus and write a CSV summary");
    bench->add_option("input", bench_in, "directory of edge lists, or a spec file of 'id family key=value...'")
        ->required();
    bench->add_option("--out", bench_out, "CSV output path (default stdout)");
    bench->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            const Graph g = generate(spec);
            with_output(gen_out, [&](std::ostream& out) { write_edge_list(out, g); });
            return kOk;
        }
        if (*stats) return cmd_stats(graph_path, want_iso, want_chord, want_json);
        if (*colour) return cmd_colour(graph_path, mode, want_verify, colour_out, report_out);
        if (*verify) return cmd_verify(graph_path, colouring_path);
        if (*exact) return cmd_exact(graph_path, max_edges, witness_out);
        if (*bench) return cmd_bench(bench_in, bench_out, jobs);
    } catch (const CliFailure& f) {
        std::cerr << "rainbow: error[" << f.kind << "]: " << f.message << '\n';
        return f.code;
    } catch (const ParseError& e) {
        std::cerr << "rainbow: error[parse]: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "rainbow: error[input]: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "rainbow: error[precondition]: " << e.what() << '\n';
        return kPrecondition;
    } catch (const CapacityError& e) {
        std::cerr << "rainbow: error[capacity]: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "rainbow: error[internal]: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
