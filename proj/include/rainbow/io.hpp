#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow/approx.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr int kReportSchema = 1;

/// Parse failure; index() is the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + what, line) {}
};

namespace detail {

/// Splits a line into integer fields; rejects anything else.
inline std::vector<std::int64_t> integer_fields(std::string_view line, std::size_t line_no) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
        if (ec != std::errc{} || ptr != line.data() + j) {
            throw ParseError("expected an integer, got '" + std::string(line.substr(i, j - i)) + "'", line_no);
        }
        out.push_back(v);
        i = j;
    }
    return out;
}

/// Yields (line number, fields) for each non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        fn(line_no, integer_fields(line, line_no));
    }
}

}  // namespace detail

struct ParsedGraph {
    Graph graph;
    std::size_t declared_edges = 0;
    std::size_t duplicates_removed = 0;
};

/// Edge-list format: header "n m", then m lines "u v" with 0-based ids.
/// Lines starting with '#' and blank lines are ignored. Repeated edges are
/// merged and counted in duplicates_removed.
inline ParsedGraph parse_edge_list(std::istream& in) {
    ParsedGraph out;
    bool have_header = false;
    std::int64_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> lines;
    detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::int64_t>& f) {
        if (!have_header) {
            if (f.size() != 2) throw ParseError("header must be 'n m'", line_no);
            if (f[0] < 0 || f[1] < 0 || f[0] > INT32_MAX || f[1] > INT32_MAX) {
                throw ParseError("header values out of range", line_no);
            }
            n = f[0];
            out.declared_edges = static_cast<std::size_t>(f[1]);
            edges.reserve(out.declared_edges);
            have_header = true;
            return;
        }
        if (f.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
        if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n) {
            throw ParseError("endpoint out of range 0.." + std::to_string(n - 1), line_no);
        }
        if (f[0] == f[1]) throw ParseError("self-loop at vertex " + std::to_string(f[0]), line_no);
        edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])});
        lines.push_back(line_no);
    });
    if (!have_header) throw ParseError("missing header 'n m'", 1);
    if (edges.size() != out.declared_edges) {
        throw ParseError("header declares " + std::to_string(out.declared_edges) + " edges but " +
                             std::to_string(edges.size()) + " follow",
                         lines.empty() ? 1 : lines.back());
    }
    out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
    out.duplicates_removed = edges.size() - static_cast<std::size_t>(out.graph.edge_count());
    return out;
}

inline ParsedGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// Canonical form: "n m" then sorted "u v" lines, u < v.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// Colouring format: one "u v c" line per edge of the graph, each edge
/// exactly once, c >= 0.
inline EdgeColouring parse_colouring(std::istream& in, const Graph& g) {
    EdgeColouring c(static_cast<std::size_t>(g.edge_count()));
    detail::for_each_record(in, [&](std::size_t line_no, const std::vector<std::int64_t>& f) {
        if (f.size() != 3) throw ParseError("colouring line must be 'u v c'", line_no);
        if (f[2] < 0 || f[2] > INT32_MAX) throw ParseError("colour must be a non-negative integer", line_no);
        const auto id = (f[0] < 0 || f[1] < 0 || f[0] > INT32_MAX || f[1] > INT32_MAX)
                            ? std::nullopt
                            : g.find_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
        if (!id) {
            throw ParseError("(" + std::to_string(f[0]) + ", " + std::to_string(f[1]) + ") is not an edge", line_no);
        }
        if (c.is_coloured(*id)) throw ParseError("edge coloured twice", line_no);
        c.set(*id, static_cast<Colour>(f[2]));
    });
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (!c.is_coloured(id)) {
            const Edge e = g.edge(id);
            throw InputError("colouring misses edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
        }
    }
    return c;
}

inline void write_colouring(std::ostream& out, const Graph& g, const EdgeColouring& c) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge(id);
        out << e.u << ' ' << e.v << ' ' << c[id] << '\n';
    }
}

/// Versioned JSON form of a ColouringReport.
inline nlohmann::ordered_json report_to_json(const ColouringReport& r) {
    using nlohmann::ordered_json;
    auto optional_int = [](const std::optional<std::int32_t>& v) -> ordered_json {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    ordered_json layers = ordered_json::array();
    for (const auto& l : r.layers) {
        layers.push_back({{"k", l.k},
                          {"ears", l.ears_added},
                          {"fresh_colours", l.fresh_colours},
                          {"max_ear_length", l.max_ear_length},
                          {"leftover_edges", l.leftover_edges}});
    }
    return ordered_json{
        {"schema", kReportSchema},
        {"mode", std::string(to_string(r.mode))},
        {"colours_used", r.colours_used},
        {"radius", optional_int(r.radius)},
        {"diameter", optional_int(r.diameter)},
        {"seed", r.seed},
        {"seed_eccentricity", r.seed_eccentricity},
        {"bridges", r.bridges},
        {"zeta_bound", r.zeta ? ordered_json(*r.zeta) : ordered_json("fallback 2k+1")},
        {"bound_m", r.bound},
        {"bound_ok", r.bound_ok},
        {"verified", r.verified ? ordered_json(*r.verified) : ordered_json(nullptr)},
        {"per_layer", layers},
    };
}

}  // namespace rainbow
