#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/ear_growth.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

enum class PipelineMode { radius, diameter, general_radius, general_diameter };

inline std::string_view to_string(PipelineMode mode) {
    switch (mode) {
        case PipelineMode::radius: return "radius";
        case PipelineMode::diameter: return "diameter";
        case PipelineMode::general_radius: return "general-radius";
        case PipelineMode::general_diameter: return "general-diameter";
    }
    return "unknown";
}

struct ColourOptions {
    bool verify = false;
    /// Largest graph (in vertices) whose isometric-cycle size is computed
    /// exactly to tighten pools; larger graphs use 2k+1 per layer.
    Vertex iso_exact_cap = 64;
    VerifyOptions verify_options;
    bool record_ears = false;
};

struct ColouringReport {
    PipelineMode mode = PipelineMode::radius;
    std::int32_t colours_used = 0;
    std::optional<std::int32_t> radius;
    std::optional<std::int32_t> diameter;
    Vertex seed = kNoVertex;
    std::int32_t seed_eccentricity = 0;  // number of growth layers
    std::int32_t bridges = 0;
    std::optional<std::int32_t> zeta;    // exact iso of the coloured (bridgeless) graph, if computed
    std::int32_t bound = 0;              // colours permitted for this run
    std::vector<LayerStats> layers;
    bool bound_ok = true;
    std::optional<bool> verified;
};

struct ColouringResult {
    EdgeColouring colouring;
    ColouringReport report;
    std::vector<Ear> ears;  // when ColourOptions::record_ears
};

/// sum_{k=1..layers} min(2k+1, zeta); without zeta this is layers*(layers+2).
inline std::int32_t layer_sum_bound(std::int32_t layers, std::optional<std::int32_t> zeta = std::nullopt) {
    std::int32_t total = 0;
    for (std::int32_t k = 1; k <= layers; ++k) total += zeta ? std::min(2 * k + 1, *zeta) : 2 * k + 1;
    return total;
}

namespace detail {

inline void require_bridgeless(const Graph& g, std::string_view who) {
    require_connected(g, std::string(who).c_str());
    if (!find_bridges(g).empty()) {
        throw PreconditionError(std::string(who) + ": graph has bridges; use colour_general");
    }
}

inline std::optional<std::int32_t> exact_zeta(const Graph& g, const ColourOptions& opts) {
    if (g.vertex_count() < 3 || g.vertex_count() > opts.iso_exact_cap) return std::nullopt;
    return largest_isometric_cycle(g, IsoOptions{opts.iso_exact_cap});
}

inline void finish_report(const Graph& g, ColouringResult& result, const ColourOptions& opts) {
    auto& rep = result.report;
    result.colouring.normalize();
    rep.colours_used = static_cast<std::int32_t>(result.colouring.palette_size());
    rep.bound_ok = rep.colours_used <= rep.bound;
    if (opts.verify && g.vertex_count() > 0) {
        try {
            rep.verified = verify_rainbow_connected(g, result.colouring, opts.verify_options).rainbow_connected;
        } catch (const CapacityError&) {
            rep.verified.reset();
        }
    }
}

/// Grows D = {seed} through layers k = layers..1. Colour ids are handed out
/// layer by layer, so the final normalized palette is ordered by layer.
inline ColouringResult grow_from_seed(const Graph& g, Vertex seed, std::int32_t layers,
                                      std::optional<std::int32_t> zeta, const ColourOptions& opts) {
    ColouringResult result;
    result.colouring = EdgeColouring(static_cast<std::size_t>(g.edge_count()));
    std::vector<Vertex> dominating{seed};
    Colour next_colour = 0;
    for (std::int32_t k = layers; k >= 1; --k) {
        const std::int32_t m = zeta ? std::min(2 * k + 1, *zeta) : 2 * k + 1;
        const auto pools = ColourPools::consecutive(next_colour, m);
        next_colour += m;
        auto layer = grow_layer(g, dominating, k, pools, result.colouring, GrowOptions{opts.record_ears});
        dominating = std::move(layer.next_set);
        result.report.layers.push_back(layer.stats);
        for (auto& ear : layer.ears) result.ears.push_back(std::move(ear));
    }
    if (static_cast<Vertex>(dominating.size()) != g.vertex_count()) {
        throw std::logic_error("growth finished without covering every vertex");
    }
    auto& rep = result.report;
    rep.seed = seed;
    rep.seed_eccentricity = layers;
    rep.zeta = zeta;
    rep.bound = layer_sum_bound(layers, zeta);
    return result;
}

}  // namespace detail

/// Rainbow colouring of a bridgeless graph seeded at a centre, using at
/// most sum_{k=1..r} min(2k+1, zeta) <= r(r+2) colours. O(nm), dominated
/// by finding the centre.
inline ColouringResult colour_bridgeless_radius(const Graph& g, const ColourOptions& opts = {}) {
    if (g.vertex_count() <= 1) {
        ColouringResult empty;
        empty.report.mode = PipelineMode::radius;
        empty.report.radius = empty.report.diameter = 0;
        empty.report.seed = g.vertex_count() == 1 ? 0 : kNoVertex;
        if (opts.verify) empty.report.verified = true;
        return empty;
    }
    detail::require_bridgeless(g, "colour_bridgeless_radius");
    const auto metrics = radius_diameter_center(g);
    auto result = detail::grow_from_seed(g, metrics.center, metrics.radius, detail::exact_zeta(g, opts), opts);
    result.report.mode = PipelineMode::radius;
    result.report.radius = metrics.radius;
    result.report.diameter = metrics.diameter;
    detail::finish_report(g, result, opts);
    return result;
}

namespace detail {

struct BfsRelabel {
    Graph graph;                  // vertex i is the i-th vertex in BFS order
    std::vector<Vertex> position; // original vertex -> new id
    std::vector<Vertex> order;    // new id -> original vertex
    std::vector<EdgeId> edge_origin;  // new edge id -> original edge id
    std::int32_t eccentricity = 0;
};

/// Renumbers vertices in BFS order from `source` (which becomes 0). Growth
/// layers then sweep memory roughly in order, which matters once the graph
/// no longer fits in cache.
inline BfsRelabel relabel_bfs(const Graph& g, Vertex source) {
    BfsRelabel out;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    out.position.assign(n, kNoVertex);
    std::vector<std::int32_t> dist(n, 0);
    out.order.reserve(n);
    out.order.push_back(source);
    out.position[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < out.order.size(); ++head) {
        const Vertex x = out.order[head];
        for (const Neighbour& nb : g.neighbours(x)) {
            auto& pos = out.position[static_cast<std::size_t>(nb.vertex)];
            if (pos != kNoVertex) continue;
            pos = static_cast<Vertex>(out.order.size());
            dist[static_cast<std::size_t>(pos)] = dist[head] + 1;
            out.order.push_back(nb.vertex);
        }
    }
    if (out.order.size() != n) throw PreconditionError("colour_bridgeless_diameter: graph is not connected");
    out.eccentricity = dist.back();
    // Emit edges already in (u, v) order so from_edges skips its sort; the
    // i-th emitted edge is edge i of the new graph.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    out.edge_origin.reserve(static_cast<std::size_t>(g.edge_count()));
    std::vector<Neighbour> later;
    for (std::size_t i = 0; i < n; ++i) {
        later.clear();
        for (const Neighbour& nb : g.neighbours(out.order[i])) {
            const Vertex p = out.position[static_cast<std::size_t>(nb.vertex)];
            if (static_cast<std::size_t>(p) > i) later.push_back({p, nb.edge});
        }
        std::sort(later.begin(), later.end(), [](const Neighbour& a, const Neighbour& b) { return a.vertex < b.vertex; });
        for (const Neighbour& nb : later) {
            edges.push_back({static_cast<Vertex>(i), nb.vertex});
            out.edge_origin.push_back(nb.edge);
        }
    }
    out.graph = Graph::from_edges(n, edges);
    return out;
}

}  // namespace detail

/// Rainbow colouring of a bridgeless graph seeded at vertex 0, using at
/// most sum_{k=1..ecc(0)} min(2k+1, zeta) <= d(d+2) colours. O(dm): one
/// BFS for ecc(0) and one BFS per layer. The layers run on a copy
/// renumbered in BFS order; colours and recorded ears are mapped back.
inline ColouringResult colour_bridgeless_diameter(const Graph& g, const ColourOptions& opts = {}) {
    if (g.vertex_count() <= 1) {
        ColouringResult empty;
        empty.report.mode = PipelineMode::diameter;
        empty.report.seed = g.vertex_count() == 1 ? 0 : kNoVertex;
        if (opts.verify) empty.report.verified = true;
        return empty;
    }
    const auto relabelled = detail::relabel_bfs(g, 0);
    const Graph& h = relabelled.graph;
    detail::require_bridgeless(h, "colour_bridgeless_diameter");
    auto inner = detail::grow_from_seed(h, 0, relabelled.eccentricity, detail::exact_zeta(g, opts), opts);

    ColouringResult result;
    result.report = std::move(inner.report);
    result.report.mode = PipelineMode::diameter;
    result.colouring = EdgeColouring(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId id = 0; id < h.edge_count(); ++id) {
        result.colouring.set(relabelled.edge_origin[static_cast<std::size_t>(id)], inner.colouring[id]);
    }
    result.ears = std::move(inner.ears);
    for (Ear& ear : result.ears) {
        for (Vertex& x : ear.vertices) x = relabelled.order[static_cast<std::size_t>(x)];
    }
    detail::finish_report(g, result, opts);
    return result;
}

/// Any connected graph: contract the bridges, colour the bridgeless
/// quotient, lift the colouring back, and give every bridge its own new
/// colour. At most r(r+2)+b (radius) or d(d+2)+b (diameter) colours.
inline ColouringResult colour_general(const Graph& g, PipelineMode mode, const ColourOptions& opts = {}) {
    const bool radius_mode = mode == PipelineMode::radius || mode == PipelineMode::general_radius;
    require_connected(g, "colour_general");
    if (g.vertex_count() == 0) {
        ColouringResult empty;
        empty.report.mode = radius_mode ? PipelineMode::general_radius : PipelineMode::general_diameter;
        if (opts.verify) empty.report.verified = true;
        return empty;
    }
    const auto contraction = contract_bridges(g);
    ColourOptions inner = opts;
    inner.verify = false;
    auto quotient = radius_mode ? colour_bridgeless_radius(contraction.quotient, inner)
                                : colour_bridgeless_diameter(contraction.quotient, inner);

    ColouringResult result;
    result.report = quotient.report;
    result.report.mode = radius_mode ? PipelineMode::general_radius : PipelineMode::general_diameter;
    result.report.bridges = static_cast<std::int32_t>(contraction.bridges.count());
    result.report.bound = quotient.report.bound + result.report.bridges;
    result.ears = std::move(quotient.ears);
    if (result.report.seed != kNoVertex) {
        // Report the seed as an original vertex: the smallest one mapped onto it.
        const auto it = std::find(contraction.vertex_map.begin(), contraction.vertex_map.end(), result.report.seed);
        result.report.seed = static_cast<Vertex>(it - contraction.vertex_map.begin());
    }

    result.colouring = EdgeColouring(static_cast<std::size_t>(g.edge_count()));
    const auto base = static_cast<Colour>(quotient.colouring.palette_size());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const EdgeId q = contraction.edge_map[static_cast<std::size_t>(id)];
        if (q != kNoEdge) result.colouring.set(id, quotient.colouring[q]);
    }
    for (std::size_t i = 0; i < contraction.bridges.ids.size(); ++i) {
        result.colouring.set(contraction.bridges.ids[i], base + static_cast<Colour>(i));
    }
    detail::finish_report(g, result, opts);
    return result;
}

}  // namespace rainbow
