#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Fresh colours for one layer of growth: pool A = a_1, a_2, ... and
/// pool B = b_1, b_2, ..., none of them used on G[D^k].
struct ColourPools {
    std::vector<Colour> a;
    std::vector<Colour> b;

    /// ceil(m/2) A-colours then floor(m/2) B-colours, numbered from `first`.
    static ColourPools consecutive(Colour first, std::int32_t m) {
        ColourPools p;
        for (std::int32_t i = 0; i < (m + 1) / 2; ++i) p.a.push_back(first++);
        for (std::int32_t i = 0; i < m / 2; ++i) p.b.push_back(first++);
        return p;
    }

    [[nodiscard]] Colour a1() const { return a.empty() ? kUncoloured : a.front(); }
    [[nodiscard]] Colour b1() const { return b.empty() ? kUncoloured : b.front(); }
    [[nodiscard]] std::size_t size() const noexcept { return a.size() + b.size(); }
};

enum class Orientation { a_first, b_first };

/// A path x_0..x_p whose two ends lie in the base set and whose interior
/// avoids it. x_0 == x_p for a closed ear.
struct Ear {
    std::vector<Vertex> vertices;
    std::int32_t k = 0;  // layer that produced it

    [[nodiscard]] std::int32_t length() const noexcept {
        return static_cast<std::int32_t>(vertices.size()) - 1;
    }
    [[nodiscard]] bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

/// The colour the even pattern puts on edge j (1-based) of an ear of
/// length p. A-first reads a_1..a_ceil(p/2), b_floor(p/2)..b_1; B-first is
/// the mirror image.
inline Colour even_pattern_colour(const ColourPools& pools, std::int32_t p, std::int32_t j,
                                  Orientation orientation) {
    const std::int32_t lead = orientation == Orientation::a_first ? (p + 1) / 2 : p / 2;
    const auto& first = orientation == Orientation::a_first ? pools.a : pools.b;
    const auto& second = orientation == Orientation::a_first ? pools.b : pools.a;
    const auto& pool = j <= lead ? first : second;
    const auto index = static_cast<std::size_t>(j <= lead ? j - 1 : p - j);
    if (index >= pool.size()) {
        throw std::logic_error("even colouring: ear of length " + std::to_string(p) +
                               " needs more colours than the pools hold (" + std::to_string(pools.a.size()) +
                               " A, " + std::to_string(pools.b.size()) + " B)");
    }
    return pool[index];
}

struct EvenColourResult {
    std::vector<Colour> word;  // colours along the ear after the call
    std::size_t newly_coloured = 0;
};

namespace detail {

/// Even pattern over the edge ids of an ear, in order. Appends the colours
/// to `word` and returns how many edges were newly coloured.
inline std::size_t paint_even(std::span<const EdgeId> ear_edges, const ColourPools& pools, EdgeColouring& colouring,
                              Orientation orientation, std::vector<Colour>& word) {
    const auto p = static_cast<std::int32_t>(ear_edges.size());
    std::size_t fresh = 0;
    for (std::int32_t j = 1; j <= p; ++j) {
        const EdgeId id = ear_edges[static_cast<std::size_t>(j - 1)];
        const Colour want = even_pattern_colour(pools, p, j, orientation);
        const Colour have = colouring[id];
        if (have == kUncoloured) {
            colouring.set(id, want);
            ++fresh;
        } else if (have != want) {
            throw std::logic_error("even colouring: edge " + std::to_string(id) + " already has colour " +
                                   std::to_string(have) + ", pattern wants " + std::to_string(want));
        }
        word.push_back(want);
    }
    return fresh;
}

}  // namespace detail

/// Writes the even pattern onto the ear's uncoloured edges. Edges that
/// already carry a colour must already match the pattern; a mismatch is an
/// internal invariant violation and throws std::logic_error.
inline EvenColourResult even_colour_ear(const Graph& g, const Ear& ear, const ColourPools& pools,
                                        EdgeColouring& colouring, Orientation orientation) {
    const std::int32_t p = ear.length();
    if (p < 1) throw std::logic_error("even colouring: ear has no edges");
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<std::size_t>(p));
    for (std::int32_t j = 1; j <= p; ++j) {
        const Vertex x = ear.vertices[static_cast<std::size_t>(j - 1)];
        const Vertex y = ear.vertices[static_cast<std::size_t>(j)];
        const auto id = g.find_edge(x, y);
        if (!id) {
            throw std::logic_error("even colouring: ear uses a non-edge " + std::to_string(x) + "-" +
                                   std::to_string(y));
        }
        ids.push_back(*id);
    }
    EvenColourResult out;
    out.word.reserve(static_cast<std::size_t>(p));
    out.newly_coloured = detail::paint_even(ids, pools, colouring, orientation, out.word);
    return out;
}

/// Ordered pair of the last two vertices on the BFS path from a vertex down
/// to the base set: `near` is in N(D^k), `base` is its parent in D^k.
struct Foot {
    Vertex near = kNoVertex;
    Vertex base = kNoVertex;

    [[nodiscard]] bool empty() const noexcept { return near == kNoVertex; }
    friend bool operator==(const Foot&, const Foot&) = default;
};

/// Per-vertex fields read on every edge scan, packed so one visit touches
/// one cache line.
struct VertexSlot {
    Foot foot;
    Colour parent_edge_colour = kUncoloured;  // set once the tree edge is coloured here
    char in_base = 0;                         // D^k
    char in_set = 0;                          // D^{k-1}, grows from D^k
};

/// Side information of one growth step (one BFS over G minus E(G[D^k])
/// seeded with all of D^k).
struct LayerState {
    std::int32_t k = 0;
    std::vector<VertexSlot> slot;
    std::vector<Vertex> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<std::int32_t> depth;  // BFS depth = distance to D^k
    std::vector<Vertex> queue;
    std::size_t head = 0;

    static LayerState start(const Graph& g, std::span<const Vertex> base, std::int32_t k) {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        LayerState s;
        s.k = k;
        s.slot.assign(n, VertexSlot{});
        s.parent.assign(n, kNoVertex);
        s.parent_edge.assign(n, kNoEdge);
        s.depth.assign(n, kUnreachable);
        s.queue.reserve(n);
        for (Vertex v : base) {
            if (!g.valid(v)) throw InputError("base vertex " + std::to_string(v) + " out of range");
            auto& sl = s.slot[static_cast<std::size_t>(v)];
            if (sl.in_base) continue;
            sl.in_base = sl.in_set = 1;
            s.depth[static_cast<std::size_t>(v)] = 0;
            s.queue.push_back(v);
        }
        return s;
    }

    [[nodiscard]] VertexSlot& at(Vertex v) { return slot[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const VertexSlot& at(Vertex v) const { return slot[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool is_base(Vertex v) const { return at(v).in_base != 0; }
    [[nodiscard]] const Foot& foot_of(Vertex v) const { return at(v).foot; }
};

/// Accepted meeting of two BFS trees: the ear u_0 T u - v T v_0.
struct EarClosure {
    Vertex u0 = kNoVertex;
    Vertex v0 = kNoVertex;
    Colour cu = kUncoloured;
    Colour cv = kUncoloured;
    Orientation orientation = Orientation::a_first;
};

/// Decides whether BFS edge (u, v), with v already visited, closes an
/// acceptable ear: the feet differ and at least one foot is still
/// uncaptured. Orientation is A-first when c_u = a_1, c_v = b_1, or both
/// feet are uncaptured; B-first otherwise.
inline std::optional<EarClosure> detect_meeting(const LayerState& state, const ColourPools& pools, Vertex u,
                                                Vertex v) {
    const Foot& fu = state.foot_of(u);
    const Foot& fv = state.foot_of(v);
    if (fv.empty() || fv == fu) return std::nullopt;

    EarClosure out;
    if (fu.empty()) {
        out.u0 = u;
    } else {
        out.u0 = fu.base;
        out.cu = state.at(fu.near).parent_edge_colour;
    }
    out.v0 = fv.base;
    out.cv = state.at(fv.near).parent_edge_colour;
    if (out.cu != kUncoloured && out.cv != kUncoloured) return std::nullopt;

    const bool a_first = (out.cu != kUncoloured && out.cu == pools.a1()) ||
                         (out.cv != kUncoloured && out.cv == pools.b1()) ||
                         (out.cu == kUncoloured && out.cv == kUncoloured);
    out.orientation = a_first ? Orientation::a_first : Orientation::b_first;
    return out;
}

struct GrowOptions {
    bool record_ears = false;
};

struct LayerStats {
    std::int32_t k = 0;
    std::int32_t ears_added = 0;
    std::int32_t fresh_colours = 0;
    std::int32_t max_ear_length = 0;
    std::int32_t leftover_edges = 0;
};

struct LayerResult {
    std::vector<Vertex> next_set;  // D^{k-1}, ascending
    LayerStats stats;
    std::vector<Ear> ears;         // filled when GrowOptions::record_ears
};

/// Grows a rainbow-coloured connected k-step dominating set D^k into a
/// rainbow-coloured connected (k-1)-step dominating set D^{k-1} by one BFS
/// over G minus E(G[D^k]), evenly colouring each acceptable ear it closes.
/// Edges of G[D^{k-1}] left uncoloured afterwards receive a_1.
///
/// `colouring` must already cover G[D^k] and must not use any pool colour.
inline LayerResult grow_layer(const Graph& g, std::span<const Vertex> base, std::int32_t k,
                              const ColourPools& pools, EdgeColouring& colouring, GrowOptions options = {}) {
    if (k < 1) throw InputError("grow_layer: k must be at least 1");
    if (base.empty()) throw InputError("grow_layer: empty base set");
    if (colouring.size() != static_cast<std::size_t>(g.edge_count())) {
        throw InputError("grow_layer: colouring does not match the graph");
    }
    LayerState st = LayerState::start(g, base, k);
    LayerResult out;
    out.stats.k = k;
    std::vector<char> pool_used(pools.size(), 0);
    std::vector<Vertex> ear_vertices;
    std::vector<EdgeId> ear_edges;
    std::vector<Colour> word;

    while (st.head < st.queue.size()) {
        const Vertex u = st.queue[st.head++];
        const auto ui = static_cast<std::size_t>(u);
        for (const Neighbour& nb : g.neighbours(u)) {
            const Vertex v = nb.vertex;
            const auto vi = static_cast<std::size_t>(v);
            VertexSlot& sv = st.slot[vi];
            if (sv.in_base) continue;
            if (sv.foot.empty()) {
                const Foot& fu = st.slot[ui].foot;
                sv.foot = fu.empty() ? Foot{v, u} : fu;
                st.parent[vi] = u;
                st.parent_edge[vi] = nb.edge;
                st.depth[vi] = st.depth[ui] + 1;
                if (st.depth[vi] > k) {
                    throw PreconditionError("grow_layer: base set is not a " + std::to_string(k) +
                                            "-step dominating set (vertex " + std::to_string(v) + " at distance " +
                                            std::to_string(st.depth[vi]) + ")");
                }
                st.queue.push_back(v);
                continue;
            }
            const auto closure = detect_meeting(st, pools, u, v);
            if (!closure) continue;

            // Ear u_0 .. u, v .. v_0 as vertices and edge ids, in reused buffers.
            ear_vertices.clear();
            ear_edges.clear();
            for (Vertex x = u; !st.is_base(x); x = st.parent[static_cast<std::size_t>(x)]) {
                ear_vertices.push_back(x);
                ear_edges.push_back(st.parent_edge[static_cast<std::size_t>(x)]);
            }
            ear_vertices.push_back(closure->u0);
            std::reverse(ear_vertices.begin(), ear_vertices.end());
            std::reverse(ear_edges.begin(), ear_edges.end());
            ear_edges.push_back(nb.edge);
            for (Vertex x = v; !st.is_base(x); x = st.parent[static_cast<std::size_t>(x)]) {
                ear_vertices.push_back(x);
                ear_edges.push_back(st.parent_edge[static_cast<std::size_t>(x)]);
            }
            ear_vertices.push_back(closure->v0);

            word.clear();
            detail::paint_even(ear_edges, pools, colouring, closure->orientation, word);
            for (Vertex x : ear_vertices) {
                VertexSlot& sx = st.at(x);
                sx.in_set = 1;
                if (!sx.in_base) sx.parent_edge_colour = colouring[st.parent_edge[static_cast<std::size_t>(x)]];
            }
            for (Colour c : word) {
                const auto a = std::find(pools.a.begin(), pools.a.end(), c);
                const auto idx = a != pools.a.end()
                                     ? static_cast<std::size_t>(a - pools.a.begin())
                                     : pools.a.size() + static_cast<std::size_t>(
                                                            std::find(pools.b.begin(), pools.b.end(), c) - pools.b.begin());
                pool_used[idx] = 1;
            }
            const auto length = static_cast<std::int32_t>(ear_edges.size());
            ++out.stats.ears_added;
            out.stats.max_ear_length = std::max(out.stats.max_ear_length, length);
            if (options.record_ears) out.ears.push_back(Ear{ear_vertices, k});
        }
    }

    for (std::size_t v = 0; v < st.depth.size(); ++v) {
        if (st.depth[v] == kUnreachable) throw PreconditionError("grow_layer: graph is not connected");
        if (st.depth[v] == 1 && !st.slot[v].in_set) {
            throw PreconditionError("grow_layer: no ear closes at vertex " + std::to_string(v) +
                                    "; graph not bridgeless");
        }
    }

    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const VertexSlot& sx = st.at(x);
        if (!sx.in_set) continue;
        out.next_set.push_back(x);
        if (sx.in_base) continue;
        for (const Neighbour& nb : g.neighbours(x)) {
            if (!st.at(nb.vertex).in_set || colouring.is_coloured(nb.edge)) continue;
            colouring.set(nb.edge, pools.a1());
            ++out.stats.leftover_edges;
        }
    }
    out.stats.fresh_colours = static_cast<std::int32_t>(std::count(pool_used.begin(), pool_used.end(), 1));
    return out;
}

}  // namespace rainbow
