#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct BridgeSet {
    std::vector<EdgeId> ids;   // ascending, hence also in normalized edge order
    std::vector<Edge> edges;

    [[nodiscard]] std::size_t count() const noexcept { return ids.size(); }
    [[nodiscard]] bool empty() const noexcept { return ids.empty(); }
    friend bool operator==(const BridgeSet&, const BridgeSet&) = default;
};

namespace detail {

inline BridgeSet bridge_set_from_ids(const Graph& g, std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    BridgeSet out;
    out.edges.reserve(ids.size());
    for (EdgeId id : ids) out.edges.push_back(g.edge(id));
    out.ids = std::move(ids);
    return out;
}

}  // namespace detail

/// Bridges by low-link DFS in O(n + m). The DFS is iterative so deep
/// graphs do not exhaust the call stack.
inline BridgeSet find_bridges(const Graph& g) {
    require_connected(g, "find_bridges");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::int32_t> disc(n, -1), low(n, 0);
    std::vector<EdgeId> via(n, kNoEdge);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<Vertex> stack;
    std::vector<EdgeId> bridges;
    std::int32_t tick = 0;

    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = tick++;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            const auto xi = static_cast<std::size_t>(x);
            const auto nbrs = g.neighbours(x);
            if (cursor[xi] < nbrs.size()) {
                const Neighbour nb = nbrs[cursor[xi]++];
                if (nb.edge == via[xi]) continue;
                const auto yi = static_cast<std::size_t>(nb.vertex);
                if (disc[yi] == -1) {
                    disc[yi] = low[yi] = tick++;
                    via[yi] = nb.edge;
                    stack.push_back(nb.vertex);
                } else {
                    low[xi] = std::min(low[xi], disc[yi]);
                }
                continue;
            }
            stack.pop_back();
            if (via[xi] != kNoEdge) {
                const Edge e = g.edge(via[xi]);
                const auto pi = static_cast<std::size_t>(e.u == x ? e.v : e.u);
                low[pi] = std::min(low[pi], low[xi]);
                if (low[xi] > disc[pi]) bridges.push_back(via[xi]);
            }
        }
    }
    return detail::bridge_set_from_ids(g, std::move(bridges));
}

/// Reference implementation: an edge is a bridge iff deleting it
/// disconnects the graph. O(m (n + m)).
inline BridgeSet find_bridges_naive(const Graph& g) {
    require_connected(g, "find_bridges_naive");
    std::vector<EdgeId> bridges;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> seen(n);
    std::vector<Vertex> queue;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, 0);
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Neighbour& nb : g.neighbours(queue[head])) {
                if (nb.edge == id || seen[static_cast<std::size_t>(nb.vertex)]) continue;
                seen[static_cast<std::size_t>(nb.vertex)] = 1;
                queue.push_back(nb.vertex);
            }
        }
        if (queue.size() != n) bridges.push_back(id);
    }
    return detail::bridge_set_from_ids(g, std::move(bridges));
}

/// Result of contracting every bridge.
struct ContractionMap {
    Graph quotient;
    std::vector<Vertex> vertex_map;  // original vertex -> quotient vertex
    std::vector<EdgeId> edge_map;    // original edge -> quotient edge, kNoEdge for bridges
    BridgeSet bridges;
};

/// Contracts all bridges. Quotient vertices are numbered in order of the
/// smallest original vertex they contain.
inline ContractionMap contract_bridges(const Graph& g) {
    ContractionMap out;
    out.bridges = find_bridges(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());

    std::vector<Vertex> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex x) {
        while (root[static_cast<std::size_t>(x)] != x) {
            auto& r = root[static_cast<std::size_t>(x)];
            r = root[static_cast<std::size_t>(r)];
            x = r;
        }
        return x;
    };
    for (const Edge& e : out.bridges.edges) {
        const Vertex a = find(e.u), b = find(e.v);
        if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

    out.vertex_map.assign(n, kNoVertex);
    std::vector<Vertex> label(n, kNoVertex);
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& l = label[static_cast<std::size_t>(find(v))];
        if (l == kNoVertex) l = next++;
        out.vertex_map[static_cast<std::size_t>(v)] = l;
    }

    std::vector<Edge> qedges;
    qedges.reserve(static_cast<std::size_t>(g.edge_count()));
    std::vector<char> is_bridge(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId id : out.bridges.ids) is_bridge[static_cast<std::size_t>(id)] = 1;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (is_bridge[static_cast<std::size_t>(id)]) continue;
        const Edge e = g.edge(id);
        qedges.push_back({out.vertex_map[static_cast<std::size_t>(e.u)],
                          out.vertex_map[static_cast<std::size_t>(e.v)]});
    }
    out.quotient = Graph::from_edges(static_cast<std::size_t>(next), qedges);

    out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), kNoEdge);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (is_bridge[static_cast<std::size_t>(id)]) continue;
        const Edge e = g.edge(id);
        out.edge_map[static_cast<std::size_t>(id)] =
            *out.quotient.find_edge(out.vertex_map[static_cast<std::size_t>(e.u)],
                                    out.vertex_map[static_cast<std::size_t>(e.v)]);
    }
    return out;
}

/// A shortest cycle through edge id, as a vertex sequence starting with
/// the edge's smaller endpoint and ending with the larger one (the closing
/// edge is implicit). Empty when the edge is a bridge.
inline std::vector<Vertex> shortest_cycle_through_edge(const Graph& g, EdgeId id) {
    const Edge e = g.edge(id);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Vertex> parent(n, kNoVertex);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue{e.u};
    seen[static_cast<std::size_t>(e.u)] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[static_cast<std::size_t>(e.v)]; ++head) {
        const Vertex x = queue[head];
        for (const Neighbour& nb : g.neighbours(x)) {
            if (nb.edge == id || seen[static_cast<std::size_t>(nb.vertex)]) continue;
            seen[static_cast<std::size_t>(nb.vertex)] = 1;
            parent[static_cast<std::size_t>(nb.vertex)] = x;
            queue.push_back(nb.vertex);
        }
    }
    if (!seen[static_cast<std::size_t>(e.v)]) return {};
    std::vector<Vertex> cycle;
    for (Vertex x = e.v; x != kNoVertex; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

namespace detail {

inline std::vector<std::vector<std::int32_t>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<std::int32_t>> d;
    d.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v).dist);
    return d;
}

inline void require_cycle(const Graph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) throw InputError("not a cycle: fewer than three vertices");
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    for (Vertex v : sorted) {
        if (!g.valid(v)) throw InputError("not a cycle: vertex " + std::to_string(v) + " out of range");
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("not a cycle: repeated vertex");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
            throw InputError("not a cycle: missing edge " + std::to_string(cycle[i]) + "-" +
                             std::to_string(cycle[(i + 1) % cycle.size()]));
        }
    }
}

}  // namespace detail

/// True iff distances measured along the cycle equal graph distances for
/// every pair of cycle vertices.
inline bool is_isometric_cycle(const Graph& g, std::span<const Vertex> cycle) {
    detail::require_cycle(g, cycle);
    const auto len = static_cast<std::int32_t>(cycle.size());
    for (std::int32_t i = 0; i < len; ++i) {
        const auto d = bfs_distances(g, cycle[static_cast<std::size_t>(i)]);
        for (std::int32_t j = i + 1; j < len; ++j) {
            if (d[cycle[static_cast<std::size_t>(j)]] != std::min(j - i, len - (j - i))) return false;
        }
    }
    return true;
}

struct IsoOptions {
    Vertex exact_cap = 64;
};

/// Size of a largest isometric cycle, exactly.
///
/// For each candidate length L (from 2*diam+1 down) a DFS grows a cycle
/// from its smallest vertex; position t on the cycle fixes the required
/// distance min(t - i, L - t + i) to every earlier vertex i, so each
/// extension is checked against the distance matrix. The first length
/// that closes is the answer. Requires a connected bridgeless graph.
inline std::int32_t largest_isometric_cycle(const Graph& g, IsoOptions options = {}) {
    if (g.vertex_count() > options.exact_cap) {
        throw CapacityError("largest_isometric_cycle: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds cap " + std::to_string(options.exact_cap) +
                            "; fall back to the bound 2r+1");
    }
    if (g.vertex_count() < 3 || !find_bridges(g).empty()) {
        throw PreconditionError("largest_isometric_cycle: graph has a bridge");
    }
    const auto dist = detail::all_pairs_distances(g);
    std::vector<std::int32_t> ecc(dist.size());
    std::int32_t diameter = 0;
    for (std::size_t v = 0; v < dist.size(); ++v) {
        ecc[v] = *std::max_element(dist[v].begin(), dist[v].end());
        diameter = std::max(diameter, ecc[v]);
    }
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;

    for (std::int32_t len = 2 * diameter + 1; len >= 3; --len) {
        auto dist_of = [&](Vertex a, Vertex b) {
            return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        };
        // Recursion depth is bounded by len <= 2*diam+1 <= 2n.
        auto extend = [&](auto&& self) -> bool {
            const auto t = static_cast<std::int32_t>(path.size());
            if (t == len) return dist_of(path.back(), path.front()) == 1;
            const Vertex start = path.front();
            for (const Neighbour& nb : g.neighbours(path.back())) {
                const Vertex y = nb.vertex;
                if (y <= start || on_path[static_cast<std::size_t>(y)]) continue;
                bool ok = true;
                for (std::int32_t i = 0; i + 1 < t && ok; ++i) {
                    ok = dist_of(path[static_cast<std::size_t>(i)], y) == std::min(t - i, len - t + i);
                }
                if (!ok) continue;
                path.push_back(y);
                on_path[static_cast<std::size_t>(y)] = 1;
                const bool found = self(self);
                on_path[static_cast<std::size_t>(y)] = 0;
                path.pop_back();
                if (found) return true;
            }
            return false;
        };
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            if (2 * ecc[static_cast<std::size_t>(s)] + 1 < len) continue;
            path.assign(1, s);
            on_path[static_cast<std::size_t>(s)] = 1;
            const bool found = extend(extend);
            on_path[static_cast<std::size_t>(s)] = 0;
            if (found) return len;
        }
    }
    throw PreconditionError("largest_isometric_cycle: no cycle found");
}

/// Bounds on the largest isometric cycle that avoid exponential search:
/// every shortest cycle through an edge is isometric, so the longest of
/// those is a certified lower bound; 2*diam+1 is always an upper bound.
struct IsoEstimate {
    std::int32_t lower = 0;
    std::int32_t upper = 0;
    [[nodiscard]] bool exact() const noexcept { return lower == upper; }
};

inline IsoEstimate estimate_isometric_cycle(const Graph& g) {
    if (g.vertex_count() < 3 || !find_bridges(g).empty()) {
        throw PreconditionError("estimate_isometric_cycle: graph has a bridge");
    }
    IsoEstimate out;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        out.lower = std::max(out.lower, static_cast<std::int32_t>(shortest_cycle_through_edge(g, id).size()));
    }
    out.upper = 2 * radius_diameter_center(g).diameter + 1;
    return out;
}

struct ChordalityOptions {
    Vertex cap = 24;
};

/// Length of a longest induced cycle (0 for forests). Exponential: grows
/// induced paths from each start vertex over larger-id vertices only.
inline std::int32_t chordality(const Graph& g, ChordalityOptions options = {}) {
    const Vertex n = g.vertex_count();
    if (n > options.cap || n > 64) {
        throw CapacityError("chordality: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(std::min<Vertex>(options.cap, 64)));
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    std::int32_t best = 0;
    // path: start, ..., tail with len edges. `blocked` holds the path plus neighbours of
    // every path vertex except start and tail; a new vertex must avoid it.
    auto extend = [&](auto&& self, Vertex start, Vertex tail, std::uint64_t blocked, std::int32_t len) -> void {
        const std::uint64_t start_bit = std::uint64_t{1} << start;
        const std::uint64_t above = ~((start_bit << 1) - 1);
        std::uint64_t cand = adj[static_cast<std::size_t>(tail)] & ~blocked & above;
        const std::uint64_t next_blocked = blocked | adj[static_cast<std::size_t>(tail)];
        while (cand) {
            const auto y = static_cast<Vertex>(__builtin_ctzll(cand));
            cand &= cand - 1;
            if (adj[static_cast<std::size_t>(y)] & start_bit) {
                best = std::max(best, len + 2);
                continue;
            }
            self(self, start, y, next_blocked | (std::uint64_t{1} << y), len + 1);
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        const std::uint64_t s_bit = std::uint64_t{1} << s;
        for (const Neighbour& nb : g.neighbours(s)) {
            if (nb.vertex < s) continue;
            extend(extend, s, nb.vertex, s_bit | (std::uint64_t{1} << nb.vertex), 1);
        }
    }
    return best;
}

}  // namespace rainbow
