#pragma once

// Independent reference implementations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rainbow/graph.hpp"

namespace testing_support {

using rainbow::Edge;
using rainbow::Graph;
using rainbow::Vertex;

inline constexpr std::int32_t kInf = 1 << 28;

inline std::vector<std::vector<std::int32_t>> floyd_warshall(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<std::int32_t>> d(n, std::vector<std::int32_t>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Adjacency matrix, for oracles that do not want to trust Graph's lists.
inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

/// Calls fn(cycle) once per simple cycle (as a vertex sequence starting at
/// its smallest vertex, second vertex < last vertex).
inline void for_each_simple_cycle(const Graph& g, const std::function<void(const std::vector<Vertex>&)>& fn) {
    const auto a = adjacency_matrix(g);
    const Vertex n = g.vertex_count();
    std::vector<Vertex> path;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex)> dfs = [&](Vertex x) {
        for (Vertex y = path.front() + 1; y < n; ++y) {
            if (!a[x][y] || on[y]) continue;
            path.push_back(y);
            on[y] = 1;
            if (path.size() >= 3 && a[y][path.front()] && path[1] < y) fn(path);
            dfs(y);
            on[y] = 0;
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on[s] = 1;
        dfs(s);
        on[s] = 0;
    }
}

/// Largest isometric cycle by enumerating all simple cycles.
inline std::int32_t brute_iso(const Graph& g) {
    const auto d = floyd_warshall(g);
    std::int32_t best = 0;
    for_each_simple_cycle(g, [&](const std::vector<Vertex>& c) {
        const auto len = static_cast<std::int32_t>(c.size());
        if (len <= best) return;
        for (std::int32_t i = 0; i < len; ++i)
            for (std::int32_t j = i + 1; j < len; ++j)
                if (d[c[i]][c[j]] != std::min(j - i, len - j + i)) return;
        best = len;
    });
    return best;
}

/// Longest induced cycle by enumerating all simple cycles.
inline std::int32_t brute_chordality(const Graph& g) {
    const auto a = adjacency_matrix(g);
    std::int32_t best = 0;
    for_each_simple_cycle(g, [&](const std::vector<Vertex>& c) {
        const auto len = c.size();
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 2; j < len; ++j)
                if (a[c[i]][c[j]] && !(i == 0 && j == len - 1)) return;
        best = std::max(best, static_cast<std::int32_t>(len));
    });
    return best;
}

/// True iff s and t are joined by a path with distinct edge colours,
/// searched over simple paths with an adjacency matrix.
inline bool brute_rainbow_path(const Graph& g, const std::vector<std::int32_t>& colour, Vertex s, Vertex t) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<std::int32_t>> c(n, std::vector<std::int32_t>(n, -1));
    for (std::size_t id = 0; id < g.edges().size(); ++id) {
        const Edge e = g.edges()[id];
        c[e.u][e.v] = c[e.v][e.u] = colour[id];
    }
    std::vector<char> on(n, 0);
    std::vector<std::int32_t> used;
    std::function<bool(Vertex)> dfs = [&](Vertex x) {
        if (x == t) return true;
        on[x] = 1;
        for (Vertex y = 0; y < static_cast<Vertex>(n); ++y) {
            if (c[x][y] < 0 || on[y] || std::find(used.begin(), used.end(), c[x][y]) != used.end()) continue;
            used.push_back(c[x][y]);
            const bool ok = dfs(y);
            used.pop_back();
            if (ok) return on[x] = 0, true;
        }
        on[x] = 0;
        return false;
    };
    return dfs(s);
}

inline bool brute_rainbow_connected(const Graph& g, const std::vector<std::int32_t>& colour) {
    for (Vertex s = 0; s < g.vertex_count(); ++s)
        for (Vertex t = s + 1; t < g.vertex_count(); ++t)
            if (!brute_rainbow_path(g, colour, s, t)) return false;
    return true;
}

/// All graphs on n vertices (one per edge subset), connected ones only.
inline std::vector<Graph> connected_graphs(Vertex n, std::size_t max_edges = 64) {
    std::vector<Edge> all;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) all.push_back({i, j});
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_edges) continue;
        std::vector<Edge> e;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) e.push_back(all[i]);
        Graph g = Graph::from_edges(static_cast<std::size_t>(n), e);
        if (rainbow::is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace testing_support
