#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr std::int32_t kUnreachable = -1;

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    [[nodiscard]] constexpr Edge normalized() const noexcept {
        return u <= v ? Edge{u, v} : Edge{v, u};
    }
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbour {
    Vertex vertex;
    EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order of their normalized endpoints and
/// an edge's id is its index in that order. Neighbour lists are sorted by
/// vertex id, which every traversal in the library relies on for
/// deterministic tie-breaking.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary edge list. Parallel edges are merged;
    /// self-loops and out-of-range endpoints are rejected with the index of
    /// the offending entry.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edge_list) {
        if (vertex_count > static_cast<std::size_t>(INT32_MAX)) {
            throw InputError("vertex count too large");
        }
        const auto n = static_cast<Vertex>(vertex_count);
        Graph g;
        g.n_ = n;
        g.edges_.reserve(edge_list.size());
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            const Edge e = edge_list[i];
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
                throw InputError("edge " + std::to_string(i) + " (" + std::to_string(e.u) + ", " +
                                     std::to_string(e.v) + "): endpoint out of range 0.." +
                                     std::to_string(n - 1),
                                 i);
            }
            if (e.u == e.v) {
                throw InputError("edge " + std::to_string(i) + ": self-loop at vertex " +
                                     std::to_string(e.u),
                                 i);
            }
            g.edges_.push_back(e.normalized());
        }
        if (!std::is_sorted(g.edges_.begin(), g.edges_.end())) sort_edges(g.edges_, n);
        g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
        if (g.edges_.size() > static_cast<std::size_t>(INT32_MAX)) {
            throw InputError("edge count too large");
        }

        g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const Edge& e : g.edges_) {
            ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
            ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
        }
        for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
            g.offsets_[i] += g.offsets_[i - 1];
        }
        // Edges are sorted by (u, v), so every vertex receives its smaller
        // neighbours (as the v side) before its larger ones, each group in
        // increasing order: the lists come out sorted without a second pass.
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        g.adjacency_.resize(g.edges_.size() * 2);
        for (std::size_t id = 0; id < g.edges_.size(); ++id) {
            const Edge e = g.edges_[id];
            g.adjacency_[fill[static_cast<std::size_t>(e.u)]++] = {e.v, static_cast<EdgeId>(id)};
            g.adjacency_[fill[static_cast<std::size_t>(e.v)]++] = {e.u, static_cast<EdgeId>(id)};
        }
        return g;
    }

    static Graph from_edges(std::size_t vertex_count, std::initializer_list<Edge> edge_list) {
        return from_edges(vertex_count, std::span<const Edge>(edge_list.begin(), edge_list.size()));
    }

    [[nodiscard]] Vertex vertex_count() const noexcept { return n_; }
    [[nodiscard]] EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }

    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] Edge edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

    [[nodiscard]] std::span<const Neighbour> neighbours(Vertex v) const {
        const auto i = static_cast<std::size_t>(v);
        return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbours(v).size(); }

    [[nodiscard]] std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
        const auto list = neighbours(a);
        const auto it = std::lower_bound(list.begin(), list.end(), b,
                                         [](const Neighbour& x, Vertex key) { return x.vertex < key; });
        if (it == list.end() || it->vertex != b) return std::nullopt;
        return it->edge;
    }
    [[nodiscard]] bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    [[nodiscard]] bool valid(Vertex v) const noexcept { return v >= 0 && v < n_; }

private:
    /// Lexicographic sort in O(n + m): stable counting sort on v, then on u.
    static void sort_edges(std::vector<Edge>& edges, Vertex n) {
        std::vector<Edge> buffer(edges.size());
        std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1);
        auto pass = [&](auto key, const std::vector<Edge>& from, std::vector<Edge>& to) {
            std::fill(start.begin(), start.end(), 0);
            for (const Edge& e : from) ++start[static_cast<std::size_t>(key(e)) + 1];
            for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
            for (const Edge& e : from) to[start[static_cast<std::size_t>(key(e))]++] = e;
        };
        pass([](const Edge& e) { return e.v; }, edges, buffer);
        pass([](const Edge& e) { return e.u; }, buffer, edges);
    }

    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbour> adjacency_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edge_list) {
    return Graph::from_edges(n, edge_list);
}

/// Hop distances from a source (or a source set); kUnreachable marks
/// vertices in other components.
struct DistanceVector {
    Vertex source = kNoVertex;
    std::vector<std::int32_t> dist;

    [[nodiscard]] std::int32_t operator[](Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool reachable(Vertex v) const { return (*this)[v] != kUnreachable; }
};

/// Multi-source BFS; every source gets distance 0.
inline std::vector<std::int32_t> bfs_from_set(const Graph& g, std::span<const Vertex> sources) {
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex s : sources) {
        if (!g.valid(s)) throw InputError("BFS source " + std::to_string(s) + " out of range");
        if (dist[static_cast<std::size_t>(s)] == 0) continue;
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        const std::int32_t next = dist[static_cast<std::size_t>(x)] + 1;
        for (const Neighbour& nb : g.neighbours(x)) {
            auto& d = dist[static_cast<std::size_t>(nb.vertex)];
            if (d == kUnreachable) {
                d = next;
                queue.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

inline DistanceVector bfs_distances(const Graph& g, Vertex source) {
    const Vertex src[] = {source};
    return DistanceVector{source, bfs_from_set(g, src)};
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.dist.begin(), d.dist.end(), [](auto x) { return x == kUnreachable; });
}

inline void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw PreconditionError(std::string(what) + ": graph is not connected");
}

/// Largest distance from v; throws when some vertex is unreachable.
inline std::int32_t eccentricity(const Graph& g, Vertex v) {
    const auto d = bfs_distances(g, v);
    std::int32_t ecc = 0;
    for (auto x : d.dist) {
        if (x == kUnreachable) throw PreconditionError("eccentricity: graph is not connected");
        ecc = std::max(ecc, x);
    }
    return ecc;
}

struct GraphMetrics {
    std::int32_t radius = 0;
    std::int32_t diameter = 0;
    Vertex center = kNoVertex;  // lowest-id vertex of minimum eccentricity
};

/// Radius, diameter and centre by one BFS per vertex, O(nm).
inline GraphMetrics radius_diameter_center(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("radius_diameter_center: empty graph");
    GraphMetrics out;
    out.radius = INT32_MAX;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto ecc = eccentricity(g, v);
        if (ecc < out.radius) {
            out.radius = ecc;
            out.center = v;
        }
        out.diameter = std::max(out.diameter, ecc);
    }
    return out;
}

}  // namespace rainbow
