#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Upper limit on vertices produced by the composite (tight-example)
/// generators.
inline constexpr std::int64_t kCompositeVertexCap = 1'000'000;

namespace detail {

/// base^exp + 1, saturating at INT64_MAX.
inline std::int64_t power_plus_one(std::int64_t base, std::int32_t exp) {
    std::int64_t value = 1;
    for (std::int32_t i = 0; i < exp; ++i) {
        if (value > INT64_MAX / base) return INT64_MAX;
        value *= base;
    }
    return value == INT64_MAX ? value : value + 1;
}

inline void require(bool ok, const std::string& message) {
    if (!ok) throw InputError(message);
}

}  // namespace detail

/// sum_{i=1..r} min(2i+1, zeta): the colour count the tight H composites need.
inline std::int32_t h_bound(std::int32_t r, std::int32_t zeta) {
    std::int32_t total = 0;
    for (std::int32_t i = 1; i <= r; ++i) total += std::min(2 * i + 1, zeta);
    return total;
}

/// Chain of r cycles: x_{i-1} and x_i are joined by a direct edge and by
/// an internally disjoint path of length min(2i, zeta-1), so cycle i has
/// length min(2i+1, zeta). Vertex i is x_i (x_0 = v, x_r = u, ecc(u) = r);
/// path-internal vertices follow.
inline Graph gen_h(std::int32_t r, std::int32_t zeta) {
    detail::require(r >= 1, "gen_h: r must be at least 1");
    detail::require(zeta >= 3 && zeta <= 2 * r + 1, "gen_h: zeta must lie in 3..2r+1");
    std::vector<Edge> edges;
    Vertex next = r + 1;
    for (std::int32_t i = 1; i <= r; ++i) {
        edges.push_back({i - 1, i});
        const std::int32_t len = std::min(2 * i, zeta - 1);
        Vertex prev = i - 1;
        for (std::int32_t step = 1; step < len; ++step) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, i});
    }
    return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

/// The vertex u = x_r of gen_h(r, zeta).
inline Vertex h_centre(std::int32_t r) { return r; }

/// bound^r + 1 copies of H_{r,zeta} glued at u. Vertex 0 is the shared u.
inline Graph gen_theorem_tight(std::int32_t r, std::int32_t zeta) {
    const Graph h = gen_h(r, zeta);
    const std::int64_t copies = detail::power_plus_one(h_bound(r, zeta), r);
    const std::int64_t per_copy = h.vertex_count() - 1;
    if (copies == INT64_MAX || copies > (kCompositeVertexCap - 1) / per_copy) {
        throw CapacityError("gen_theorem_tight: needs " +
                            (copies == INT64_MAX ? std::string("more than 2^63") : std::to_string(copies)) +
                            " copies of H(" + std::to_string(r) + "," + std::to_string(zeta) +
                            "), over the " + std::to_string(kCompositeVertexCap) + "-vertex cap");
    }
    const Vertex u = h_centre(r);
    auto relabel = [&](Vertex x, std::int64_t copy) -> Vertex {
        if (x == u) return 0;
        const Vertex local = x < u ? x + 1 : x;  // 1..n_h-1
        return static_cast<Vertex>(1 + copy * per_copy + (local - 1));
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(copies) * static_cast<std::size_t>(h.edge_count()));
    for (std::int64_t c = 0; c < copies; ++c) {
        for (const Edge& e : h.edges()) edges.push_back({relabel(e.u, c), relabel(e.v, c)});
    }
    return Graph::from_edges(static_cast<std::size_t>(1 + copies * per_copy), edges);
}

/// Layer offsets s(0) = 0, s(i) = 2 * (r + (r-1) + ... + (r-i+1)).
inline std::vector<std::int32_t> x_shortcut_layers(std::int32_t r) {
    std::vector<std::int32_t> s{0};
    for (std::int32_t i = 1; i <= r; ++i) s.push_back(s.back() + 2 * (r - i + 1));
    return s;
}

/// Layered graph X_{r,kappa}: layers V_0..V_{t-1} of kappa vertices and
/// V_t = {x_{t,0}}, t = r(r+1); vertices in equal or adjacent layers are
/// adjacent, plus shortcut edges x_{s(i),0} - x_{s(i+1),0}. Vertex
/// x_{i,j} has id i*kappa + j.
inline Graph gen_x(std::int32_t r, std::int32_t kappa) {
    detail::require(r >= 1, "gen_x: r must be at least 1");
    detail::require(kappa >= 1, "gen_x: kappa must be at least 1");
    const std::int64_t t = static_cast<std::int64_t>(r) * (r + 1);
    const std::int64_t n = t * kappa + 1;
    if (n > kCompositeVertexCap) throw CapacityError("gen_x: too many vertices");
    auto id = [&](std::int64_t layer, std::int32_t j) { return static_cast<Vertex>(layer * kappa + j); };
    auto width = [&](std::int64_t layer) { return layer == t ? 1 : kappa; };
    std::vector<Edge> edges;
    for (std::int64_t i = 0; i <= t; ++i) {
        for (std::int32_t j = 0; j < width(i); ++j) {
            for (std::int32_t j2 = j + 1; j2 < width(i); ++j2) edges.push_back({id(i, j), id(i, j2)});
            if (i < t) {
                for (std::int32_t j2 = 0; j2 < width(i + 1); ++j2) edges.push_back({id(i, j), id(i + 1, j2)});
            }
        }
    }
    const auto s = x_shortcut_layers(r);
    for (std::int32_t i = 0; i < r; ++i) edges.push_back({id(s[i], 0), id(s[i + 1], 0)});
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

/// r(r+2)^r + 1 copies of X_{r,kappa} sharing layer V_0 (ids 0..kappa-1).
inline Graph gen_example_tight(std::int32_t r, std::int32_t kappa) {
    const Graph x = gen_x(r, kappa);
    const std::int64_t copies = detail::power_plus_one(static_cast<std::int64_t>(r) * (r + 2), r);
    const std::int64_t per_copy = x.vertex_count() - kappa;
    if (copies == INT64_MAX || copies > (kCompositeVertexCap - kappa) / per_copy) {
        throw CapacityError("gen_example_tight: needs " +
                            (copies == INT64_MAX ? std::string("more than 2^63") : std::to_string(copies)) +
                            " copies of X(" + std::to_string(r) + "," + std::to_string(kappa) +
                            "), over the " + std::to_string(kCompositeVertexCap) + "-vertex cap");
    }
    auto relabel = [&](Vertex v, std::int64_t copy) -> Vertex {
        if (v < kappa) return v;
        return static_cast<Vertex>(kappa + copy * per_copy + (v - kappa));
    };
    std::vector<Edge> edges;
    for (std::int64_t c = 0; c < copies; ++c) {
        for (const Edge& e : x.edges()) edges.push_back({relabel(e.u, c), relabel(e.v, c)});
    }
    return Graph::from_edges(static_cast<std::size_t>(kappa + copies * per_copy), edges);
}

enum class ClassicFamily { path, cycle, star, complete };

/// path(n) = P_n on n vertices, cycle(n) = C_n, star(n) = K_{1,n} with hub
/// 0, complete(n) = K_n.
inline Graph gen_classic(ClassicFamily family, std::int32_t n) {
    detail::require(n >= 1, "gen_classic: n must be at least 1");
    std::vector<Edge> edges;
    Vertex vertices = n;
    switch (family) {
        case ClassicFamily::path:
            for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case ClassicFamily::cycle:
            detail::require(n >= 3, "gen_classic: a cycle needs n >= 3");
            for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
            break;
        case ClassicFamily::star:
            vertices = n + 1;
            for (Vertex i = 1; i <= n; ++i) edges.push_back({0, i});
            break;
        case ClassicFamily::complete:
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
            }
            break;
    }
    return Graph::from_edges(static_cast<std::size_t>(vertices), edges);
}

namespace detail {

inline Vertex draw(std::mt19937_64& rng, Vertex bound) {
    return std::uniform_int_distribution<Vertex>(0, bound - 1)(rng);
}

inline std::uint64_t pair_key(Vertex a, Vertex b) {
    const Edge e = Edge{a, b}.normalized();
    return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
}

/// Adds uniformly random new edges until `edges` has `target` of them.
inline void add_random_chords(std::vector<Edge>& edges, Vertex n, std::int64_t target, std::mt19937_64& rng) {
    std::unordered_set<std::uint64_t> present;
    present.reserve(static_cast<std::size_t>(target) * 2);
    for (const Edge& e : edges) present.insert(pair_key(e.u, e.v));
    while (static_cast<std::int64_t>(edges.size()) < target) {
        const Vertex a = draw(rng, n), b = draw(rng, n);
        if (a == b || !present.insert(pair_key(a, b)).second) continue;
        edges.push_back({a, b});
    }
}

}  // namespace detail

/// Random Hamiltonian cycle through all n vertices plus random chords up to
/// m edges: always connected and bridgeless. Deterministic in the seed.
inline Graph gen_random_bridgeless(std::int32_t n, std::int64_t m, std::uint64_t seed) {
    detail::require(n >= 3, "gen_random_bridgeless: n must be at least 3");
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    detail::require(m >= n && m <= max_m, "gen_random_bridgeless: m must lie in n..n(n-1)/2");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < order.size(); ++i) edges.push_back({order[i], order[(i + 1) % order.size()]});
    detail::add_random_chords(edges, n, m, rng);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

/// Random labelled tree (each vertex i > 0 attaches to a random earlier
/// vertex of a shuffled order) plus random extra edges up to m.
inline Graph gen_random_connected(std::int32_t n, std::int64_t m, std::uint64_t seed) {
    detail::require(n >= 1, "gen_random_connected: n must be at least 1");
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    detail::require(m >= n - 1 && m <= max_m, "gen_random_connected: m must lie in n-1..n(n-1)/2");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(detail::draw(rng, i))]});
    }
    detail::add_random_chords(edges, n, m, rng);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline Graph gen_random_tree(std::int32_t n, std::uint64_t seed) { return gen_random_connected(n, n - 1, seed); }

/// Family tag plus parameters, as accepted by the CLI and bench spec files.
struct FamilySpec {
    std::string family;  // h, theorem-tight, x, example-tight, path, cycle, star, complete,
                         // random-bridgeless, random-connected, random-tree
    std::int32_t r = 1;
    std::int32_t zeta = 3;
    std::int32_t kappa = 1;
    std::int32_t n = 0;
    std::int64_t m = 0;
    std::uint64_t seed = 0;
};

inline Graph generate(const FamilySpec& spec) {
    const std::string_view f = spec.family;
    if (f == "h") return gen_h(spec.r, spec.zeta);
    if (f == "theorem-tight") return gen_theorem_tight(spec.r, spec.zeta);
    if (f == "x") return gen_x(spec.r, spec.kappa);
    if (f == "example-tight") return gen_example_tight(spec.r, spec.kappa);
    if (f == "path") return gen_classic(ClassicFamily::path, spec.n);
    if (f == "cycle") return gen_classic(ClassicFamily::cycle, spec.n);
    if (f == "star") return gen_classic(ClassicFamily::star, spec.n);
    if (f == "complete") return gen_classic(ClassicFamily::complete, spec.n);
    if (f == "random-bridgeless") return gen_random_bridgeless(spec.n, spec.m, spec.seed);
    if (f == "random-connected") return gen_random_connected(spec.n, spec.m, spec.seed);
    if (f == "random-tree") return gen_random_tree(spec.n, spec.seed);
    throw InputError("unknown graph family '" + spec.family + "'");
}

}  // namespace rainbow
