#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct ExactResult {
    std::int32_t rc = 0;
    EdgeColouring witness;
    std::int32_t lower_bound_used = 0;
    std::uint64_t colourings_tested = 0;
};

struct ExactOptions {
    EdgeId max_edges = 16;
    std::optional<std::int32_t> max_colours;
};

/// max(diameter, number of bridges), and at least 1 once there is an edge.
inline std::int32_t rc_lower_bound(const Graph& g) {
    require_connected(g, "rc_lower_bound");
    if (g.edge_count() == 0) return 0;
    const auto metrics = radius_diameter_center(g);
    const auto bridges = static_cast<std::int32_t>(find_bridges(g).count());
    return std::max({metrics.diameter, bridges, 1});
}

/// Exact rainbow connection number by exhaustive search over colourings.
///
/// For each k from the lower bound upward, enumerates surjective
/// colourings onto k colours as restricted-growth strings over the edge
/// list (edge i may only use a colour already seen on edges 0..i-1 or the
/// next unused one), so each colour-permutation class is tried once.
inline ExactResult exact_rc(const Graph& g, const ExactOptions& opts = {}) {
    require_connected(g, "exact_rc");
    const EdgeId m = g.edge_count();
    if (m > opts.max_edges) {
        throw CapacityError("exact_rc: " + std::to_string(m) + " edges exceeds cap " +
                            std::to_string(opts.max_edges) + " (raise with --max-edges)");
    }
    ExactResult out;
    out.lower_bound_used = rc_lower_bound(g);
    if (m == 0) {
        out.witness = EdgeColouring(0);
        return out;
    }
    const std::int32_t top = std::min<std::int32_t>(opts.max_colours.value_or(m), m);
    const VerifyOptions vopts{64};
    std::vector<Colour> colours(static_cast<std::size_t>(m), 0);

    for (std::int32_t k = out.lower_bound_used; k <= top; ++k) {
        bool found = false;
        // Position i with current maximum colour `high`.
        auto search = [&](auto&& self, EdgeId i, Colour high) -> void {
            if (found) return;
            if (i == m) {
                if (high + 1 != k) return;
                ++out.colourings_tested;
                const EdgeColouring c(colours);
                RainbowSearch rs(g, c, vopts);
                for (Vertex s = 0; s + 1 < g.vertex_count(); ++s) {
                    const auto& reached = rs.reach_from(s);
                    if (std::count(reached.begin() + s + 1, reached.end(), 1) != g.vertex_count() - s - 1) return;
                }
                found = true;
                out.witness = c;
                return;
            }
            // Too few positions left to introduce the missing colours.
            if ((k - 1 - high) > (m - i)) return;
            const Colour limit = std::min<Colour>(high + 1, k - 1);
            for (Colour c = 0; c <= limit && !found; ++c) {
                colours[static_cast<std::size_t>(i)] = c;
                self(self, i + 1, std::max(high, c));
            }
        };
        colours[0] = 0;
        search(search, 1, 0);
        if (found) {
            out.rc = k;
            return out;
        }
    }
    throw CapacityError("exact_rc: no rainbow colouring with at most " + std::to_string(top) + " colours");
}

namespace detail {

/// Rainbow connectivity by explicit simple-path enumeration between every
/// pair; shares nothing with RainbowSearch.
inline bool rainbow_connected_by_paths(const Graph& g, const std::vector<Colour>& colour) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> on_path(n, 0);
    std::vector<char> used;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (Vertex t = s + 1; t < g.vertex_count(); ++t) {
            used.assign(static_cast<std::size_t>(g.edge_count()) + 1, 0);
            auto dfs = [&](auto&& self, Vertex x) -> bool {
                if (x == t) return true;
                on_path[static_cast<std::size_t>(x)] = 1;
                bool ok = false;
                for (const Neighbour& nb : g.neighbours(x)) {
                    const auto c = static_cast<std::size_t>(colour[static_cast<std::size_t>(nb.edge)]);
                    if (on_path[static_cast<std::size_t>(nb.vertex)] || used[c]) continue;
                    used[c] = 1;
                    ok = self(self, nb.vertex);
                    used[c] = 0;
                    if (ok) break;
                }
                on_path[static_cast<std::size_t>(x)] = 0;
                return ok;
            };
            if (!dfs(dfs, s)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Brute force: every one of the k^m colourings for k = 1, 2, ..., checked
/// by path enumeration. Only for tiny graphs (m <= 8).
inline ExactResult exact_rc_naive(const Graph& g) {
    require_connected(g, "exact_rc_naive");
    const EdgeId m = g.edge_count();
    if (m > 8) throw CapacityError("exact_rc_naive: " + std::to_string(m) + " edges exceeds cap 8");
    ExactResult out;
    if (m == 0) {
        out.witness = EdgeColouring(0);
        return out;
    }
    std::vector<Colour> colours(static_cast<std::size_t>(m));
    for (std::int32_t k = 1; k <= m; ++k) {
        std::fill(colours.begin(), colours.end(), 0);
        while (true) {
            ++out.colourings_tested;
            if (detail::rainbow_connected_by_paths(g, colours)) {
                out.rc = k;
                out.witness = EdgeColouring(colours);
                return out;
            }
            std::size_t i = 0;
            while (i < colours.size() && ++colours[i] == k) colours[i++] = 0;
            if (i == colours.size()) break;
        }
    }
    throw std::logic_error("exact_rc_naive: a spanning-tree colouring always exists");
}

}  // namespace rainbow
