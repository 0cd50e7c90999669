#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct VerifyOptions {
    std::size_t max_palette = 62;
};

/// Default options, honouring RAINBOW_MAX_VERIFY_COLOURS when set.
inline VerifyOptions verify_options_from_env() {
    VerifyOptions opts;
    if (const char* env = std::getenv("RAINBOW_MAX_VERIFY_COLOURS"); env && *env) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0 || v > 64) {
            throw InputError(std::string("RAINBOW_MAX_VERIFY_COLOURS must be an integer in 1..64, got '") + env + "'");
        }
        opts.max_palette = static_cast<std::size_t>(v);
    }
    return opts;
}

struct VerificationResult {
    bool rainbow_connected = true;
    std::optional<std::pair<Vertex, Vertex>> witness_failure;
    std::size_t pairs_checked = 0;
};

/// Reachability by rainbow walks from a fixed source. Search states are
/// (vertex, set of colours used); a state is dropped when its vertex
/// already holds a subset of its colour set. A rainbow walk always
/// contains a rainbow path, so walks are enough.
///
/// Buffers are kept between calls, which matters for the exact oracle.
class RainbowSearch {
public:
    RainbowSearch(const Graph& g, const EdgeColouring& c, const VerifyOptions& opts = {}) : g_(&g) {
        if (c.size() != static_cast<std::size_t>(g.edge_count())) {
            throw InputError("colouring does not match the graph's edge count");
        }
        if (!c.is_total()) throw InputError("colouring is partial; every edge needs a colour");
        const auto palette = c.palette();
        const std::size_t cap = std::min<std::size_t>(opts.max_palette, 64);
        if (palette.size() > cap) {
            throw CapacityError("palette of " + std::to_string(palette.size()) +
                                " colours exceeds the verifier cap of " + std::to_string(cap) +
                                " (set RAINBOW_MAX_VERIFY_COLOURS, or check with path enumeration)");
        }
        bit_.resize(c.size());
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const auto idx = std::lower_bound(palette.begin(), palette.end(), c[id]) - palette.begin();
            bit_[static_cast<std::size_t>(id)] = std::uint64_t{1} << idx;
        }
        const auto n = static_cast<std::size_t>(g.vertex_count());
        frontier_.resize(n);
        reached_.resize(n);
    }

    /// Marks every vertex joined to `source` by a rainbow path. Stops early
    /// once `target` (if given) is reached.
    const std::vector<char>& reach_from(Vertex source, Vertex target = kNoVertex) {
        for (auto& f : frontier_) f.clear();
        std::fill(reached_.begin(), reached_.end(), 0);
        queue_.clear();
        std::size_t remaining = reached_.size();
        auto visit = [&](Vertex v, std::uint64_t used) {
            auto& sets = frontier_[static_cast<std::size_t>(v)];
            for (std::uint64_t s : sets) {
                if ((s & used) == s) return false;
            }
            std::erase_if(sets, [used](std::uint64_t s) { return (s & used) == used; });
            sets.push_back(used);
            if (!reached_[static_cast<std::size_t>(v)]) {
                reached_[static_cast<std::size_t>(v)] = 1;
                --remaining;
            }
            queue_.emplace_back(v, used);
            return true;
        };
        visit(source, 0);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            if (remaining == 0 || (target != kNoVertex && reached_[static_cast<std::size_t>(target)])) break;
            const auto [x, used] = queue_[head];
            for (const Neighbour& nb : g_->neighbours(x)) {
                const std::uint64_t b = bit_[static_cast<std::size_t>(nb.edge)];
                if (used & b) continue;
                visit(nb.vertex, used | b);
            }
        }
        return reached_;
    }

private:
    const Graph* g_;
    std::vector<std::uint64_t> bit_;
    std::vector<std::vector<std::uint64_t>> frontier_;
    std::vector<char> reached_;
    std::vector<std::pair<Vertex, std::uint64_t>> queue_;
};

inline bool rainbow_path_exists(const Graph& g, const EdgeColouring& c, Vertex u, Vertex v,
                                const VerifyOptions& opts = {}) {
    if (!g.valid(u) || !g.valid(v)) throw InputError("rainbow_path_exists: vertex out of range");
    RainbowSearch search(g, c, opts);
    if (u == v || g.has_edge(u, v)) return true;
    return search.reach_from(u, v)[static_cast<std::size_t>(v)] != 0;
}

/// Checks every unordered pair; on failure reports the lexicographically
/// least pair with no rainbow path.
inline VerificationResult verify_rainbow_connected(const Graph& g, const EdgeColouring& c,
                                                   const VerifyOptions& opts = {}) {
    require_connected(g, "verify_rainbow_connected");
    RainbowSearch search(g, c, opts);
    VerificationResult out;
    for (Vertex s = 0; s + 1 < g.vertex_count(); ++s) {
        const auto& reached = search.reach_from(s);
        for (Vertex t = s + 1; t < g.vertex_count(); ++t) {
            ++out.pairs_checked;
            if (!reached[static_cast<std::size_t>(t)]) {
                out.rainbow_connected = false;
                out.witness_failure = {s, t};
                return out;
            }
        }
    }
    return out;
}

}  // namespace rainbow
