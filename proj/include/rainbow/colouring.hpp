#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Colour = std::int32_t;
inline constexpr Colour kUncoloured = -1;

/// Partial or total map from edge ids of one graph to colour ids.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(std::size_t edge_count) : colour_(edge_count, kUncoloured) {}
    explicit EdgeColouring(std::vector<Colour> colours) : colour_(std::move(colours)) {}

    [[nodiscard]] std::size_t size() const noexcept { return colour_.size(); }
    [[nodiscard]] Colour operator[](EdgeId id) const { return colour_[static_cast<std::size_t>(id)]; }
    [[nodiscard]] bool is_coloured(EdgeId id) const { return (*this)[id] != kUncoloured; }
    void set(EdgeId id, Colour c) { colour_[static_cast<std::size_t>(id)] = c; }

    [[nodiscard]] bool is_total() const {
        return std::none_of(colour_.begin(), colour_.end(), [](Colour c) { return c == kUncoloured; });
    }

    [[nodiscard]] std::vector<Colour> palette() const {
        std::vector<Colour> p;
        if (colour_.empty()) return p;
        const auto [low, high] = std::minmax_element(colour_.begin(), colour_.end());
        const Colour top = *high;
        if (top == kUncoloured) return p;
        if (*low >= kUncoloured && static_cast<std::size_t>(top) <= 4 * colour_.size() + 1024) {
            // Dense ids (the usual case): mark and collect in linear time.
            std::vector<char> seen(static_cast<std::size_t>(top) + 1, 0);
            for (Colour c : colour_) {
                if (c != kUncoloured) seen[static_cast<std::size_t>(c)] = 1;
            }
            for (Colour c = 0; c <= top; ++c) {
                if (seen[static_cast<std::size_t>(c)]) p.push_back(c);
            }
            return p;
        }
        for (Colour c : colour_) {
            if (c != kUncoloured) p.push_back(c);
        }
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        return p;
    }
    [[nodiscard]] std::size_t palette_size() const { return palette().size(); }

    /// Renumbers colours to 0..palette_size-1 preserving their order.
    void normalize() {
        const auto p = palette();
        for (Colour& c : colour_) {
            if (c != kUncoloured) c = static_cast<Colour>(std::lower_bound(p.begin(), p.end(), c) - p.begin());
        }
    }

    [[nodiscard]] std::span<const Colour> raw() const noexcept { return colour_; }

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    std::vector<Colour> colour_;
};

}  // namespace rainbow
