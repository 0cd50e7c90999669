#include <random>

#include <gtest/gtest.h>

#include "rainbow/approx.hpp"
#include "rainbow/generators.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

Graph triangle_edge_triangle() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

ColourOptions verifying() {
    ColourOptions o;
    o.verify = true;
    return o;
}

}  // namespace

TEST(LayerSum, Values) {
    EXPECT_EQ(layer_sum_bound(0), 0);
    EXPECT_EQ(layer_sum_bound(1), 3);
    EXPECT_EQ(layer_sum_bound(3), 15);
    EXPECT_EQ(layer_sum_bound(3, 5), 3 + 5 + 5);
    EXPECT_EQ(layer_sum_bound(2, 5), h_bound(2, 5));
}

TEST(Approx, CompleteGraphs) {
    for (Vertex n = 3; n <= 8; ++n) {
        const auto res = colour_bridgeless_radius(gen_classic(ClassicFamily::complete, n), verifying());
        EXPECT_LE(res.report.colours_used, 3);
        EXPECT_EQ(res.report.verified, true);
        EXPECT_EQ(res.report.radius, 1);
    }
}

TEST(Approx, HGraphWithinBound) {
    const Graph h = gen_h(2, 5);
    for (const auto& res : {colour_bridgeless_radius(h, verifying()), colour_bridgeless_diameter(h, verifying())}) {
        EXPECT_LE(res.report.colours_used, 8);
        EXPECT_TRUE(res.report.bound_ok);
        EXPECT_EQ(res.report.verified, true);
    }
    EXPECT_EQ(eccentricity(h, colour_bridgeless_radius(h).report.seed), 2);
}

TEST(Approx, TrivialAndRejected) {
    const auto one = colour_bridgeless_radius(Graph::from_edges(1, {}), verifying());
    EXPECT_EQ(one.report.colours_used, 0);
    EXPECT_EQ(one.report.verified, true);
    EXPECT_THROW(colour_bridgeless_radius(Graph::from_edges(2, {{0, 1}})), PreconditionError);
    EXPECT_THROW(colour_bridgeless_diameter(triangle_edge_triangle()), PreconditionError);
    EXPECT_THROW(colour_bridgeless_radius(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST(Approx, EvenCycle) {
    const auto res = colour_bridgeless_radius(gen_classic(ClassicFamily::cycle, 6), verifying());
    EXPECT_EQ(res.report.verified, true);
    EXPECT_EQ(res.report.zeta, 6);
    EXPECT_EQ(res.report.bound, 3 + 5 + 6);
    EXPECT_LE(res.report.colours_used, res.report.bound);
}

TEST(General, TreesUseOneColourPerEdge) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph t = gen_random_tree(12, seed);
        const auto res = colour_general(t, PipelineMode::general_radius, verifying());
        EXPECT_EQ(res.report.colours_used, 11);
        EXPECT_EQ(res.report.verified, true);
    }
    const auto star = colour_general(gen_classic(ClassicFamily::star, 5), PipelineMode::general_diameter, verifying());
    EXPECT_EQ(star.report.colours_used, 5);
    EXPECT_EQ(star.report.bridges, 5);
}

TEST(General, TriangleEdgeTriangle) {
    const Graph g = triangle_edge_triangle();
    const auto res = colour_general(g, PipelineMode::general_radius, verifying());
    EXPECT_EQ(res.report.bridges, 1);
    EXPECT_EQ(res.report.verified, true);
    EXPECT_TRUE(res.report.bound_ok);
    // The bridge colour appears nowhere else.
    const Colour bridge = res.colouring[*g.find_edge(2, 3)];
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (id != *g.find_edge(2, 3)) EXPECT_NE(res.colouring[id], bridge);
    }
}

TEST(GeneralProperty, LiftIsRainbowAndWithinBound) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::int32_t>(2 + rng() % 30);
        const auto max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const auto m = std::min<std::int64_t>(max_m, n - 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)));
        const Graph g = gen_random_connected(n, m, rng());
        const auto b = static_cast<std::int32_t>(find_bridges(g).count());
        const auto r = radius_diameter_center(g).radius;
        const auto q = contract_bridges(g);
        const auto qr = q.quotient.vertex_count() > 1 ? radius_diameter_center(q.quotient).radius : 0;
        for (auto mode : {PipelineMode::general_radius, PipelineMode::general_diameter}) {
            const auto res = colour_general(g, mode, verifying());
            ASSERT_EQ(res.report.verified, true);
            EXPECT_TRUE(res.report.bound_ok);
            EXPECT_EQ(res.report.bridges, b);
            if (mode == PipelineMode::general_radius) {
                EXPECT_LE(res.report.colours_used, qr * (qr + 2) + b);
                EXPECT_LE(res.report.colours_used, r * (r + 2) + b);
            }
        }
    }
}

TEST(ApproxProperty, RadiusModeNeverUsesMoreLayers) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::int32_t>(5 + rng() % 40);
        const Graph g = gen_random_bridgeless(n, n + static_cast<std::int64_t>(rng() % 5), rng());
        const auto rad = colour_bridgeless_radius(g, verifying());
        const auto dia = colour_bridgeless_diameter(g, verifying());
        EXPECT_LE(rad.report.layers.size(), dia.report.layers.size());
        EXPECT_LE(rad.report.bound, dia.report.bound);
        EXPECT_EQ(rad.report.verified, true);
        EXPECT_EQ(dia.report.verified, true);
        const auto d = radius_diameter_center(g).diameter;
        EXPECT_LE(dia.report.colours_used, d * (d + 2));
    }
}
