#include <random>

#include <gtest/gtest.h>

#include "rainbow/generators.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/verify.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

EdgeColouring uniform(const Graph& g, Colour c) {
    return EdgeColouring(std::vector<Colour>(static_cast<std::size_t>(g.edge_count()), c));
}

EdgeColouring distinct(const Graph& g) {
    std::vector<Colour> c(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Colour>(i);
    return EdgeColouring(c);
}

}  // namespace

TEST(Verify, CompleteGraphMonochrome) {
    const Graph k4 = gen_classic(ClassicFamily::complete, 4);
    const auto res = verify_rainbow_connected(k4, uniform(k4, 0));
    EXPECT_TRUE(res.rainbow_connected);
    EXPECT_EQ(res.pairs_checked, 6u);
}

TEST(Verify, PathNeedsDistinctColours) {
    const Graph p4 = gen_classic(ClassicFamily::path, 4);
    EXPECT_TRUE(verify_rainbow_connected(p4, EdgeColouring({0, 1, 2})).rainbow_connected);
    const auto res = verify_rainbow_connected(p4, EdgeColouring({0, 1, 0}));
    EXPECT_FALSE(res.rainbow_connected);
    EXPECT_EQ(res.witness_failure, (std::pair<Vertex, Vertex>{0, 3}));
}

TEST(Verify, FourCycleAlternating) {
    const Graph c4 = gen_classic(ClassicFamily::cycle, 4);
    // Edge order: 0-1, 0-3, 1-2, 2-3. Opposite edges share a colour.
    EXPECT_TRUE(verify_rainbow_connected(c4, EdgeColouring({0, 1, 1, 0})).rainbow_connected);
    EXPECT_FALSE(verify_rainbow_connected(c4, EdgeColouring({0, 0, 1, 1})).rainbow_connected);
}

TEST(Verify, StarWitnessIsLeastPair) {
    const Graph star = gen_classic(ClassicFamily::star, 3);
    const auto res = verify_rainbow_connected(star, EdgeColouring({0, 1, 1}));
    EXPECT_FALSE(res.rainbow_connected);
    EXPECT_EQ(res.witness_failure, (std::pair<Vertex, Vertex>{2, 3}));
    EXPECT_TRUE(rainbow_path_exists(star, EdgeColouring({0, 1, 1}), 1, 2));
    EXPECT_FALSE(rainbow_path_exists(star, EdgeColouring({0, 1, 1}), 2, 3));
}

TEST(Verify, SpanningTreeDistinctColoursAlwaysWork) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = gen_random_tree(15, seed);
        EXPECT_TRUE(verify_rainbow_connected(t, distinct(t)).rainbow_connected);
    }
}

TEST(Verify, RejectsBadInput) {
    const Graph p3 = gen_classic(ClassicFamily::path, 3);
    EXPECT_THROW(verify_rainbow_connected(p3, EdgeColouring({0})), InputError);
    EXPECT_THROW(verify_rainbow_connected(p3, EdgeColouring(std::size_t{2})), InputError);
    const Graph big = gen_classic(ClassicFamily::path, 70);
    EXPECT_THROW(verify_rainbow_connected(big, distinct(big)), CapacityError);
    EXPECT_NO_THROW(verify_rainbow_connected(gen_classic(ClassicFamily::path, 60), distinct(gen_classic(ClassicFamily::path, 60))));
    EXPECT_THROW(verify_rainbow_connected(gen_classic(ClassicFamily::path, 10),
                                          distinct(gen_classic(ClassicFamily::path, 10)), VerifyOptions{5}),
                 CapacityError);
}

TEST(Verify, EnvironmentOverride) {
    ::setenv("RAINBOW_MAX_VERIFY_COLOURS", "10", 1);
    EXPECT_EQ(verify_options_from_env().max_palette, 10u);
    ::setenv("RAINBOW_MAX_VERIFY_COLOURS", "65", 1);
    EXPECT_THROW(verify_options_from_env(), InputError);
    ::setenv("RAINBOW_MAX_VERIFY_COLOURS", "x", 1);
    EXPECT_THROW(verify_options_from_env(), InputError);
    ::unsetenv("RAINBOW_MAX_VERIFY_COLOURS");
    EXPECT_EQ(verify_options_from_env().max_palette, 62u);
}

TEST(VerifyProperty, AgreesWithPathEnumeration) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::int32_t>(2 + rng() % 7);
        const auto max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const auto m = static_cast<std::int64_t>(n - 1 + rng() % static_cast<std::uint64_t>(max_m - n + 2));
        const Graph g = gen_random_connected(n, m, rng());
        const auto k = static_cast<Colour>(1 + rng() % 4);
        std::vector<Colour> col(static_cast<std::size_t>(g.edge_count()));
        for (auto& c : col) c = static_cast<Colour>(rng() % static_cast<std::uint64_t>(k));
        const EdgeColouring colouring(col);
        const auto res = verify_rainbow_connected(g, colouring);
        ASSERT_EQ(res.rainbow_connected, testing_support::brute_rainbow_connected(g, col));
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = 0; t < n; ++t) {
                // Symmetric, and agrees with the oracle pair by pair.
                ASSERT_EQ(rainbow_path_exists(g, colouring, s, t), testing_support::brute_rainbow_path(g, col, s, t));
                ASSERT_EQ(rainbow_path_exists(g, colouring, s, t), rainbow_path_exists(g, colouring, t, s));
            }
        }
        if (res.rainbow_connected) {
            // Refining a colour class keeps the colouring rainbow connected.
            auto finer = col;
            finer[0] = 100;
            EXPECT_TRUE(verify_rainbow_connected(g, EdgeColouring(finer)).rainbow_connected);
            // Fewer colours than max(diam, bridges) can never work.
            const auto lower = std::max<std::size_t>(static_cast<std::size_t>(radius_diameter_center(g).diameter),
                                                     find_bridges(g).count());
            EXPECT_GE(colouring.palette_size(), lower);
        } else {
            const auto [s, t] = *res.witness_failure;
            EXPECT_FALSE(testing_support::brute_rainbow_path(g, col, s, t));
        }
    }
}
