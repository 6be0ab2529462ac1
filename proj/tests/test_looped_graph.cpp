#include <gtest/gtest.h>

#include <random>

#include "seidel/looped_graph.hpp"
#include "seidel/seidel_energy.hpp"
#include "seidel/theorem_verify.hpp"
#include "test_support.hpp"

using namespace seidel;

TEST(FromEdgeList, BuildsGraphsWithLoops) {
    auto k2 = LoopedGraph::from_edge_list(2, {{0, 1}});
    EXPECT_EQ(k2.order(), 2u);
    EXPECT_TRUE(k2.adjacent(0, 1));
    EXPECT_TRUE(k2.adjacent(1, 0));
    EXPECT_EQ(k2.loop_count(), 0u);

    auto p3 = LoopedGraph::from_edge_list(3, {{0, 1}, {1, 2}}, VertexSet(3, {1}));
    EXPECT_EQ(p3.edge_count(), 2u);
    EXPECT_FALSE(p3.adjacent(0, 2));
    EXPECT_TRUE(p3.has_loop(1));
    EXPECT_FALSE(p3.has_loop(0));
    EXPECT_EQ(p3.loop_count(), 1u);

    auto dot = LoopedGraph::from_edge_list(1, {}, VertexSet(1, {0}));
    EXPECT_EQ(dot.loop_count(), 1u);
}

TEST(FromEdgeList, DuplicatesCollapse) {
    auto g = LoopedGraph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(FromEdgeList, RejectsBadInput) {
    EXPECT_THROW(LoopedGraph::from_edge_list(2, {{0, 2}}), std::out_of_range);
    EXPECT_THROW(LoopedGraph::from_edge_list(2, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(LoopedGraph::from_edge_list(2, {}, VertexSet(3)), std::invalid_argument);
}

TEST(Complement, TogglesLoopsAndEdges) {
    auto g = LoopedGraph::from_edge_list(2, {{0, 1}}, VertexSet(2, {0}));
    auto c = complement(g);
    EXPECT_EQ(c.edge_count(), 0u);
    EXPECT_EQ(c.loops(), VertexSet(2, {1}));
}

TEST(Complement, MatchesSeidelIdentityOnK3) {
    auto g = add_loops(graphs::complete(3), VertexSet(3, {0}));
    auto c = complement(g);
    EXPECT_EQ(c, add_loops(graphs::empty(3), VertexSet(3, {1, 2})));

    // Entrywise oracle: S(c) = -S(g) - I.
    auto s = seidel_matrix(g);
    auto sc = seidel_matrix(c);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sc(i, j), -s(i, j) - (i == j ? 1.0 : 0.0));
}

TEST(Complement, TotalOnEmptyLoopSet) {
    auto c = complement(graphs::path(4));
    EXPECT_EQ(c.loop_count(), 4u);
    EXPECT_EQ(complement(graphs::empty(0)), graphs::empty(0));
}

TEST(SeidelSwitch, Examples) {
    auto p3 = graphs::path(3);
    EXPECT_EQ(seidel_switch(p3, VertexSet(3, {1})), graphs::empty(3));

    auto g = add_loops(graphs::cycle(5), VertexSet(5, {0, 3}));
    EXPECT_EQ(seidel_switch(g, VertexSet::all(5)), g);
    EXPECT_EQ(seidel_switch(g, VertexSet(5)), g);
    EXPECT_EQ(seidel_switch(g, VertexSet(5, {1, 2})).loops(), g.loops());
    EXPECT_THROW(seidel_switch(g, VertexSet(4)), std::invalid_argument);
}

TEST(UnionJoin, Examples) {
    auto k2 = graphs::complete(2);
    auto k2_looped = add_loops(k2, VertexSet::all(2));
    auto u = disjoint_union(k2, k2_looped);
    EXPECT_EQ(u.order(), 4u);
    EXPECT_EQ(u.edge_count(), 2u);
    EXPECT_EQ(u.loops(), VertexSet(4, {2, 3}));

    EXPECT_EQ(disjoint_union(k2, graphs::empty(0)), k2);

    auto c4 = graphs::cycle(4);
    auto cu = disjoint_union(c4, add_loops(c4, VertexSet::all(4)));
    EXPECT_EQ(cu.order(), 8u);
    EXPECT_EQ(cu.edge_count(), 8u);
    EXPECT_EQ(cu.loop_count(), 4u);

    EXPECT_EQ(join(graphs::complete(1), graphs::complete(1)), graphs::complete(2));
    EXPECT_EQ(join(k2, k2_looped), add_loops(graphs::complete(4), VertexSet(4, {2, 3})));

    auto p3 = graphs::path(3);
    EXPECT_EQ(join(c4, p3).edge_count(), c4.edge_count() + p3.edge_count() + 4 * 3);
}

TEST(UnionJoin, AssociativeOnCountsAndSpectra) {
    auto a = add_loops(graphs::path(3), VertexSet(3, {0}));
    auto b = graphs::cycle(4);
    auto c = add_loops(graphs::complete(2), VertexSet(2, {1}));
    for (auto op : {&disjoint_union, &join}) {
        auto left = op(op(a, b), c);
        auto right = op(a, op(b, c));
        EXPECT_EQ(left, right);
        EXPECT_LE(spectral_distance(seidel_spectrum(left), seidel_spectrum(right)), 1e-9);
    }
}

TEST(Loops, AddAndStrip) {
    auto k2 = graphs::complete(2);
    EXPECT_EQ(underlying(add_loops(k2, VertexSet::all(2))), k2);
    auto g = add_loops(graphs::cycle(5), VertexSet(5, {1, 4}));
    EXPECT_EQ(underlying(g).loop_count(), 0u);
    EXPECT_EQ(add_loops(g, VertexSet(5)).loop_count(), 0u);
}

TEST(Regularity, Examples) {
    EXPECT_EQ(regularity(graphs::cycle(4)), 2u);
    EXPECT_EQ(regularity(graphs::path(3)), std::nullopt);
    EXPECT_EQ(regularity(graphs::petersen()), 3u);
    // Loops do not count toward degree.
    EXPECT_EQ(regularity(add_loops(graphs::cycle(6), VertexSet(6, {0}))), 2u);
    EXPECT_EQ(graphs::petersen().edge_count(), 15u);
}

TEST(LargeOrders, BeyondOneWord) {
    const std::size_t n = 80;
    auto g = graphs::cycle(n);
    EXPECT_EQ(g.edge_count(), n);
    EXPECT_TRUE(g.adjacent(n - 1, 0));
    auto c = complement(add_loops(g, VertexSet(n, {70, 79})));
    EXPECT_EQ(c.loop_count(), n - 2);
    EXPECT_EQ(complement(c), add_loops(g, VertexSet(n, {70, 79})));
}

TEST(Properties, InvolutionsOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 20;
        auto g = add_loops(random_graph(n, rng), random_subset(n, rng));
        auto x = random_subset(n, rng);
        EXPECT_EQ(complement(complement(g)), g);
        EXPECT_EQ(seidel_switch(seidel_switch(g, x), x), g);
        EXPECT_EQ(seidel_switch(g, VertexSet(n)), g);
        EXPECT_EQ(seidel_switch(g, VertexSet::all(n)), g);
        // Switching on X and on its complement give the same graph.
        EXPECT_EQ(seidel_switch(g, x), seidel_switch(g, x.complement()));
    }
}

TEST(Properties, PermutationEquivariance) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        auto g = add_loops(random_graph(n, rng), random_subset(n, rng));
        auto perm = test_support::random_permutation(n, rng);
        auto pg = permute(g, perm);
        auto s = seidel_matrix(g);
        auto ps = seidel_matrix(pg);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(ps(perm[i], perm[j]), s(i, j));
        EXPECT_EQ(pg.edge_count(), g.edge_count());
        EXPECT_EQ(pg.loop_count(), g.loop_count());
    }
    std::vector<std::size_t> bad{0, 0, 1};
    EXPECT_THROW(permute(graphs::path(3), bad), std::invalid_argument);
}
