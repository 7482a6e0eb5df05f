#include <gtest/gtest.h>

#include <random>

#include "chroma/graph.hpp"
#include "test_support.hpp"

using namespace chroma;
using namespace chroma::testing;

TEST(Graph, FromEdgeList) {
    const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(p3.order(), 3);
    EXPECT_EQ(p3.size(), 2);
    const Graph one = Graph::from_edge_list(1, {});
    EXPECT_EQ(one.order(), 1);
    EXPECT_EQ(one.size(), 0);
    EXPECT_EQ(moser_edges().size(), 11);
}

TEST(Graph, DuplicatesMergeAndErrors) {
    EXPECT_EQ(Graph::from_edge_list(2, {{0, 1}, {1, 0}}).size(), 1);
    EXPECT_THROW(Graph::from_edge_list(2, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph::from_edge_list(2, {{0, 2}}), GraphError);
    EXPECT_THROW(Graph::from_edge_list(2, {{-1, 1}}), GraphError);
    EXPECT_THROW(Graph(65), GraphError);
    EXPECT_THROW(Graph::from_adjacency({0b10, 0b00}), GraphError);
}

TEST(Graph, EdgesSortedAndDegrees) {
    const Graph g = Graph::from_edge_list(4, {{2, 1}, {0, 3}, {1, 0}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
    EXPECT_EQ(g.min_degree(), 1);
    EXPECT_EQ(g.max_degree(), 2);
}

TEST(Graph, Connectivity) {
    EXPECT_TRUE(is_connected(complete_graph(4)));
    EXPECT_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
    EXPECT_TRUE(is_connected(moser_edges()));
    EXPECT_EQ(components(Graph::from_edge_list(5, {{0, 3}, {1, 4}})).size(), 3u);
}

TEST(TwoCore, Examples) {
    const auto tree = two_core(Graph::from_edge_list(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}));
    EXPECT_EQ(tree.core.order(), 0);
    EXPECT_EQ(tree.removed.size(), 5u);

    const Graph k4_tail = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    const auto tc = two_core(k4_tail);
    EXPECT_EQ(tc.core, complete_graph(4));
    EXPECT_EQ(tc.kept, (std::vector<VertexId>{0, 1, 2, 3}));

    EXPECT_EQ(two_core(cycle_graph(5)).core, cycle_graph(5));
}

TEST(TwoCore, IdempotentAndMinDegreeTwo) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(1 + trial % 9, 0.3, rng);
        const auto tc = two_core(g);
        EXPECT_EQ(tc.kept.size() + tc.removed.size(), static_cast<std::size_t>(g.order()));
        if (tc.core.order() > 0) EXPECT_GE(tc.core.min_degree(), 2);
        EXPECT_EQ(two_core(tc.core).core, tc.core);
    }
}

TEST(Contract, Examples) {
    EXPECT_EQ(contract(path_graph(3), 0, 2), complete_graph(2));
    const Graph c4 = contract(cycle_graph(4), 0, 2);
    EXPECT_EQ(c4.order(), 3);
    EXPECT_EQ(c4.size(), 2);
    EXPECT_TRUE(is_connected(c4));
    const Graph c5 = contract(cycle_graph(5), 0, 2);
    EXPECT_EQ(c5.order(), 4);
    bool triangle = false;
    for (auto [u, v] : c5.edges())
        if (c5.neighbors(u) & c5.neighbors(v)) triangle = true;
    EXPECT_TRUE(triangle);
    EXPECT_THROW(contract(cycle_graph(4), 0, 1), GraphError);
    EXPECT_THROW(contract(cycle_graph(4), 2, 2), GraphError);
}

TEST(Contract, MergedNeighbourhoodIsUnion) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(3 + trial % 7, 0.4, rng);
        for (auto u = 0; u < g.order(); ++u)
            for (auto v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v)) continue;
                const Graph h = contract(g, u, v);
                EXPECT_EQ(h.order(), g.order() - 1);
                EXPECT_EQ(h.degree(u), popcount(g.neighbors(u) | g.neighbors(v)));
                EXPECT_EQ(h.size(), g.size() - popcount(g.neighbors(u) & g.neighbors(v)));
            }
    }
}

TEST(Graph, DeletionsAndCliques) {
    EXPECT_TRUE(is_clique(complete_graph(4)));
    EXPECT_FALSE(is_clique(cycle_graph(4)));
    for (int v = 0; v < 4; ++v) EXPECT_EQ(delete_vertex(complete_graph(4), v), complete_graph(3));
    EXPECT_EQ(delete_edge(complete_graph(3), 0, 1).size(), 2);
    EXPECT_THROW(delete_edge(path_graph(3), 0, 2), GraphError);
    EXPECT_EQ(delete_vertex(path_graph(3), 0), path_graph(2));
}

TEST(Graph, DegeneracyOrderStartsWithLeaf) {
    const Graph tree = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    const auto order = degeneracy_order(tree);
    ASSERT_EQ(order.size(), 6u);
    EXPECT_EQ(tree.degree(order.front()), 1);
}

TEST(Graph, InducedAndUnion) {
    const Graph u = disjoint_union(complete_graph(3), path_graph(2));
    EXPECT_EQ(u.order(), 5);
    EXPECT_EQ(u.size(), 4);
    EXPECT_EQ(induced_subgraph(u, 0b00111), complete_graph(3));
    EXPECT_EQ(induced_subgraph(u, 0b11000), path_graph(2));
}
