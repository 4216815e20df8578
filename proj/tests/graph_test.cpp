#include <gtest/gtest.h>

#include <vector>

#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/hypergraph.hpp"

using namespace grundy;

TEST(Graph, BuildsSortedAdjacency)
{
    const auto g = Graph::from_edges(4, {{2, 0}, {1, 2}, {1, 3}});
    EXPECT_EQ(g.size(), 4U);
    EXPECT_EQ(g.edge_count(), 3U);
    EXPECT_EQ(std::vector<Vertex>(g.neighbors(2).begin(), g.neighbors(2).end()),
              (std::vector<Vertex>{0, 1}));
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(0, 1));
    EXPECT_EQ(g.degree(1), 2U);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}}));
}

TEST(Graph, RejectsMalformedEdges)
{
    EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InputError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InputError);
    volatile Vertex past_end = 3;
    EXPECT_THROW(Graph(3).neighbors(past_end), InputError);
}

TEST(Graph, ClosedNeighborhood)
{
    const auto g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(closed_neighborhood(g, 1), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(closed_neighborhood(g, 2), (std::vector<Vertex>{1, 2}));
}

TEST(Graph, Bipartition)
{
    const auto p4 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
    const auto bp = bipartition(p4);
    ASSERT_TRUE(bp);
    EXPECT_EQ(bp->side_x, (std::vector<Vertex>{0, 2, 4}));
    EXPECT_EQ(bp->side_y, (std::vector<Vertex>{1, 3}));
    EXPECT_FALSE(bipartition(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
    EXPECT_FALSE(bipartition(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
}

TEST(Graph, ComplementIsAnInvolution)
{
    for (std::size_t n = 0; n <= 5; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            const auto c = complement(g);
            EXPECT_EQ(g.edge_count() + c.edge_count(), n * (n - (n > 0 ? 1 : 0)) / 2);
            for (const auto& [u, v] : c.edges()) EXPECT_FALSE(g.has_edge(u, v));
            EXPECT_EQ(complement(c), g);
        });
    }
}

TEST(Hypergraph, ValidatesEdges)
{
    EXPECT_THROW(Hypergraph(3, {{}}), InputError);
    EXPECT_THROW(Hypergraph(3, {{0, 0}}), InputError);
    EXPECT_THROW(Hypergraph(3, {{0, 3}}), InputError);

    const Hypergraph h(4, {{3, 0}, {1, 2}, {0, 1}});
    EXPECT_EQ(h.edge(0).front(), 0U);
    EXPECT_EQ(h.incident_edges(0).size(), 2U);
    EXPECT_FALSE(h.first_isolated_vertex());
    EXPECT_EQ(Hypergraph(3, {{0, 1}}).first_isolated_vertex(), std::optional<Vertex>(2));
}

TEST(Hypergraph, SequencePredicates)
{
    const Hypergraph h(4, {{0, 1, 3}, {1, 2}, {0, 1}, {1, 2, 3}, {0, 2, 3}});
    const std::vector<std::size_t> cover{0, 1};
    const std::vector<std::size_t> partial{0, 2};
    EXPECT_TRUE(is_edge_cover(h, cover));
    EXPECT_FALSE(is_edge_cover(h, partial));

    const std::vector<std::size_t> legal{2, 1, 0};
    const std::vector<std::size_t> illegal{0, 2};
    const std::vector<std::size_t> repeated{1, 1};
    EXPECT_TRUE(is_legal_edge_sequence(h, legal));
    EXPECT_FALSE(is_legal_edge_sequence(h, illegal));
    EXPECT_THROW(is_legal_edge_sequence(h, repeated), InputError);

    const std::vector<Vertex> t_legal{0, 2};
    const std::vector<Vertex> t_legal_too{1, 0};
    const std::vector<Vertex> t_bad{1, 0, 2};
    EXPECT_TRUE(is_legal_transversal_sequence(h, t_legal));
    // 1 hits every edge but {0,2,3}, which 0 then spends.
    EXPECT_TRUE(is_legal_transversal_sequence(h, t_legal_too));
    EXPECT_FALSE(is_legal_transversal_sequence(h, t_bad));
}
