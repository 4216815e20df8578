#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "grundy/exact.hpp"
#include "grundy/generators.hpp"
#include "grundy/reductions.hpp"
#include "oracles.hpp"

using namespace grundy;

namespace {

const Hypergraph h4x5(4, {{0, 1, 3}, {1, 2}, {0, 1}, {1, 2, 3}, {0, 2, 3}});

std::vector<Vertex> sorted(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(BipartiteGadget, FourVerticesFiveEdgesShape)
{
    const auto map = hypergraph_to_bipartite(h4x5);
    EXPECT_EQ(map.target.size(), 18U);
    EXPECT_EQ(map.target.edge_count(), 54U);

    const auto a = map.block_vertices(Block::a);
    const auto x = map.block_vertices(Block::x_prime);
    const auto e = map.block_vertices(Block::e_prime);
    const auto b = map.block_vertices(Block::b);
    EXPECT_EQ(a, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(x, (std::vector<Vertex>{4, 5, 6, 7}));
    EXPECT_EQ(e, (std::vector<Vertex>{8, 9, 10, 11, 12}));
    EXPECT_EQ(b, (std::vector<Vertex>{13, 14, 15, 16, 17}));

    const auto bp = bipartition(map.target);
    ASSERT_TRUE(bp);
    std::vector<Vertex> ae = a;
    ae.insert(ae.end(), e.begin(), e.end());
    std::vector<Vertex> xb = x;
    xb.insert(xb.end(), b.begin(), b.end());
    EXPECT_EQ(sorted(bp->side_x), ae);
    EXPECT_EQ(sorted(bp->side_y), xb);

    // x'_v ~ e_i exactly when v is in E_i.
    for (std::size_t i = 0; i < h4x5.edge_count(); ++i) {
        for (Vertex v = 0; v < h4x5.size(); ++v) {
            const auto edge = h4x5.edge(i);
            const bool member = std::find(edge.begin(), edge.end(), v) != edge.end();
            EXPECT_EQ(map.target.has_edge(x[v], e[i]), member);
        }
    }
    EXPECT_EQ(role_tag(map.role_of[9]), "E:1");
    EXPECT_EQ(role_tag(map.role_of[4]), "X:0");
}

TEST(BipartiteGadget, FourVerticesFiveEdgesEquivalence)
{
    const auto map = hypergraph_to_bipartite(h4x5);
    const auto gamma = grundy_domination_exact(map.target);
    EXPECT_EQ(gamma.best_length, 4 + 5 + oracle::grundy_cover(h4x5));
    const auto projection = project_gadget_sequence(map, h4x5, gamma.best_sequence);
    EXPECT_LE(projection.edge_sequence.size(), h4x5.edge_count());
}

TEST(BipartiteGadget, TwoParallelEdges)
{
    const Hypergraph h(2, {{0, 1}, {0, 1}});
    const auto map = hypergraph_to_bipartite(h);
    EXPECT_EQ(map.target.size(), 8U);
    EXPECT_EQ(map.target.edge_count(), 12U);
    EXPECT_EQ(grundy_domination_exact(map.target).best_length, 2 + 2 + 1U);
}

TEST(BipartiteGadget, Preconditions)
{
    EXPECT_THROW(hypergraph_to_bipartite(Hypergraph(1, {{0}, {0}})), PreconditionError);
    EXPECT_THROW(hypergraph_to_bipartite(Hypergraph(2, {{0, 1}})), PreconditionError);
    EXPECT_THROW(hypergraph_to_bipartite(Hypergraph(3, {{0, 1}, {1}})), PreconditionError);
}

TEST(BipartiteGadget, RandomEquivalence)
{
    for (std::size_t i = 0; i < 40; ++i) {
        Xorshift64 rng(5000 + i);
        const auto h = random_hypergraph(2 + rng.below(3), 2 + rng.below(2), rng.next());
        const auto map = hypergraph_to_bipartite(h);
        EXPECT_EQ(grundy_domination_exact(map.target).best_length,
                  h.size() + h.edge_count() + oracle::grundy_cover(h));
    }
}

TEST(CobipartiteGadget, P3Shape)
{
    const auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const auto map = graph_to_cobipartite(p3);
    EXPECT_EQ(map.target.size(), 6U);
    EXPECT_EQ(map.target.edge_count(), 13U);
    EXPECT_EQ(map.block_vertices(Block::v1), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(map.block_vertices(Block::v2), (std::vector<Vertex>{3, 4, 5}));
    EXPECT_TRUE(bipartition(complement(map.target)));
    EXPECT_TRUE(map.target.has_edge(0, 4));
    EXPECT_FALSE(map.target.has_edge(0, 5));
    EXPECT_EQ(grundy_domination_exact(map.target).best_length, oracle::grundy_domination(p3));
    EXPECT_EQ(role_tag(map.role_of[5]), "V2:2");
}

TEST(CobipartiteGadget, Equivalence)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for_each_graph(n, [](const Graph& g) {
            const auto map = graph_to_cobipartite(g);
            EXPECT_EQ(grundy_domination_exact(map.target).best_length,
                      oracle::grundy_domination(g));
        });
    }
    EXPECT_THROW(graph_to_cobipartite(Graph(0)), PreconditionError);
}
