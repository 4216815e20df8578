#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "grundy/bench.hpp"
#include "grundy/chain.hpp"
#include "grundy/generators.hpp"
#include "grundy/io.hpp"

using namespace grundy;

TEST(Rng, DeterministicPerSeed)
{
    Xorshift64 a(42);
    Xorshift64 b(42);
    Xorshift64 c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        EXPECT_NE(x, c.next());
    }
    Xorshift64 d(0);
    for (int i = 0; i < 1000; ++i) {
        const double u = d.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(d.below(7), 7U);
    }
}

TEST(Generators, ChainProfiles)
{
    const auto p = parse_chain_profile("1,2,1x2,1,3");
    EXPECT_EQ(p.part_sizes_x, (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(p.part_sizes_y, (std::vector<std::size_t>{2, 1, 3}));
    EXPECT_EQ(to_string(p), "1,2,1x2,1,3");
    EXPECT_EQ(p.vertex_count(), 10U);

    for (const char* bad : {"", "1,2", "1x", "x1", "1,0x1,1", "1x1x1", "1,2x1", "a x1", "1,x1"}) {
        EXPECT_THROW(parse_chain_profile(bad), InputError) << bad;
    }

    const auto g = chain_from_profile(p);
    EXPECT_EQ(g.size(), 10U);
    // |X_1|*|Y_1| + |X_2|*(|Y_1|+|Y_2|) + |X_3|*n2
    EXPECT_EQ(g.edge_count(), 1 * 2 + 2 * 3 + 1 * 6U);
    auto rec = recognize_chain(g);
    const auto& cs = std::get<ChainStructure>(rec);
    EXPECT_EQ(chain_profile_string(cs), "k=3 |X_i|=1,2,1 |Y_i|=2,1,3");
}

TEST(Generators, EnumerationCounts)
{
    EXPECT_EQ(all_chain_profiles(1, 3, 100).size(), 9U);
    EXPECT_EQ(all_chain_profiles(2, 2, 100).size(), 4U + 16U);
    EXPECT_EQ(all_chain_profiles(2, 2, 5).size(), 4U + 5U);

    std::size_t graphs = 0;
    for_each_graph(4, [&](const Graph&) { ++graphs; });
    EXPECT_EQ(graphs, 64U);

    std::size_t hypers = 0;
    for_each_hypergraph(2, 2, [&](const Hypergraph&) { ++hypers; });
    EXPECT_EQ(hypers, 4U);
}

TEST(Generators, RandomInstances)
{
    EXPECT_EQ(random_graph(12, 0.4, 9), random_graph(12, 0.4, 9));
    EXPECT_EQ(random_graph(10, 0.0, 1).edge_count(), 0U);
    EXPECT_EQ(random_graph(10, 1.0, 1).edge_count(), 45U);
    EXPECT_THROW(random_graph(3, 1.5, 1), InputError);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto h = random_hypergraph(1 + seed % 9, 1 + seed % 5, seed);
        EXPECT_FALSE(h.first_isolated_vertex());
        EXPECT_EQ(h, random_hypergraph(1 + seed % 9, 1 + seed % 5, seed));
    }
    EXPECT_THROW(random_hypergraph(0, 1, 1), InputError);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = random_chain_profile(18, 6, 4, seed);
        EXPECT_LE(p.vertex_count(), 18U);
        EXPECT_NO_THROW(p.validate());
    }
}

TEST(Io, GraphRoundTrip)
{
    const auto g = random_graph(9, 0.5, 3);
    std::stringstream ss;
    write_graph(ss, g);
    EXPECT_EQ(read_graph(ss), g);

    std::istringstream commented("# P3\n\n3 2\n0 1\n  # middle\n1 2\n");
    EXPECT_EQ(read_graph(commented), Graph::from_edges(3, {{0, 1}, {1, 2}}));
}

TEST(Io, GraphErrors)
{
    for (const char* text : {"", "3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "3 1\n0 x\n",
                             "3 1\n0 3\n", "3 1\n1 1\n", "3 2\n0 1\n1 0\n", "3 1\n0 1 2\n",
                             "-1 0\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(read_graph(in), InputError) << text;
    }
    EXPECT_THROW(load_graph("/nonexistent/graph.txt"), InputError);
}

TEST(Io, HypergraphRoundTrip)
{
    const auto h = random_hypergraph(6, 4, 12);
    std::stringstream ss;
    write_hypergraph(ss, h);
    EXPECT_EQ(read_hypergraph(ss), h);

    for (const char* text : {"2 1\n", "2 1\n0 2\n", "2 1\n0 0\n", "2 1\n0\n1\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(read_hypergraph(in), InputError) << text;
    }
}

TEST(Io, Sequences)
{
    std::istringstream paren("(0, 2)\n");
    EXPECT_EQ(read_sequence(paren), (std::vector<Vertex>{0, 2}));
    std::istringstream plain("# witness\n3 1 4\n");
    EXPECT_EQ(read_sequence(plain), (std::vector<Vertex>{3, 1, 4}));
    std::istringstream empty("");
    EXPECT_TRUE(read_sequence(empty).empty());
    std::istringstream two_lines("0\n1\n");
    EXPECT_THROW(read_sequence(two_lines), InputError);

    std::ostringstream out;
    const std::vector<Vertex> seq{5, 0};
    write_sequence(out, seq);
    EXPECT_EQ(out.str(), "5 0\n");
}

TEST(Bench, Profiles)
{
    const auto bp = parse_bench_profile("s,1,1x1,1,s");
    const auto p = instantiate(bp, 1000);
    EXPECT_EQ(p.part_sizes_x, (std::vector<std::size_t>{498, 1, 1}));
    EXPECT_EQ(p.part_sizes_y, (std::vector<std::size_t>{1, 1, 498}));
    EXPECT_THROW(parse_bench_profile("s,1x1"), InputError);
    EXPECT_THROW(parse_bench_profile("s,0x1,s"), InputError);
    EXPECT_THROW(instantiate(bp, 5), InputError);

    const auto rows = bench_chain(bp, 8, 10, 3);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows[0].vertices, 256U);
    EXPECT_EQ(rows[2].vertices, 1024U);
    EXPECT_THROW(bench_chain(bp, 10, 8, 3), InputError);
    EXPECT_DOUBLE_EQ(median({3.0, 1.0, 2.0}), 2.0);
    EXPECT_DOUBLE_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}
