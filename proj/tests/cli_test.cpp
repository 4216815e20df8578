#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "grundy/generators.hpp"
#include "grundy/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;

    bool has(const std::string& line) const
    {
        return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
    }
};

Run cli(const std::string& args)
{
    const std::string cmd = std::string(GRUNDY_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name)
{
    return std::string(GRUNDY_SAMPLES) + "/" + name;
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "grundy_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, SolveAutoPicksChain)
{
    const auto r = cli("solve --machine " + sample("p4.graph"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("method=chain")) << r.out;
    EXPECT_TRUE(r.has("gamma_gr=3")) << r.out;
    EXPECT_TRUE(r.has("witness=0 2 3")) << r.out;
    EXPECT_TRUE(r.has("k=2")) << r.out;

    const auto human = cli("solve --method chain " + sample("p4.graph"));
    EXPECT_TRUE(human.has("k=2 |X_i|=1,1 |Y_i|=1,1")) << human.out;
}

TEST(Cli, SolveAutoFallsBackToExact)
{
    const auto r = cli("solve --machine " + sample("k5.graph"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("method=exact")) << r.out;
    EXPECT_TRUE(r.has("gamma_gr=1")) << r.out;
}

TEST(Cli, SolveCochain)
{
    const auto path = scratch("k2_k3.graph");
    grundy::save_graph(path.string(), grundy::complement(grundy::chain_from_profile({{2}, {3}})));
    const auto r = cli("solve --machine " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("method=cochain")) << r.out;
    EXPECT_TRUE(r.has("gamma_gr=2")) << r.out;
}

TEST(Cli, ErrorExitCodes)
{
    EXPECT_EQ(cli("solve /nonexistent/file.graph").code, 2);
    EXPECT_EQ(cli("solve --method chain " + sample("k5.graph")).code, 5);
    EXPECT_EQ(cli("solve --method cochain " + sample("p3.graph")).code, 5);
    EXPECT_EQ(cli("solve --method bogus " + sample("k5.graph")).code, 2);
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("--help").code, 0);

    const auto big = scratch("big_chain.graph");
    ASSERT_EQ(cli("gen chain --profile 499999,1,1x1,1,499999 --out " + big.string()).code, 0);
    const auto r = cli("solve --machine --method exact " + big.string());
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.has("status=size_cap")) << r.out;
    const auto chain = cli("solve --machine " + big.string());
    EXPECT_EQ(chain.code, 0);
    EXPECT_TRUE(chain.has("gamma_gr=1000000"));
    fs::remove(big);
}

TEST(Cli, Verify)
{
    const auto ok = cli("verify --machine " + sample("p3.graph") + " " + sample("p3_ends.seq"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(ok.has("legal=true"));
    EXPECT_TRUE(ok.has("dominating=true"));
    EXPECT_TRUE(ok.has("footprint[0]=0: 0 1")) << ok.out;

    const auto bad = cli("verify --machine " + sample("k3.graph") + " " + sample("k3_pair.seq"));
    EXPECT_TRUE(bad.has("legal=false"));
    EXPECT_TRUE(bad.has("violation_position=1"));

    const auto partial = cli("verify --machine " + sample("p4.graph") + " " + sample("p4_first.seq"));
    EXPECT_TRUE(partial.has("legal=true"));
    EXPECT_TRUE(partial.has("dominating=false"));

    EXPECT_EQ(cli("verify " + sample("p3.graph") + " " + sample("p4.graph")).code, 2);
}

TEST(Cli, Reduce)
{
    const auto out = scratch("h4x5_gadget.graph");
    const auto r = cli("reduce --machine --to bipartite " + sample("h4x5.hyper") + " --out " +
                       out.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.has("n=18"));
    EXPECT_TRUE(r.has("m=54"));
    const auto g = grundy::load_graph(out.string());
    EXPECT_EQ(g.edge_count(), 54U);
    std::ifstream prov(out.string() + ".prov");
    std::string first;
    std::getline(prov, first);
    EXPECT_EQ(first, "0 A:0");

    const auto co = scratch("p3_gadget.graph");
    const auto prov_path = scratch("p3_gadget.tags");
    const auto c = cli("reduce --machine --to cobipartite " + sample("p3.graph") + " --out " +
                       co.string() + " --provenance " + prov_path.string());
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(c.has("m=13"));
    EXPECT_TRUE(fs::exists(prov_path));

    const auto tiny = scratch("one_vertex.hyper");
    std::ofstream(tiny) << "1 2\n0\n0\n";
    EXPECT_EQ(cli("reduce --to bipartite " + tiny.string() + " --out " + out.string()).code, 2);
}

TEST(Cli, GenIsDeterministic)
{
    const auto a = cli("gen graph --n 12 --p 0.3 --seed 5");
    const auto b = cli("gen graph --n 12 --p 0.3 --seed 5");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto h = cli("gen hypergraph --n 6 --m 4 --seed 2");
    std::istringstream in(h.out);
    const auto hg = grundy::read_hypergraph(in);
    EXPECT_EQ(hg.size(), 6U);
    EXPECT_EQ(hg.edge_count(), 4U);
    EXPECT_EQ(cli("gen chain --profile 1,2x2").code, 2);
}

TEST(Cli, BenchAndSweep)
{
    const auto b = cli("bench --min-exp 8 --max-exp 10 --repeats 3");
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("n,time_ms\n256,"), std::string::npos) << b.out;
    EXPECT_NE(b.out.find("median_doubling_ratio="), std::string::npos);

    const auto s = cli("sweep complete --jobs 1");
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("instances=36 failures=0"), std::string::npos) << s.out;
    EXPECT_EQ(cli("sweep nonsense").code, 2);
}
