// Command-line front end: solve, verify, reduce, gen, bench, sweep.
//
// Exit codes: 0 success, 2 input error, 3 size cap exceeded, 4 internal
// verification failure, 5 requested method not applicable to the instance.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "grundy/grundy.hpp"

namespace {

using namespace grundy;

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,
    exit_size_cap = 3,
    exit_verification = 4,
    exit_not_applicable = 5,
};

class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ordered key/value report. Machine mode prints key=value on every line;
// human mode keeps the result keys (gamma_gr=, k=...) and labels the rest.
class Report {
public:
    void add(std::string key, std::string value)
    {
        fields_.emplace_back(std::move(key), std::move(value));
    }

    void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }

    // Shown verbatim in human mode, skipped under --machine.
    void add_line(std::string line) { fields_.emplace_back(std::string(), std::move(line)); }

    // Shown only under --machine.
    void add_machine(std::string key, std::string value)
    {
        fields_.emplace_back("\x01" + std::move(key), std::move(value));
    }

    void print(std::ostream& out, bool machine) const
    {
        for (const auto& [key, value] : fields_) {
            if (key.empty()) {
                if (!machine) out << value << '\n';
            } else if (key[0] == '\x01') {
                if (machine) out << key.substr(1) << '=' << value << '\n';
            } else if (machine || is_result_key(key)) {
                out << key << '=' << value << '\n';
            } else {
                out << key << ": " << value << '\n';
            }
        }
    }

private:
    static bool is_result_key(const std::string& key)
    {
        return key == "gamma_gr" || key == "method" || key == "rho_gr" || key == "tau_gr" || key == "alpha" ||
               key == "legal" || key == "dominating";
    }

    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string join(std::span<const Vertex> seq)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << (i ? " " : "") << seq[i];
    }
    return out.str();
}

std::string format_ms(double ms)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << ms;
    return out.str();
}

std::string join_sizes(const std::vector<std::vector<Vertex>>& parts)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        s += (i ? "," : "") + std::to_string(parts[i].size());
    }
    return s;
}

bool has_isolated_vertex(const Graph& g)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.degree(v) == 0) {
            return true;
        }
    }
    return false;
}

std::optional<ChainStructure> try_chain(const Graph& g)
{
    if (g.size() == 0 || has_isolated_vertex(g)) {
        return std::nullopt;
    }
    auto rec = recognize_chain(g);
    if (auto* cs = std::get_if<ChainStructure>(&rec)) {
        return std::move(*cs);
    }
    return std::nullopt;
}

constexpr std::size_t cobipartite_probe_limit = 4096;

std::string detect_class(const Graph& g)
{
    if (try_chain(g)) {
        return "chain";
    }
    if (g.size() == 0) {
        return "empty";
    }
    if (g.size() <= cobipartite_probe_limit) {
        if (std::holds_alternative<CochainSolution>(grundy_cochain(g))) {
            return "cochain";
        }
    }
    if (bipartition(g)) {
        return "bipartite";
    }
    if (g.size() <= cobipartite_probe_limit && bipartition(complement(g))) {
        return "cobipartite";
    }
    return "general";
}

struct SolveOptions {
    std::string path;
    std::string method = "auto";
    std::size_t cap = 20;
    std::optional<std::uint64_t> budget;
    bool machine = false;
};

void report_chain(Report& r, const Graph& g, const ChainStructure& cs)
{
    const auto sol = grundy_chain(cs);
    const auto seq = verify_dominating_sequence(g, sol.order, sol.scores[sol.best_index]);
    r.add("gamma_gr", seq.size());
    r.add("witness", join(seq.order));
    r.add_line(chain_profile_string(cs));
    r.add_machine("k", std::to_string(cs.k()));
    r.add_machine("x_parts", join_sizes(cs.x_parts));
    r.add_machine("y_parts", join_sizes(cs.y_parts));
    r.add("best_index", sol.best_index);
    r.add("alpha", independence_number_chain(cs));
}

void report_exact(Report& r, const Graph& g, const SolveOptions& opts)
{
    SearchOptions search;
    search.max_vertices = opts.cap;
    search.node_budget = opts.budget;
    const auto result = grundy_domination_exact(g, search);
    if (!result.optimal()) {
        throw SizeCapError("node budget of " + std::to_string(*opts.budget) +
                           " exhausted after " + std::to_string(result.nodes_explored) +
                           " nodes; no value reported");
    }
    r.add("gamma_gr", result.best_length);
    r.add("witness", join(result.best_sequence.order));
    r.add("nodes_explored", std::to_string(result.nodes_explored));
}

int cmd_solve(const SolveOptions& opts, const std::string& echo)
{
    const Graph g = load_graph(opts.path);
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.add("command", echo);
    r.add("n", g.size());
    r.add("m", g.edge_count());

    std::string method = opts.method;
    if (method == "exact") {
        check_exact_cap(g.size(), SearchOptions{.max_vertices = opts.cap});
    }

    std::optional<ChainStructure> chain;
    if (method == "auto" || method == "chain") {
        chain = try_chain(g);
        if (method == "chain" && !chain) {
            if (g.size() > 0 && has_isolated_vertex(g)) {
                throw NotApplicable("graph has an isolated vertex; the chain algorithm needs "
                                    "none (try --method exact)");
            }
            std::string why = "not a chain graph";
            if (g.size() > 0) {
                const auto rec = recognize_chain(g);
                why = std::get<ChainRejection>(rec).message();
            }
            throw NotApplicable(why);
        }
    }

    std::optional<CochainSolution> cochain;
    if ((method == "auto" && !chain) || method == "cochain") {
        if (g.size() > 0 && g.size() <= cobipartite_probe_limit) {
            auto rec = grundy_cochain(g);
            if (auto* sol = std::get_if<CochainSolution>(&rec)) {
                cochain = std::move(*sol);
            } else if (method == "cochain") {
                throw NotApplicable("complement: " + std::get<ChainRejection>(rec).message());
            }
        } else if (method == "cochain") {
            throw NotApplicable("co-chain test needs 1.." +
                                std::to_string(cobipartite_probe_limit) + " vertices");
        }
    }

    if (method == "auto") {
        if (chain) {
            method = "chain";
        } else if (cochain) {
            method = "cochain";
        } else if (g.size() <= std::min(opts.cap, exact_vertex_ceiling)) {
            method = "exact";
        } else {
            throw SizeCapError("graph with " + std::to_string(g.size()) +
                               " vertices is neither chain nor co-chain and exceeds the exact "
                               "solver's cap of " + std::to_string(opts.cap));
        }
    }

    r.add("class", chain ? std::string("chain") : cochain ? std::string("cochain")
                                                          : detect_class(g));
    r.add("method", method);
    if (method == "chain") {
        report_chain(r, g, *chain);
    } else if (method == "cochain") {
        r.add("gamma_gr", cochain->gamma_gr);
        r.add("witness", join(cochain->witness.order));
        r.add("k", cochain->classes);
    } else {
        report_exact(r, g, opts);
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    r.add("time_ms", format_ms(std::chrono::duration<double, std::milli>(elapsed).count()));
    r.add("status", "ok");
    r.print(std::cout, opts.machine);
    return exit_ok;
}

int cmd_verify(const std::string& graph_path, const std::string& seq_path, bool machine,
               const std::string& echo)
{
    const Graph g = load_graph(graph_path);
    const auto order = load_sequence(seq_path);
    Report r;
    r.add("command", echo);
    r.add("n", g.size());
    r.add("m", g.edge_count());
    r.add("length", order.size());
    const auto check = check_closed_neighborhood_sequence(g, order);
    if (const auto* bad = std::get_if<Violation>(&check)) {
        r.add("legal", "false");
        r.add("violation_position", bad->position);
        r.add("violation_vertex", bad->vertex);
    } else {
        const auto& seq = std::get<VertexSequence>(check);
        r.add("legal", "true");
        r.add("dominating", is_dominating(g, seq) ? "true" : "false");
        r.add("undominated", g.size() - seq.dominated_count());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            r.add("footprint[" + std::to_string(i) + "]",
                  std::to_string(seq.order[i]) + ": " + join(seq.footprints[i]));
        }
    }
    r.add("status", "ok");
    r.print(std::cout, machine);
    return exit_ok;
}

int cmd_reduce(const std::string& to, const std::string& input, const std::string& out,
               std::string provenance, bool machine, const std::string& echo)
{
    const ReductionMap map = to == "bipartite" ? hypergraph_to_bipartite(load_hypergraph(input))
                                               : graph_to_cobipartite(load_graph(input));
    if (provenance.empty()) {
        provenance = out + ".prov";
    }
    save_graph(out, map.target);
    save_provenance(provenance, map);
    Report r;
    r.add("command", echo);
    r.add("gadget", to);
    r.add("n", map.target.size());
    r.add("m", map.target.edge_count());
    r.add("graph", out);
    r.add("provenance", provenance);
    r.add("status", "ok");
    r.print(std::cout, machine);
    return exit_ok;
}

template <class Writer>
int emit(const std::string& out, Writer&& write)
{
    if (out.empty() || out == "-") {
        write(std::cout);
    } else {
        std::ofstream file(out);
        if (!file) {
            throw InputError("cannot write '" + out + "'");
        }
        write(file);
    }
    return exit_ok;
}

int cmd_bench(const std::string& profile, unsigned min_exp, unsigned max_exp,
              std::size_t repeats)
{
    const auto rows = bench_chain(parse_bench_profile(profile), min_exp, max_exp, repeats);
    std::cout << "n,time_ms\n";
    for (const auto& row : rows) {
        std::cout << row.vertices << ',' << format_ms(row.median_ms) << '\n';
    }
    std::cout << "# profile=" << profile << " repeats=" << repeats << '\n';
    for (const auto& row : rows) {
        std::cout << "# n=" << row.vertices << " edges=" << row.edges
                  << " gamma_gr=" << row.gamma_gr << '\n';
    }
    if (rows.size() > 1) {
        std::cout << "# median_doubling_ratio=" << std::setprecision(4)
                  << median_doubling_ratio(rows) << '\n';
    }
    return exit_ok;
}

int cmd_sweep(const std::string& name, std::size_t jobs)
{
    const std::vector<std::pair<std::string, SweepReport (*)(std::size_t)>> sweeps = {
        {"chain", sweep_chain_vs_exact},
        {"complete", sweep_complete_bipartite},
        {"alpha", sweep_alpha_sandwich},
        {"bipartite", sweep_bipartite_reduction},
        {"cobipartite", sweep_cobipartite_reduction},
        {"duality", sweep_hypergraph_duality},
        {"cochain", sweep_cochain},
    };
    bool all_passed = true;
    bool matched = false;
    for (const auto& [key, run] : sweeps) {
        if (name != "all" && name != key) {
            continue;
        }
        matched = true;
        const auto report = run(jobs);
        std::cout << "sweep=" << report.name << " instances=" << report.instances
                  << " failures=" << report.failures << " seconds=" << std::fixed
                  << std::setprecision(2) << report.seconds
                  << " status=" << (report.passed() ? "pass" : "fail") << '\n';
        for (const auto& sample : report.failure_samples) {
            std::cout << "  failure: " << sample << '\n';
        }
        all_passed = all_passed && report.passed();
    }
    if (!matched) {
        throw InputError("unknown sweep '" + name + "'");
    }
    return all_passed ? exit_ok : exit_verification;
}

}  // namespace

int main(int argc, char** argv)
{
    std::string echo;
    for (int i = 1; i < argc; ++i) {
        echo += (i > 1 ? " " : "") + std::string(argv[i]);
    }

    CLI::App app{"Grundy domination toolkit: exact and chain-graph solvers, reduction gadgets"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "Print key=value lines only");

    SolveOptions solve_opts;
    auto* solve = app.add_subcommand("solve", "Compute the Grundy domination number of a graph");
    solve->add_option("graph", solve_opts.path, "Graph file")->required();
    solve->add_option("--method", solve_opts.method, "auto, exact, chain or cochain")
        ->check(CLI::IsMember({"auto", "exact", "chain", "cochain"}));
    solve->add_option("--cap", solve_opts.cap, "Vertex cap for the exact solver")
        ->check(CLI::Range(std::size_t{1}, exact_vertex_ceiling));
    solve->add_option("--budget", solve_opts.budget, "Node budget for the exact solver");
    solve->add_flag("--machine", machine, "Print key=value lines only");

    std::string graph_path;
    std::string seq_path;
    auto* verify = app.add_subcommand("verify", "Check a vertex sequence against a graph");
    verify->add_option("graph", graph_path, "Graph file")->required();
    verify->add_option("sequence", seq_path, "Sequence file")->required();
    verify->add_flag("--machine", machine, "Print key=value lines only");

    std::string reduce_to;
    std::string reduce_in;
    std::string reduce_out;
    std::string reduce_prov;
    auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget");
    reduce->add_option("--to", reduce_to, "bipartite (from a hypergraph) or cobipartite")
        ->required()
        ->check(CLI::IsMember({"bipartite", "cobipartite"}));
    reduce->add_option("input", reduce_in, "Hypergraph or graph file")->required();
    reduce->add_option("--out", reduce_out, "Gadget graph file")->required();
    reduce->add_option("--provenance", reduce_prov, "Provenance file (default <out>.prov)");
    reduce->add_flag("--machine", machine, "Print key=value lines only");

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    std::string gen_out;
    std::string gen_profile;
    std::size_t gen_n = 0;
    std::size_t gen_m = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    auto* gen_chain = gen->add_subcommand("chain", "Chain graph from a part-size profile");
    gen_chain->add_option("--profile", gen_profile, "X sizes x Y sizes, e.g. 1,2,1x2,1,3")
        ->required();
    gen_chain->add_option("--out", gen_out, "Output file (default stdout)");
    auto* gen_graph = gen->add_subcommand("graph", "Seeded random graph");
    gen_graph->add_option("--n", gen_n, "Vertices")->required();
    gen_graph->add_option("--p", gen_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen_graph->add_option("--seed", gen_seed, "Seed");
    gen_graph->add_option("--out", gen_out, "Output file (default stdout)");
    auto* gen_hyper = gen->add_subcommand("hypergraph", "Seeded random hypergraph");
    gen_hyper->add_option("--n", gen_n, "Vertices")->required();
    gen_hyper->add_option("--m", gen_m, "Edges")->required();
    gen_hyper->add_option("--seed", gen_seed, "Seed");
    gen_hyper->add_option("--out", gen_out, "Output file (default stdout)");

    std::string bench_profile = "s,1,1x1,1,s";
    unsigned bench_min = 15;
    unsigned bench_max = 20;
    std::size_t bench_repeats = 5;
    auto* bench = app.add_subcommand("bench", "Time chain recognition + the chain algorithm");
    bench->add_option("--profile", bench_profile, "Profile with 's' for scaled parts");
    bench->add_option("--min-exp", bench_min, "Smallest size exponent");
    bench->add_option("--max-exp", bench_max, "Largest size exponent");
    bench->add_option("--repeats", bench_repeats, "Runs per size (median reported)");

    std::string sweep_name = "all";
    std::size_t sweep_jobs = 0;
    auto* sweep = app.add_subcommand("sweep", "Run the equivalence sweeps against the exact solver");
    sweep->add_option("name", sweep_name,
                      "chain, complete, alpha, bipartite, cobipartite, duality, cochain or all");
    sweep->add_option("--jobs", sweep_jobs, "Worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try {
        if (*solve) {
            solve_opts.machine = machine;
            return cmd_solve(solve_opts, echo);
        }
        if (*verify) {
            return cmd_verify(graph_path, seq_path, machine, echo);
        }
        if (*reduce) {
            return cmd_reduce(reduce_to, reduce_in, reduce_out, reduce_prov, machine, echo);
        }
        if (*gen_chain) {
            const Graph g = chain_from_profile(parse_chain_profile(gen_profile));
            return emit(gen_out, [&](std::ostream& out) { write_graph(out, g); });
        }
        if (*gen_graph) {
            const Graph g = random_graph(gen_n, gen_p, gen_seed);
            return emit(gen_out, [&](std::ostream& out) { write_graph(out, g); });
        }
        if (*gen_hyper) {
            const Hypergraph h = random_hypergraph(gen_n, gen_m, gen_seed);
            return emit(gen_out, [&](std::ostream& out) { write_hypergraph(out, h); });
        }
        if (*bench) {
            return cmd_bench(bench_profile, bench_min, bench_max, bench_repeats);
        }
        if (*sweep) {
            return cmd_sweep(sweep_name, sweep_jobs);
        }
    } catch (const SizeCapError& e) {
        std::cerr << "error: size cap exceeded: " << e.what() << '\n';
        if (machine) std::cout << "status=size_cap\n";
        return exit_size_cap;
    } catch (const VerificationError& e) {
        std::cerr << "error: internal verification failure: " << e.what() << '\n';
        if (machine) std::cout << "status=verification_failure\n";
        return exit_verification;
    } catch (const NotApplicable& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (machine) std::cout << "status=not_applicable\n";
        return exit_not_applicable;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (machine) std::cout << "status=input_error\n";
        return exit_input;
    }
    return exit_input;
}
