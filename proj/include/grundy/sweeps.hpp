#pragma once

// Instance sweeps that check the chain algorithm, the two gadget
// equivalences and cover/transversal duality against the exact solvers.
// Each sweep is deterministic (fixed instance families and seeds) and
// reports every disagreement it finds.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chain.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "reductions.hpp"
#include "sequences.hpp"

namespace grundy {

struct SweepReport {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_samples;  // first few failures
    double seconds = 0.0;

    bool passed() const noexcept { return instances > 0 && failures == 0; }
};

using SweepCheck = std::function<std::optional<std::string>(std::size_t)>;

namespace detail {

class SweepCollector {
public:
    explicit SweepCollector(std::string name) { report_.name = std::move(name); }

    void record(std::optional<std::string> failure)
    {
        std::lock_guard lock(mutex_);
        ++report_.instances;
        if (failure) {
            ++report_.failures;
            if (report_.failure_samples.size() < 5) {
                report_.failure_samples.push_back(std::move(*failure));
            }
        }
    }

    SweepReport finish(std::chrono::steady_clock::time_point start)
    {
        report_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::move(report_);
    }

private:
    std::mutex mutex_;
    SweepReport report_;
};

inline std::size_t resolve_jobs(std::size_t jobs)
{
    if (jobs == 0) {
        jobs = std::max(1U, std::thread::hardware_concurrency());
    }
    return jobs;
}

// Runs check(i) for i in [0, count) on `jobs` workers; each instance is
// independent, so workers share nothing but the counter and the report.
inline void parallel_for(std::size_t count, std::size_t jobs,
                         const std::function<void(std::size_t)>& body)
{
    jobs = std::min(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            body(i);
        }
    };
    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
}

inline std::optional<std::string> guarded(const std::function<std::optional<std::string>()>& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

inline std::uint64_t instance_seed(std::uint64_t family, std::size_t i)
{
    return family * 0x100000001B3ULL + i;
}

}  // namespace detail

inline SweepReport run_sweep(const std::string& name, std::size_t count, std::size_t jobs,
                             const SweepCheck& check)
{
    const auto start = std::chrono::steady_clock::now();
    detail::SweepCollector collector(name);
    detail::parallel_for(count, jobs, [&](std::size_t i) {
        collector.record(detail::guarded([&] { return check(i); }));
    });
    return collector.finish(start);
}

// Exhaustive profiles (k <= 4, parts <= 3, n <= 16) followed by 1000 seeded
// random profiles with n <= 18.
inline std::vector<ChainProfile> chain_sweep_profiles()
{
    auto profiles = all_chain_profiles(4, 3, 16);
    for (std::size_t i = 0; i < 1000; ++i) {
        profiles.push_back(random_chain_profile(18, 6, 4, detail::instance_seed(11, i)));
    }
    return profiles;
}

// Chain algorithm against the exact solver; witnesses re-verified and the
// recovered partition compared with the generating profile.
inline SweepReport sweep_chain_vs_exact(std::size_t jobs = 0)
{
    const auto profiles = chain_sweep_profiles();
    return run_sweep("chain-vs-exact", profiles.size(), jobs,
                     [&](std::size_t i) -> std::optional<std::string> {
        const auto& p = profiles[i];
        const Graph g = chain_from_profile(p);
        auto rec = recognize_chain(g);
        const auto* cs = std::get_if<ChainStructure>(&rec);
        if (!cs) {
            return "profile " + to_string(p) + " not recognised";
        }
        if (!is_valid_chain_structure(g, *cs)) {
            return "profile " + to_string(p) + ": invalid chain structure";
        }
        ChainProfile recovered;
        for (const auto& part : cs->x_parts) recovered.part_sizes_x.push_back(part.size());
        for (const auto& part : cs->y_parts) recovered.part_sizes_y.push_back(part.size());
        if (!(recovered == p)) {
            return "profile " + to_string(p) + " recovered as " + to_string(recovered);
        }
        const auto seq = grundy_chain_verified(g, *cs);
        if (!check_subset_ordering(g, seq)) {
            return "profile " + to_string(p) + ": chain witness breaks subset ordering";
        }
        const auto exact = grundy_domination_exact(g);
        if (seq.size() != exact.best_length) {
            return "profile " + to_string(p) + ": chain " + std::to_string(seq.size()) +
                   " vs exact " + std::to_string(exact.best_length);
        }
        return std::nullopt;
    });
}

// K_{m,n} for 1 <= m, n <= 6: both solvers must return max(m, n).
inline SweepReport sweep_complete_bipartite(std::size_t jobs = 0)
{
    return run_sweep("complete-bipartite", 36, jobs,
                     [](std::size_t i) -> std::optional<std::string> {
        const std::size_t m = i / 6 + 1;
        const std::size_t n = i % 6 + 1;
        const Graph g = chain_from_profile({{m}, {n}});
        const std::size_t expected = std::max(m, n);
        const auto exact = grundy_domination_exact(g);
        const auto rec = recognize_chain(g);
        const auto& cs = std::get<ChainStructure>(rec);
        const auto chain = grundy_chain_verified(g, cs);
        if (exact.best_length != expected || chain.size() != expected) {
            return "K_{" + std::to_string(m) + "," + std::to_string(n) + "}: exact " +
                   std::to_string(exact.best_length) + ", chain " +
                   std::to_string(chain.size()) + ", expected " + std::to_string(expected);
        }
        return std::nullopt;
    });
}

// gamma_gr - alpha in {0, 1} on the chain sweep family, with the closed-form
// alpha checked against brute force up to 14 vertices.
inline SweepReport sweep_alpha_sandwich(std::size_t jobs = 0)
{
    const auto profiles = chain_sweep_profiles();
    return run_sweep("alpha-sandwich", profiles.size(), jobs,
                     [&](std::size_t i) -> std::optional<std::string> {
        const auto& p = profiles[i];
        const Graph g = chain_from_profile(p);
        const auto rec = recognize_chain(g);
        const auto& cs = std::get<ChainStructure>(rec);
        const std::size_t gamma = grundy_chain_verified(g, cs).size();
        const std::size_t alpha = independence_number_chain(cs);
        if (gamma < alpha || gamma - alpha > 1) {
            return "profile " + to_string(p) + ": gamma " + std::to_string(gamma) +
                   ", alpha " + std::to_string(alpha);
        }
        if (g.size() <= 14) {
            const std::size_t brute = independence_number_exact(g);
            if (brute != alpha) {
                return "profile " + to_string(p) + ": alpha formula " + std::to_string(alpha) +
                       " vs brute force " + std::to_string(brute);
            }
        }
        return std::nullopt;
    });
}

inline std::optional<std::string> check_bipartite_gadget(const Hypergraph& h)
{
    const auto map = hypergraph_to_bipartite(h);
    const auto rho = grundy_cover_exact(h).best_length;
    const auto gamma = grundy_domination_exact(map.target).best_length;
    const std::size_t expected = h.size() + h.edge_count() + rho;
    if (gamma != expected) {
        std::string edges;
        for (const auto& e : h.edges()) {
            edges += " {";
            for (std::size_t i = 0; i < e.size(); ++i) edges += (i ? "," : "") + std::to_string(e[i]);
            edges += "}";
        }
        return "hypergraph n=" + std::to_string(h.size()) + edges + ": gadget gamma " +
               std::to_string(gamma) + " vs n+m+rho " + std::to_string(expected);
    }
    return std::nullopt;
}

// Exhaustive hypergraphs with 2 <= n <= 4, m in {2, 3} and 200 seeded random
// ones with n <= 5, m <= 4: gamma_gr(gadget) == n + m + rho_gr.
inline SweepReport sweep_bipartite_reduction(std::size_t jobs = 0)
{
    std::vector<Hypergraph> family;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t m = 2; m <= 3; ++m) {
            for_each_hypergraph(n, m, [&](Hypergraph h) { family.push_back(std::move(h)); });
        }
    }
    for (std::size_t i = 0; i < 200; ++i) {
        Xorshift64 rng(detail::instance_seed(41, i));
        const std::size_t n = 2 + rng.below(4);
        const std::size_t m = 2 + rng.below(3);
        family.push_back(random_hypergraph(n, m, rng.next()));
    }
    return run_sweep("bipartite-reduction", family.size(), jobs,
                     [&](std::size_t i) { return check_bipartite_gadget(family[i]); });
}

inline std::optional<std::string> check_cobipartite_gadget(const Graph& g)
{
    const auto map = graph_to_cobipartite(g);
    if (!bipartition(complement(map.target))) {
        return "co-bipartite gadget of an " + std::to_string(g.size()) +
               "-vertex graph has a non-bipartite complement";
    }
    const auto source = grundy_domination_exact(g).best_length;
    const auto gadget = grundy_domination_exact(map.target).best_length;
    if (source != gadget) {
        return "graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) +
               ": source " + std::to_string(source) + " vs gadget " + std::to_string(gadget);
    }
    return std::nullopt;
}

// Every graph with 1 <= n <= 5 and 200 seeded random graphs with n <= 8.
inline SweepReport sweep_cobipartite_reduction(std::size_t jobs = 0)
{
    std::vector<Graph> family;
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_graph(n, [&](Graph g) { family.push_back(std::move(g)); });
    }
    for (std::size_t i = 0; i < 200; ++i) {
        Xorshift64 rng(detail::instance_seed(53, i));
        const std::size_t n = 1 + rng.below(8);
        const double p = 0.1 + 0.8 * rng.uniform();
        family.push_back(random_graph(n, p, rng.next()));
    }
    return run_sweep("cobipartite-reduction", family.size(), jobs,
                     [&](std::size_t i) { return check_cobipartite_gadget(family[i]); });
}

inline std::optional<std::string> check_duality(const Hypergraph& h)
{
    const auto rho = grundy_cover_exact(h).best_length;
    const auto tau = grundy_transversal_exact(h).best_length;
    if (rho != tau) {
        return "hypergraph n=" + std::to_string(h.size()) + " m=" +
               std::to_string(h.edge_count()) + ": rho " + std::to_string(rho) + " vs tau " +
               std::to_string(tau);
    }
    return std::nullopt;
}

// rho_gr == tau_gr on every edge multiset over n <= 6 vertices with m <= 5
// edges and no isolated vertex, plus 500 seeded random hypergraphs with
// n <= 8, m <= 6. The exhaustive part streams instances; worker j handles
// every instance whose ordinal is j modulo the worker count.
inline SweepReport sweep_hypergraph_duality(std::size_t jobs = 0)
{
    const auto start = std::chrono::steady_clock::now();
    detail::SweepCollector collector("hypergraph-duality");
    const std::size_t workers = detail::resolve_jobs(jobs);
    detail::parallel_for(workers, workers, [&](std::size_t worker) {
        std::size_t ordinal = 0;
        for (std::size_t n = 1; n <= 6; ++n) {
            for (std::size_t m = 1; m <= 5; ++m) {
                for_each_hypergraph(n, m, [&](const Hypergraph& h) {
                    if (ordinal++ % workers == worker) {
                        collector.record(detail::guarded([&] { return check_duality(h); }));
                    }
                });
            }
        }
        for (std::size_t i = worker; i < 500; i += workers) {
            Xorshift64 rng(detail::instance_seed(67, i));
            const std::size_t n = 1 + rng.below(8);
            const std::size_t m = 1 + rng.below(6);
            const auto h = random_hypergraph(n, m, rng.next());
            collector.record(detail::guarded([&] { return check_duality(h); }));
        }
    });
    return collector.finish(start);
}

// Co-chain graphs (complements of chain graphs, n <= 14): the closed form
// against the exact solver.
inline SweepReport sweep_cochain(std::size_t jobs = 0)
{
    const auto profiles = all_chain_profiles(4, 3, 14);
    return run_sweep("cochain-vs-exact", profiles.size(), jobs,
                     [&](std::size_t i) -> std::optional<std::string> {
        const Graph g = complement(chain_from_profile(profiles[i]));
        auto rec = grundy_cochain(g);
        const auto* sol = std::get_if<CochainSolution>(&rec);
        if (!sol) {
            return "profile " + to_string(profiles[i]) + ": complement not recognised";
        }
        const auto exact = grundy_domination_exact(g).best_length;
        if (sol->gamma_gr != exact) {
            return "profile " + to_string(profiles[i]) + ": co-chain value " +
                   std::to_string(sol->gamma_gr) + " vs exact " + std::to_string(exact);
        }
        return std::nullopt;
    });
}

}  // namespace grundy
