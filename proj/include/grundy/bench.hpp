#pragma once

// Wall-clock scaling of chain recognition + the chain algorithm.
//
// A bench profile is a chain profile in which any part size may be the
// token "s"; for a target vertex count N every "s" part receives
// (N - fixed) / (number of s parts) vertices. With the default
// "s,1,1x1,1,s" the graph stays sparse (about 2N edges), so linear time in
// n + m shows up as linear time in N.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chain.hpp"
#include "errors.hpp"
#include "generators.hpp"

namespace grundy {

struct BenchProfile {
    // nullopt marks a scaled part.
    std::vector<std::optional<std::size_t>> x;
    std::vector<std::optional<std::size_t>> y;
};

inline BenchProfile parse_bench_profile(std::string_view text)
{
    const auto sep = text.find('x');
    if (sep == std::string_view::npos || text.find('x', sep + 1) != std::string_view::npos) {
        throw InputError("bench profile must look like s,1,1x1,1,s");
    }
    const auto parse_side = [](std::string_view side) {
        std::vector<std::optional<std::size_t>> out;
        std::size_t start = 0;
        for (;;) {
            const auto comma = side.find(',', start);
            const auto token = side.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
            if (token == "s") {
                out.emplace_back(std::nullopt);
            } else {
                const auto sizes = detail::parse_size_list(token);
                if (sizes.size() != 1 || sizes[0] == 0) {
                    throw InputError("bad bench profile token '" + std::string(token) + "'");
                }
                out.emplace_back(sizes[0]);
            }
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return out;
    };
    BenchProfile p{parse_side(text.substr(0, sep)), parse_side(text.substr(sep + 1))};
    if (p.x.size() != p.y.size() || p.x.empty()) {
        throw InputError("bench profile needs the same number of parts on each side");
    }
    return p;
}

inline ChainProfile instantiate(const BenchProfile& bp, std::size_t target_vertices)
{
    std::size_t fixed = 0;
    std::size_t scaled = 0;
    for (const auto* side : {&bp.x, &bp.y}) {
        for (const auto& part : *side) {
            if (part) {
                fixed += *part;
            } else {
                ++scaled;
            }
        }
    }
    std::size_t share = 1;
    if (scaled > 0) {
        if (target_vertices < fixed + scaled) {
            throw InputError("target size " + std::to_string(target_vertices) +
                             " too small for bench profile");
        }
        share = (target_vertices - fixed) / scaled;
    }
    ChainProfile p;
    for (const auto& part : bp.x) p.part_sizes_x.push_back(part.value_or(share));
    for (const auto& part : bp.y) p.part_sizes_y.push_back(part.value_or(share));
    return p;
}

struct BenchRow {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    double median_ms = 0.0;
    std::size_t gamma_gr = 0;
};

inline double median(std::vector<double> values)
{
    if (values.empty()) {
        return 0.0;
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// Median over `repeats` runs of recognize_chain + grundy_chain on the graph
// of size 2^e for each e in [min_exp, max_exp]. Graph construction and the
// re-verification afterwards are not timed.
inline std::vector<BenchRow> bench_chain(const BenchProfile& profile, unsigned min_exp,
                                         unsigned max_exp, std::size_t repeats)
{
    if (min_exp > max_exp || max_exp > 26 || repeats == 0) {
        throw InputError("bench needs min_exp <= max_exp <= 26 and repeats >= 1");
    }
    std::vector<BenchRow> rows;
    for (unsigned e = min_exp; e <= max_exp; ++e) {
        const Graph g = chain_from_profile(instantiate(profile, std::size_t{1} << e));
        std::vector<double> times;
        std::vector<Vertex> order;
        std::size_t claimed = 0;
        for (std::size_t r = 0; r < repeats; ++r) {
            const auto start = std::chrono::steady_clock::now();
            auto rec = recognize_chain(g);
            const auto& cs = std::get<ChainStructure>(rec);
            auto sol = grundy_chain(cs);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
            claimed = sol.scores[sol.best_index];
            order = std::move(sol.order);
        }
        verify_dominating_sequence(g, order, claimed);
        rows.push_back({g.size(), g.edge_count(), median(times), claimed});
    }
    return rows;
}

// Median of time(2N) / time(N) over consecutive rows.
inline double median_doubling_ratio(const std::vector<BenchRow>& rows)
{
    std::vector<double> ratios;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ratios.push_back(rows[i].median_ms / std::max(rows[i - 1].median_ms, 1e-9));
    }
    return median(ratios);
}

}  // namespace grundy
