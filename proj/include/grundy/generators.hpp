#pragma once

// Seeded instance generators. Every generator is a pure function of its
// arguments, so streams are reproducible bit for bit in any language that
// follows the rules below.
//
// Random source (Xorshift64): the seed is scrambled once by splitmix64
//   z = seed + 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   state = z ^ (z >> 31)        (replaced by 0x9E3779B97F4A7C15 if zero)
// and each draw applies
//   x ^= x << 13; x ^= x >> 7; x ^= x << 17; return x
// uniform() is (draw >> 11) * 2^-53; below(b) is draw % b.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"

namespace grundy {

class Xorshift64 {
public:
    explicit Xorshift64(std::uint64_t seed)
    {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0) {
            state_ = 0x9E3779B97F4A7C15ULL;
        }
    }

    std::uint64_t next() noexcept
    {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

// Part sizes of a chain graph: X_1..X_k and Y_1..Y_k.
struct ChainProfile {
    std::vector<std::size_t> part_sizes_x;
    std::vector<std::size_t> part_sizes_y;

    std::size_t k() const noexcept { return part_sizes_x.size(); }

    std::size_t vertex_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto s : part_sizes_x) total += s;
        for (const auto s : part_sizes_y) total += s;
        return total;
    }

    void validate() const
    {
        if (part_sizes_x.empty() || part_sizes_x.size() != part_sizes_y.size()) {
            throw InputError("chain profile needs k >= 1 parts on each side, equally many");
        }
        for (const auto s : part_sizes_x) {
            if (s == 0) throw InputError("chain profile part sizes must be positive");
        }
        for (const auto s : part_sizes_y) {
            if (s == 0) throw InputError("chain profile part sizes must be positive");
        }
    }

    friend bool operator==(const ChainProfile&, const ChainProfile&) = default;
};

namespace detail {

inline std::vector<std::size_t> parse_size_list(std::string_view text)
{
    std::vector<std::size_t> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InputError("bad part size '" + std::string(token) + "' in chain profile");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
        if (text.empty()) {
            throw InputError("trailing comma in chain profile");
        }
    }
    return out;
}

}  // namespace detail

// "1,2,1x2,1,3" -> X sizes (1,2,1), Y sizes (2,1,3).
inline ChainProfile parse_chain_profile(std::string_view text)
{
    const auto sep = text.find('x');
    if (sep == std::string_view::npos || text.find('x', sep + 1) != std::string_view::npos) {
        throw InputError("chain profile must look like 1,2x3,1");
    }
    ChainProfile p{detail::parse_size_list(text.substr(0, sep)),
                   detail::parse_size_list(text.substr(sep + 1))};
    p.validate();
    return p;
}

inline std::string to_string(const ChainProfile& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.part_sizes_x.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p.part_sizes_x[i]);
    }
    s += "x";
    for (std::size_t i = 0; i < p.part_sizes_y.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p.part_sizes_y[i]);
    }
    return s;
}

// X parts take indices first (X_1 block, X_2 block, ...), then the Y parts.
// Every vertex of X_i is adjacent to exactly Y_1 + ... + Y_i.
inline Graph chain_from_profile(const ChainProfile& p)
{
    p.validate();
    const std::size_t k = p.k();
    std::size_t n1 = 0;
    for (const auto s : p.part_sizes_x) n1 += s;

    std::vector<std::size_t> y_end(k);
    std::size_t next = n1;
    for (std::size_t i = 0; i < k; ++i) {
        next += p.part_sizes_y[i];
        y_end[i] = next;
    }

    std::vector<Edge> edges;
    Vertex x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < p.part_sizes_x[i]; ++c, ++x) {
            for (std::size_t y = n1; y < y_end[i]; ++y) {
                edges.emplace_back(x, static_cast<Vertex>(y));
            }
        }
    }
    return Graph::from_edges(p.vertex_count(), edges);
}

// Each pair u < v, in lexicographic order, becomes an edge when uniform() < p.
inline Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed)
{
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw InputError("edge probability must lie in [0, 1]");
    }
    Xorshift64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.uniform() < edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

/// m random edges over n vertices with no isolated vertex.
///
/// Edge i takes vertex v (v ascending) when the top bit of a draw is set; an
/// empty edge receives vertex below(n). Afterwards every uncovered vertex,
/// ascending, is appended to the lexicographically smallest edge (sorted
/// vertex lists, ties to the lower index), chosen once before patching.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::uint64_t seed)
{
    if (n < 1 || m < 1) {
        throw InputError("random hypergraph needs n >= 1 and m >= 1");
    }
    Xorshift64 rng(seed);
    std::vector<std::vector<Vertex>> edges(m);
    std::vector<bool> covered(n, false);
    for (auto& e : edges) {
        for (Vertex v = 0; v < n; ++v) {
            if ((rng.next() >> 63) != 0) {
                e.push_back(v);
            }
        }
        if (e.empty()) {
            e.push_back(static_cast<Vertex>(rng.below(n)));
        }
        for (const Vertex v : e) {
            covered[v] = true;
        }
    }
    const auto target = static_cast<std::size_t>(
        std::min_element(edges.begin(), edges.end()) - edges.begin());
    for (Vertex v = 0; v < n; ++v) {
        if (!covered[v]) {
            edges[target].push_back(v);
        }
    }
    return Hypergraph(n, std::move(edges));
}

// Random profile with k in [1, max_k], part sizes in [1, max_part] and at
// most max_vertices vertices in total (resampled until it fits).
inline ChainProfile random_chain_profile(std::size_t max_vertices, std::size_t max_k,
                                         std::size_t max_part, std::uint64_t seed)
{
    if (max_vertices < 2 || max_k < 1 || max_part < 1) {
        throw InputError("random chain profile needs room for at least one part per side");
    }
    max_k = std::min(max_k, max_vertices / 2);
    Xorshift64 rng(seed);
    for (;;) {
        const std::size_t k = 1 + rng.below(max_k);
        ChainProfile p;
        for (std::size_t i = 0; i < k; ++i) p.part_sizes_x.push_back(1 + rng.below(max_part));
        for (std::size_t i = 0; i < k; ++i) p.part_sizes_y.push_back(1 + rng.below(max_part));
        if (p.vertex_count() <= max_vertices) {
            return p;
        }
    }
}

// Every profile with k <= max_k, part sizes <= max_part and at most
// max_vertices vertices, in lexicographic order of (k, sizes).
inline std::vector<ChainProfile> all_chain_profiles(std::size_t max_k, std::size_t max_part,
                                                    std::size_t max_vertices)
{
    std::vector<ChainProfile> out;
    for (std::size_t k = 1; k <= max_k; ++k) {
        std::vector<std::size_t> sizes(2 * k, 1);
        for (;;) {
            ChainProfile p{{sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(k)},
                           {sizes.begin() + static_cast<std::ptrdiff_t>(k), sizes.end()}};
            if (p.vertex_count() <= max_vertices) {
                out.push_back(std::move(p));
            }
            std::size_t pos = sizes.size();
            while (pos > 0 && sizes[pos - 1] == max_part) {
                sizes[--pos] = 1;
            }
            if (pos == 0) {
                break;
            }
            ++sizes[pos - 1];
        }
    }
    return out;
}

// Calls fn(graph) for every labelled graph on n vertices (2^(n(n-1)/2) of them).
template <class Fn>
void for_each_graph(std::size_t n, Fn&& fn)
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    if (pairs.size() >= 32) {
        throw SizeCapError("graph enumeration supports at most 8 vertices");
    }
    const std::uint32_t count = std::uint32_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                edges.push_back(pairs[i]);
            }
        }
        fn(Graph::from_edges(n, edges));
    }
}

// Calls fn(hypergraph) for every multiset of m non-empty edges over n
// vertices that leaves no vertex isolated. Edges appear in ascending order
// of their vertex bitmask.
template <class Fn>
void for_each_hypergraph(std::size_t n, std::size_t m, Fn&& fn)
{
    if (n == 0 || n > 16 || m == 0) {
        throw SizeCapError("hypergraph enumeration supports 1 <= n <= 16 and m >= 1");
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> masks(m, 1);
    for (;;) {
        std::uint32_t uni = 0;
        for (const auto mask : masks) uni |= mask;
        if (uni == full) {
            std::vector<std::vector<Vertex>> edges(m);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::uint32_t rest = masks[i]; rest != 0; rest &= rest - 1) {
                    edges[i].push_back(static_cast<Vertex>(std::countr_zero(rest)));
                }
            }
            fn(Hypergraph(n, std::move(edges)));
        }
        // Next non-decreasing sequence of masks.
        std::size_t pos = m;
        while (pos > 0 && masks[pos - 1] == full) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++masks[pos - 1];
        for (std::size_t i = pos; i < m; ++i) {
            masks[i] = masks[pos - 1];
        }
    }
}

}  // namespace grundy
