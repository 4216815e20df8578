#pragma once

// Naive reference implementations for the tests. They enumerate every legal
// sequence explicitly and share no code with the library's search routines.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/hypergraph.hpp"

namespace oracle {

using grundy::Graph;
using grundy::Hypergraph;
using grundy::Vertex;

inline std::vector<std::uint32_t> closed_masks(const Graph& g)
{
    std::vector<std::uint32_t> out(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        out[v] = std::uint32_t{1} << v;
        for (const Vertex u : g.neighbors(v)) out[v] |= std::uint32_t{1} << u;
    }
    return out;
}

// Longest legal closed-neighbourhood sequence, tried in every order. Any
// legal sequence extends to a dominating one, so the longest legal sequence
// is a longest dominating sequence.
inline std::size_t grundy_domination(const Graph& g)
{
    const auto closed = closed_masks(g);
    const auto dfs = [&](auto&& self, std::uint32_t dominated, std::uint32_t used) -> std::size_t {
        std::size_t best = 0;
        for (Vertex v = 0; v < g.size(); ++v) {
            if ((used >> v & 1U) == 0 && (closed[v] & ~dominated) != 0) {
                best = std::max(best, 1 + self(self, dominated | closed[v], used | (1U << v)));
            }
        }
        return best;
    };
    return dfs(dfs, 0, 0);
}

inline std::size_t independence_number(const Graph& g)
{
    const auto closed = closed_masks(g);
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.size()); ++s) {
        bool independent = true;
        for (Vertex v = 0; v < g.size() && independent; ++v) {
            if (s >> v & 1U) independent = (closed[v] & s) == (1U << v);
        }
        if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
    return best;
}

inline std::vector<std::uint32_t> edge_masks(const Hypergraph& h)
{
    std::vector<std::uint32_t> out;
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        for (const Vertex v : e) m |= std::uint32_t{1} << v;
        out.push_back(m);
    }
    return out;
}

// Longest legal edge sequence (every legal edge sequence extends to a cover).
inline std::size_t grundy_cover(const Hypergraph& h)
{
    const auto edges = edge_masks(h);
    const auto dfs = [&](auto&& self, std::uint32_t covered, std::uint32_t used) -> std::size_t {
        std::size_t best = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if ((used >> i & 1U) == 0 && (edges[i] & ~covered) != 0) {
                best = std::max(best, 1 + self(self, covered | edges[i], used | (1U << i)));
            }
        }
        return best;
    };
    return dfs(dfs, 0, 0);
}

// Longest legal transversal sequence.
inline std::size_t grundy_transversal(const Hypergraph& h)
{
    const auto edges = edge_masks(h);
    const auto dfs = [&](auto&& self, std::uint32_t chosen) -> std::size_t {
        std::size_t best = 0;
        for (Vertex v = 0; v < h.size(); ++v) {
            if (chosen >> v & 1U) continue;
            bool witnessed = false;
            for (const auto e : edges) {
                if ((e >> v & 1U) && (e & chosen) == 0) witnessed = true;
            }
            if (witnessed) best = std::max(best, 1 + self(self, chosen | (1U << v)));
        }
        return best;
    };
    return dfs(dfs, 0);
}

}  // namespace oracle
