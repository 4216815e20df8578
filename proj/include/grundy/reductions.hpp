#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "sequences.hpp"

namespace grundy {

// Blocks of the two gadget graphs. The bipartite gadget of a hypergraph
// uses A, X', E', B; the co-bipartite gadget of a graph uses V1, V2.
enum class Block { a, x_prime, e_prime, b, v1, v2 };

struct VertexRole {
    Block block;
    std::size_t source;  // index within the block (source vertex or edge)

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

inline std::string block_name(Block b)
{
    switch (b) {
    case Block::a: return "A";
    case Block::x_prime: return "X";
    case Block::e_prime: return "E";
    case Block::b: return "B";
    case Block::v1: return "V1";
    case Block::v2: return "V2";
    }
    return "?";
}

// Provenance tag, e.g. "E:3" for the vertex standing for source edge 3.
inline std::string role_tag(const VertexRole& r)
{
    return block_name(r.block) + ":" + std::to_string(r.source);
}

struct ReductionMap {
    Graph target;
    std::vector<VertexRole> role_of;

    // Target vertices are numbered block by block, each block in source order.
    std::vector<Vertex> block_vertices(Block b) const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < role_of.size(); ++v) {
            if (role_of[v].block == b) {
                out.push_back(v);
            }
        }
        return out;
    }
};

/// Bipartite gadget of a hypergraph with n vertices and m edges (n, m >= 2,
/// no isolated vertex). Vertices are A (n), X' (n), E' (m), B (m) in that
/// order; A-X' and E'-B are complete bipartite, and x'_v is adjacent to e_i
/// exactly when v lies in edge i. Sides are A + E' and X' + B.
inline ReductionMap hypergraph_to_bipartite(const Hypergraph& h)
{
    const std::size_t n = h.size();
    const std::size_t m = h.edge_count();
    if (n < 2 || m < 2) {
        throw PreconditionError("bipartite gadget needs n >= 2 and m >= 2 (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    if (const auto isolated = h.first_isolated_vertex()) {
        throw PreconditionError("vertex " + std::to_string(*isolated) + " lies in no edge");
    }

    const auto a = [](std::size_t i) { return static_cast<Vertex>(i); };
    const auto x = [n](std::size_t i) { return static_cast<Vertex>(n + i); };
    const auto e = [n](std::size_t i) { return static_cast<Vertex>(2 * n + i); };
    const auto b = [n, m](std::size_t i) { return static_cast<Vertex>(2 * n + m + i); };

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            edges.emplace_back(a(i), x(j));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            edges.emplace_back(e(i), b(j));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (const Vertex v : h.edge(i)) {
            edges.emplace_back(x(v), e(i));
        }
    }

    ReductionMap map;
    map.target = Graph::from_edges(2 * n + 2 * m, edges);
    map.role_of.reserve(2 * n + 2 * m);
    for (std::size_t i = 0; i < n; ++i) map.role_of.push_back({Block::a, i});
    for (std::size_t i = 0; i < n; ++i) map.role_of.push_back({Block::x_prime, i});
    for (std::size_t i = 0; i < m; ++i) map.role_of.push_back({Block::e_prime, i});
    for (std::size_t i = 0; i < m; ++i) map.role_of.push_back({Block::b, i});
    return map;
}

/// Co-bipartite gadget of a graph: two cliques V1 and V2 on copies of V,
/// with v_i^1 adjacent to v_j^2 exactly when v_j is in N[v_i]. V1 occupies
/// indices 0..n-1 and V2 indices n..2n-1.
inline ReductionMap graph_to_cobipartite(const Graph& g)
{
    const std::size_t n = g.size();
    if (n == 0) {
        throw PreconditionError("co-bipartite gadget needs at least one vertex");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + j));
        }
    }
    for (Vertex i = 0; i < n; ++i) {
        for (const Vertex j : closed_neighborhood(g, i)) {
            edges.emplace_back(i, static_cast<Vertex>(n + j));
        }
    }

    ReductionMap map;
    map.target = Graph::from_edges(2 * n, edges);
    map.role_of.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) map.role_of.push_back({Block::v1, i});
    for (std::size_t i = 0; i < n; ++i) map.role_of.push_back({Block::v2, i});
    return map;
}

// Diagnostic translation of a dominating sequence of the bipartite gadget
// back to the hypergraph: its E' vertices read as an edge sequence and its
// X' vertices as a transversal sequence, each checked for legality.
struct GadgetProjection {
    std::vector<std::size_t> edge_sequence;
    std::vector<Vertex> transversal;
    bool edge_sequence_legal = false;
    bool edge_sequence_covers = false;
    bool transversal_legal = false;
};

inline GadgetProjection project_gadget_sequence(const ReductionMap& map, const Hypergraph& h,
                                                const VertexSequence& seq)
{
    GadgetProjection p;
    for (const Vertex v : seq.order) {
        const auto& role = map.role_of.at(v);
        if (role.block == Block::e_prime) {
            p.edge_sequence.push_back(role.source);
        } else if (role.block == Block::x_prime) {
            p.transversal.push_back(static_cast<Vertex>(role.source));
        }
    }
    p.edge_sequence_legal = is_legal_edge_sequence(h, p.edge_sequence);
    p.edge_sequence_covers = is_edge_cover(h, p.edge_sequence);
    p.transversal_legal = is_legal_transversal_sequence(h, p.transversal);
    return p;
}

}  // namespace grundy
