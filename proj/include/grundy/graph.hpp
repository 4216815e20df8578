#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grundy {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1 in compressed sparse row form.
// Every adjacency list is sorted ascending. Immutable after construction.
class Graph {
public:
    Graph() : offsets_(1, 0) {}

    // Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

    // Throws InputError on self-loops, duplicate edges (in either orientation)
    // and endpoints >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges)
    {
        std::vector<std::size_t> degree(n, 0);
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) {
                throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " has an endpoint outside 0.." + std::to_string(n) + "-1");
            }
            if (u == v) {
                throw InputError("self-loop at vertex " + std::to_string(u));
            }
            ++degree[u];
            ++degree[v];
        }

        std::vector<std::size_t> offsets(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            offsets[v + 1] = offsets[v] + degree[v];
        }

        // Scatter in input order, then transpose once: sweeping sources in
        // ascending order yields sorted lists without a comparison sort.
        std::vector<Vertex> unsorted(offsets[n]);
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const auto& [u, v] : edges) {
            unsorted[cursor[u]++] = v;
            unsorted[cursor[v]++] = u;
        }
        std::vector<Vertex> targets(offsets[n]);
        std::copy(offsets.begin(), offsets.end() - 1, cursor.begin());
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t i = offsets[u]; i < offsets[u + 1]; ++i) {
                const Vertex v = unsorted[i];
                targets[cursor[v]++] = static_cast<Vertex>(u);
            }
        }

        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t i = offsets[v] + 1; i < offsets[v + 1]; ++i) {
                if (targets[i] == targets[i - 1]) {
                    throw InputError("duplicate edge " + std::to_string(v) + "-" +
                                     std::to_string(targets[i]));
                }
            }
        }

        Graph g;
        g.offsets_ = std::move(offsets);
        g.targets_ = std::move(targets);
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t size() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        check_vertex(v);
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(Vertex v) const
    {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }

    bool has_edge(Vertex u, Vertex v) const
    {
        const auto nu = neighbors(u);
        check_vertex(v);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    // Each edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (Vertex u = 0; u < size(); ++u) {
            for (const Vertex v : neighbors(u)) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    void check_vertex(Vertex v) const
    {
        if (v >= size()) {
            throw InputError("vertex " + std::to_string(v) + " out of range (n=" +
                             std::to_string(size()) + ")");
        }
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

// N[v] = N(v) + {v}, sorted.
inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v)
{
    const auto nv = g.neighbors(v);
    std::vector<Vertex> out;
    out.reserve(nv.size() + 1);
    const auto split = std::lower_bound(nv.begin(), nv.end(), v);
    out.insert(out.end(), nv.begin(), split);
    out.push_back(v);
    out.insert(out.end(), split, nv.end());
    return out;
}

struct Bipartition {
    std::vector<Vertex> side_x;
    std::vector<Vertex> side_y;
    std::vector<std::uint8_t> side;  // 0 = X, 1 = Y, indexed by vertex
};

// BFS 2-colouring. Each component's lowest-index vertex goes to side X, so
// isolated vertices always land in X. Returns nullopt on an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g)
{
    constexpr std::uint8_t unset = 2;
    const std::size_t n = g.size();
    std::vector<std::uint8_t> side(n, unset);
    std::vector<Vertex> queue;
    queue.reserve(n);

    for (Vertex root = 0; root < n; ++root) {
        if (side[root] != unset) {
            continue;
        }
        side[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (const Vertex w : g.neighbors(u)) {
                if (side[w] == unset) {
                    side[w] = static_cast<std::uint8_t>(1 - side[u]);
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }

    Bipartition bp;
    for (Vertex v = 0; v < n; ++v) {
        (side[v] == 0 ? bp.side_x : bp.side_y).push_back(v);
    }
    bp.side = std::move(side);
    return bp;
}

inline Graph complement(const Graph& g)
{
    const std::size_t n = g.size();
    std::vector<Edge> edges;
    if (n > 1) {
        edges.reserve(n * (n - 1) / 2 - g.edge_count());
    }
    for (Vertex u = 0; u < n; ++u) {
        const auto nu = g.neighbors(u);
        auto it = std::upper_bound(nu.begin(), nu.end(), u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (it != nu.end() && *it == v) {
                ++it;
            } else {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace grundy
