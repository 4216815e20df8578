#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grundy {

// Hypergraph on vertices 0..n-1 with an ordered list of non-empty edges.
// Edge order is the caller's; nothing is canonicalised, so edge i is
// always the i-th edge given at construction.
class Hypergraph {
public:
    static constexpr std::size_t mask_limit = 128;
    using Mask = std::bitset<mask_limit>;

    Hypergraph() = default;

    Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges)
        : n_(n), edges_(std::move(edges)), incidence_(n)
    {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto& e = edges_[i];
            if (e.empty()) {
                throw InputError("edge " + std::to_string(i) + " is empty");
            }
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
                throw InputError("edge " + std::to_string(i) + " repeats a vertex");
            }
            if (e.back() >= n_) {
                throw InputError("edge " + std::to_string(i) + " contains vertex " +
                                 std::to_string(e.back()) + " >= n=" + std::to_string(n_));
            }
            for (const Vertex v : e) {
                incidence_[v].push_back(i);
            }
        }
        if (n_ <= mask_limit) {
            masks_.emplace();
            masks_->reserve(edges_.size());
            for (const auto& e : edges_) {
                Mask m;
                for (const Vertex v : e) {
                    m.set(v);
                }
                masks_->push_back(m);
            }
        }
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::vector<Vertex>>& edges() const noexcept { return edges_; }

    std::span<const Vertex> edge(std::size_t i) const
    {
        check_edge(i);
        return edges_[i];
    }

    // Indices of the edges containing v, ascending.
    std::span<const std::size_t> incident_edges(Vertex v) const
    {
        if (v >= n_) {
            throw InputError("vertex " + std::to_string(v) + " out of range (n=" +
                             std::to_string(n_) + ")");
        }
        return incidence_[v];
    }

    bool has_masks() const noexcept { return masks_.has_value(); }

    // Only available when n <= mask_limit.
    const Mask& mask(std::size_t i) const
    {
        check_edge(i);
        return masks_.value()[i];
    }

    std::optional<Vertex> first_isolated_vertex() const
    {
        for (Vertex v = 0; v < n_; ++v) {
            if (incidence_[v].empty()) {
                return v;
            }
        }
        return std::nullopt;
    }

    void check_edge(std::size_t i) const
    {
        if (i >= edges_.size()) {
            throw InputError("edge index " + std::to_string(i) + " out of range (m=" +
                             std::to_string(edges_.size()) + ")");
        }
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::optional<std::vector<Mask>> masks_;
};

// True iff the union of the chosen edges is the whole vertex set.
inline bool is_edge_cover(const Hypergraph& h, std::span<const std::size_t> chosen)
{
    std::vector<bool> covered(h.size(), false);
    std::size_t count = 0;
    for (const std::size_t i : chosen) {
        for (const Vertex v : h.edge(i)) {
            if (!covered[v]) {
                covered[v] = true;
                ++count;
            }
        }
    }
    return count == h.size();
}

// Every edge must contain a vertex outside all earlier edges of the sequence.
inline bool is_legal_edge_sequence(const Hypergraph& h, std::span<const std::size_t> seq)
{
    std::vector<bool> used(h.edge_count(), false);
    for (const std::size_t i : seq) {
        h.check_edge(i);
        if (used[i]) {
            throw InputError("edge " + std::to_string(i) + " repeated in sequence");
        }
        used[i] = true;
    }

    std::vector<bool> covered(h.size(), false);
    for (const std::size_t i : seq) {
        bool adds = false;
        for (const Vertex v : h.edge(i)) {
            if (!covered[v]) {
                covered[v] = true;
                adds = true;
            }
        }
        if (!adds) {
            return false;
        }
    }
    return true;
}

// Every vertex needs a witnessing edge that contains it and no earlier
// vertex of the sequence. An edge is spent once any sequence vertex hits it.
inline bool is_legal_transversal_sequence(const Hypergraph& h, std::span<const Vertex> seq)
{
    std::vector<bool> hit(h.edge_count(), false);
    for (const Vertex v : seq) {
        const auto incident = h.incident_edges(v);
        const bool witnessed =
            std::any_of(incident.begin(), incident.end(), [&](std::size_t e) { return !hit[e]; });
        if (!witnessed) {
            return false;
        }
        for (const std::size_t e : incident) {
            hit[e] = true;
        }
    }
    return true;
}

}  // namespace grundy
