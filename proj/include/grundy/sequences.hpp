#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grundy {

// A legal closed neighbourhood sequence together with the footprint of each
// step: footprints[i] = N[order[i]] minus everything dominated before step i.
struct VertexSequence {
    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> footprints;

    std::size_t size() const noexcept { return order.size(); }

    std::size_t dominated_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto& f : footprints) {
            total += f.size();
        }
        return total;
    }
};

// First step of a sequence whose footprint is empty.
struct Violation {
    std::size_t position;
    Vertex vertex;
};

class IllegalSequenceError : public InputError {
public:
    explicit IllegalSequenceError(const Violation& v)
        : InputError("vertex " + std::to_string(v.vertex) + " at position " +
                     std::to_string(v.position) + " footprints nothing"),
          violation_(v)
    {
    }

    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

using SequenceCheck = std::variant<VertexSequence, Violation>;

// Sweeps the order left to right with a dominated-vertex mask; O(sum of
// degrees of the sequence). Footprints are always rebuilt from scratch.
// Throws InputError on out-of-range or repeated vertices.
inline SequenceCheck check_closed_neighborhood_sequence(const Graph& g,
                                                        std::span<const Vertex> order)
{
    std::vector<bool> seen(g.size(), false);
    for (const Vertex v : order) {
        g.check_vertex(v);
        if (seen[v]) {
            throw InputError("vertex " + std::to_string(v) + " repeated in sequence");
        }
        seen[v] = true;
    }

    std::vector<bool> dominated(g.size(), false);
    VertexSequence seq;
    seq.order.assign(order.begin(), order.end());
    seq.footprints.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<Vertex> footprint;
        for (const Vertex u : closed_neighborhood(g, order[i])) {
            if (!dominated[u]) {
                dominated[u] = true;
                footprint.push_back(u);
            }
        }
        if (footprint.empty()) {
            return Violation{i, order[i]};
        }
        seq.footprints.push_back(std::move(footprint));
    }
    return seq;
}

inline bool is_dominating(const Graph& g, const VertexSequence& seq)
{
    return seq.dominated_count() == g.size();
}

// Throws IllegalSequenceError when the order is not a legal sequence, so a
// false result always means "legal but leaves a vertex undominated".
inline bool is_dominating_sequence(const Graph& g, std::span<const Vertex> order)
{
    auto check = check_closed_neighborhood_sequence(g, order);
    if (const auto* bad = std::get_if<Violation>(&check)) {
        throw IllegalSequenceError(*bad);
    }
    return is_dominating(g, std::get<VertexSequence>(check));
}

// Whenever N[u] is contained in N[v] and both occur, u must come first.
// Holds for every legal sequence; exposed as a diagnostic.
inline bool check_subset_ordering(const Graph& g, const VertexSequence& seq)
{
    std::vector<std::vector<Vertex>> closed;
    closed.reserve(seq.size());
    for (const Vertex v : seq.order) {
        closed.push_back(closed_neighborhood(g, v));
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            // order[j] precedes order[i]; the forbidden case is N[order[i]] within N[order[j]].
            if (std::includes(closed[j].begin(), closed[j].end(), closed[i].begin(),
                              closed[i].end())) {
                return false;
            }
        }
    }
    return true;
}

// Re-verifies a solver witness; throws VerificationError unless it is a
// legal dominating sequence of the expected length.
inline VertexSequence verify_dominating_sequence(const Graph& g, std::span<const Vertex> order,
                                                 std::size_t expected_length)
{
    SequenceCheck check;
    try {
        check = check_closed_neighborhood_sequence(g, order);
    } catch (const InputError& e) {
        throw VerificationError(std::string("witness rejected: ") + e.what());
    }
    if (const auto* bad = std::get_if<Violation>(&check)) {
        throw VerificationError("witness illegal at position " + std::to_string(bad->position));
    }
    auto& seq = std::get<VertexSequence>(check);
    if (!is_dominating(g, seq)) {
        throw VerificationError("witness does not dominate the graph");
    }
    if (seq.size() != expected_length) {
        throw VerificationError("witness length " + std::to_string(seq.size()) +
                                " differs from claimed value " +
                                std::to_string(expected_length));
    }
    return std::move(seq);
}

}  // namespace grundy
