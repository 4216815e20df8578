#pragma once

// Exhaustive solvers for desk-scale instances: the Grundy domination number
// of a graph, and the Grundy cover / Grundy transversal numbers of a
// hypergraph. All of them are exponential and refuse inputs above a hard cap
// instead of running indefinitely.
//
// Graph search. The state after a legal prefix is the set D of vertices it
// dominates. Whether a vertex v may be appended depends only on D (N[v] must
// leave D), and appending it moves the state to D | N[v]. Hence the set of
// legal continuations, and with it the longest completion to a dominating
// sequence, is a function of D alone: two prefixes that dominate the same
// set have identical futures, whatever vertices they used. The solver
// therefore memoises best_from(D) in a table indexed by the bitmask D. Every
// further step footprints at least one new vertex, so |V \ D| bounds
// best_from(D) and the branch loop stops as soon as a child reaches it. The
// memo-free mode (SearchOptions::memoize = false) runs a plain depth-first
// enumeration with the prune "length + |V \ D| <= best" and serves as an
// independent cross-check on small graphs.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "sequences.hpp"

namespace grundy {

// Largest vertex count any dense memo table may be built for (2^24 bytes).
inline constexpr std::size_t exact_vertex_ceiling = 24;

struct SearchOptions {
    std::size_t max_vertices = 20;
    std::size_t max_edges = 20;
    std::optional<std::uint64_t> node_budget = std::nullopt;
    bool memoize = true;
};

enum class SearchStatus { optimal, budget_exceeded };

template <class Witness>
struct SearchResult {
    SearchStatus status = SearchStatus::optimal;
    std::size_t best_length = 0;
    Witness best_sequence{};
    std::uint64_t nodes_explored = 0;

    bool optimal() const noexcept { return status == SearchStatus::optimal; }
};

using GraphSearchResult = SearchResult<VertexSequence>;
using CoverSearchResult = SearchResult<std::vector<std::size_t>>;
using TransversalSearchResult = SearchResult<std::vector<Vertex>>;

namespace detail {

struct BudgetExhausted {};

class NodeCounter {
public:
    explicit NodeCounter(std::optional<std::uint64_t> budget)
        : budget_(budget.value_or(std::numeric_limits<std::uint64_t>::max()))
    {
    }

    void tick()
    {
        if (++count_ > budget_) {
            throw BudgetExhausted{};
        }
    }

    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t budget_;
    std::uint64_t count_ = 0;
};

inline std::vector<std::uint32_t> closed_neighborhood_masks(const Graph& g)
{
    std::vector<std::uint32_t> masks(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        std::uint32_t m = std::uint32_t{1} << v;
        for (const Vertex u : g.neighbors(v)) {
            m |= std::uint32_t{1} << u;
        }
        masks[v] = m;
    }
    return masks;
}

// Vertices whose closed neighbourhood leaves `dominated`, by descending
// residual footprint and then by index.
inline std::size_t ordered_candidates(const std::vector<std::uint32_t>& closed,
                                      std::uint32_t dominated,
                                      std::array<Vertex, exact_vertex_ceiling>& out)
{
    std::array<int, exact_vertex_ceiling> gain{};
    std::size_t count = 0;
    for (Vertex v = 0; v < closed.size(); ++v) {
        const int g = std::popcount(closed[v] & ~dominated);
        if (g > 0) {
            gain[v] = g;
            out[count++] = v;
        }
    }
    std::stable_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(count),
                     [&](Vertex a, Vertex b) { return gain[a] > gain[b]; });
    return count;
}

class DominationSearch {
public:
    DominationSearch(const Graph& g, const SearchOptions& opts)
        : closed_(closed_neighborhood_masks(g)),
          full_(g.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.size()) - 1),
          nodes_(opts.node_budget)
    {
        if (opts.memoize) {
            memo_.assign(std::size_t{1} << g.size(), -1);
        }
    }

    std::vector<Vertex> run_memoized()
    {
        std::vector<Vertex> order;
        std::uint32_t dominated = 0;
        while (dominated != full_) {
            const int target = best_from(dominated);
            std::array<Vertex, exact_vertex_ceiling> cand{};
            const std::size_t count = ordered_candidates(closed_, dominated, cand);
            for (std::size_t i = 0; i < count; ++i) {
                const std::uint32_t next = dominated | closed_[cand[i]];
                if (1 + best_from(next) == target) {
                    order.push_back(cand[i]);
                    dominated = next;
                    break;
                }
            }
        }
        return order;
    }

    std::vector<Vertex> run_plain()
    {
        std::vector<Vertex> prefix;
        enumerate(0, prefix);
        return best_plain_;
    }

    std::uint64_t nodes() const noexcept { return nodes_.count(); }

private:
    int best_from(std::uint32_t dominated)
    {
        if (dominated == full_) {
            return 0;
        }
        if (memo_[dominated] >= 0) {
            return memo_[dominated];
        }
        nodes_.tick();
        const int bound = std::popcount(full_ & ~dominated);
        std::array<Vertex, exact_vertex_ceiling> cand{};
        const std::size_t count = ordered_candidates(closed_, dominated, cand);
        int best = 0;
        for (std::size_t i = 0; i < count && best < bound; ++i) {
            best = std::max(best, 1 + best_from(dominated | closed_[cand[i]]));
        }
        memo_[dominated] = static_cast<std::int8_t>(best);
        return best;
    }

    void enumerate(std::uint32_t dominated, std::vector<Vertex>& prefix)
    {
        nodes_.tick();
        if (dominated == full_) {
            if (best_plain_.empty() || prefix.size() > best_plain_.size()) {
                best_plain_ = prefix;
            }
            return;
        }
        const auto undominated = static_cast<std::size_t>(std::popcount(full_ & ~dominated));
        if (!best_plain_.empty() && prefix.size() + undominated <= best_plain_.size()) {
            return;
        }
        std::array<Vertex, exact_vertex_ceiling> cand{};
        const std::size_t count = ordered_candidates(closed_, dominated, cand);
        for (std::size_t i = 0; i < count; ++i) {
            prefix.push_back(cand[i]);
            enumerate(dominated | closed_[cand[i]], prefix);
            prefix.pop_back();
        }
    }

    std::vector<std::uint32_t> closed_;
    std::uint32_t full_;
    std::vector<std::int8_t> memo_;
    NodeCounter nodes_;
    std::vector<Vertex> best_plain_;
};

}  // namespace detail

inline void check_exact_cap(std::size_t n, const SearchOptions& opts)
{
    const std::size_t cap = std::min(opts.max_vertices, exact_vertex_ceiling);
    if (n > cap) {
        throw SizeCapError("exact search is capped at " + std::to_string(cap) +
                           " vertices; instance has " + std::to_string(n));
    }
}

// Grundy domination number by memoised depth-first search. The witness is
// re-verified through the sequences module before it is returned.
inline GraphSearchResult grundy_domination_exact(const Graph& g, const SearchOptions& opts = {})
{
    check_exact_cap(g.size(), opts);
    detail::DominationSearch search(g, opts);
    GraphSearchResult result;
    std::vector<Vertex> order;
    try {
        order = opts.memoize ? search.run_memoized() : search.run_plain();
    } catch (const detail::BudgetExhausted&) {
        result.status = SearchStatus::budget_exceeded;
        result.nodes_explored = search.nodes();
        return result;
    }
    result.nodes_explored = search.nodes();
    result.best_length = order.size();
    result.best_sequence = verify_dominating_sequence(g, order, order.size());
    return result;
}

// Brute-force independence number over all vertex subsets.
inline std::size_t independence_number_exact(const Graph& g,
                                             std::size_t max_vertices = exact_vertex_ceiling)
{
    check_exact_cap(g.size(), SearchOptions{.max_vertices = max_vertices});
    const std::size_t n = g.size();
    std::vector<std::uint32_t> open(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (const Vertex u : g.neighbors(v)) {
            open[v] |= std::uint32_t{1} << u;
        }
    }
    std::size_t best = 0;
    const std::uint32_t limit = n == 0 ? 1 : (std::uint32_t{1} << n);
    for (std::uint32_t set = 0; set < limit; ++set) {
        const auto size = static_cast<std::size_t>(std::popcount(set));
        if (size <= best) {
            continue;
        }
        bool independent = true;
        for (std::uint32_t rest = set; rest != 0 && independent; rest &= rest - 1) {
            independent = (open[std::countr_zero(rest)] & set) == 0;
        }
        if (independent) {
            best = size;
        }
    }
    return best;
}

namespace detail {

// Vertices with the same set of incident edges are covered together, so the
// cover search tracks one bit per distinct incidence pattern.
struct CoverClasses {
    std::size_t class_count = 0;
    std::vector<std::uint64_t> edge_masks;
};

inline CoverClasses compress_cover_classes(const Hypergraph& h)
{
    std::unordered_map<std::uint32_t, std::size_t> class_of_pattern;
    std::vector<std::size_t> vertex_class(h.size());
    for (Vertex v = 0; v < h.size(); ++v) {
        std::uint32_t pattern = 0;
        for (const std::size_t e : h.incident_edges(v)) {
            pattern |= std::uint32_t{1} << e;
        }
        const auto [it, inserted] = class_of_pattern.try_emplace(pattern, class_of_pattern.size());
        vertex_class[v] = it->second;
    }
    if (class_of_pattern.size() > 64) {
        throw SizeCapError("cover search supports at most 64 vertex classes; instance has " +
                           std::to_string(class_of_pattern.size()));
    }
    CoverClasses out;
    out.class_count = class_of_pattern.size();
    out.edge_masks.assign(h.edge_count(), 0);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        for (const Vertex v : h.edge(e)) {
            out.edge_masks[e] |= std::uint64_t{1} << vertex_class[v];
        }
    }
    return out;
}

class CoverSearch {
public:
    CoverSearch(const Hypergraph& h, const SearchOptions& opts)
        : classes_(compress_cover_classes(h)),
          full_(classes_.class_count == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << classes_.class_count) - 1),
          nodes_(opts.node_budget)
    {
        if (classes_.class_count <= exact_vertex_ceiling) {
            dense_.assign(std::size_t{1} << classes_.class_count, -1);
        }
    }

    std::vector<std::size_t> run()
    {
        std::vector<std::size_t> order;
        std::uint64_t covered = 0;
        while (covered != full_) {
            const int target = best_from(covered);
            for (const std::size_t e : candidates(covered)) {
                const std::uint64_t next = covered | classes_.edge_masks[e];
                if (1 + best_from(next) == target) {
                    order.push_back(e);
                    covered = next;
                    break;
                }
            }
        }
        return order;
    }

    std::uint64_t nodes() const noexcept { return nodes_.count(); }

private:
    std::vector<std::size_t> candidates(std::uint64_t covered) const
    {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < classes_.edge_masks.size(); ++e) {
            if ((classes_.edge_masks[e] & ~covered) != 0) {
                out.push_back(e);
            }
        }
        std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(classes_.edge_masks[a] & ~covered) >
                   std::popcount(classes_.edge_masks[b] & ~covered);
        });
        return out;
    }

    int best_from(std::uint64_t covered)
    {
        if (covered == full_) {
            return 0;
        }
        if (auto cached = lookup(covered)) {
            return *cached;
        }
        nodes_.tick();
        const auto cand = candidates(covered);
        const int bound = std::min(std::popcount(full_ & ~covered), static_cast<int>(cand.size()));
        int best = 0;
        for (std::size_t i = 0; i < cand.size() && best < bound; ++i) {
            best = std::max(best, 1 + best_from(covered | classes_.edge_masks[cand[i]]));
        }
        store(covered, best);
        return best;
    }

    std::optional<int> lookup(std::uint64_t key) const
    {
        if (!dense_.empty()) {
            return dense_[key] >= 0 ? std::optional<int>(dense_[key]) : std::nullopt;
        }
        const auto it = sparse_.find(key);
        return it == sparse_.end() ? std::nullopt : std::optional<int>(it->second);
    }

    void store(std::uint64_t key, int value)
    {
        if (!dense_.empty()) {
            dense_[key] = static_cast<std::int8_t>(value);
        } else {
            sparse_.emplace(key, static_cast<std::int8_t>(value));
        }
    }

    CoverClasses classes_;
    std::uint64_t full_;
    std::vector<std::int8_t> dense_;
    std::unordered_map<std::uint64_t, std::int8_t> sparse_;
    NodeCounter nodes_;
};

// Available-edge set -> longest legal transversal continuation. A vertex may
// be appended while some edge containing it avoids every earlier vertex;
// appending it spends all of its edges.
class TransversalSearch {
public:
    TransversalSearch(const Hypergraph& h, const SearchOptions& opts)
        : all_((std::uint32_t{1} << h.edge_count()) - 1),
          memo_(std::size_t{1} << h.edge_count(), -1),
          nodes_(opts.node_budget)
    {
        // One representative (the lowest index) per distinct incidence pattern.
        std::unordered_map<std::uint32_t, Vertex> seen;
        for (Vertex v = 0; v < h.size(); ++v) {
            std::uint32_t pattern = 0;
            for (const std::size_t e : h.incident_edges(v)) {
                pattern |= std::uint32_t{1} << e;
            }
            if (pattern != 0 && seen.try_emplace(pattern, v).second) {
                reps_.push_back(v);
                patterns_.push_back(pattern);
            }
        }
    }

    std::vector<Vertex> run()
    {
        std::vector<Vertex> order;
        std::uint32_t available = all_;
        while (available != 0) {
            const int target = best_from(available);
            for (const std::size_t r : candidates(available)) {
                const std::uint32_t next = available & ~patterns_[r];
                if (1 + best_from(next) == target) {
                    order.push_back(reps_[r]);
                    available = next;
                    break;
                }
            }
        }
        return order;
    }

    std::uint64_t nodes() const noexcept { return nodes_.count(); }

private:
    // Fewest edges spent first, then by vertex index.
    std::vector<std::size_t> candidates(std::uint32_t available) const
    {
        std::vector<std::size_t> out;
        for (std::size_t r = 0; r < reps_.size(); ++r) {
            if ((patterns_[r] & available) != 0) {
                out.push_back(r);
            }
        }
        std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(patterns_[a] & available) <
                   std::popcount(patterns_[b] & available);
        });
        return out;
    }

    int best_from(std::uint32_t available)
    {
        if (available == 0) {
            return 0;
        }
        if (memo_[available] >= 0) {
            return memo_[available];
        }
        nodes_.tick();
        const int bound = std::popcount(available);
        int best = 0;
        for (const std::size_t r : candidates(available)) {
            if (best >= bound) {
                break;
            }
            best = std::max(best, 1 + best_from(available & ~patterns_[r]));
        }
        memo_[available] = static_cast<std::int8_t>(best);
        return best;
    }

    std::uint32_t all_;
    std::vector<std::int8_t> memo_;
    std::vector<Vertex> reps_;
    std::vector<std::uint32_t> patterns_;
    NodeCounter nodes_;
};

inline void check_edge_cap(const Hypergraph& h, const SearchOptions& opts)
{
    const std::size_t cap = std::min(opts.max_edges, exact_vertex_ceiling);
    if (h.edge_count() > cap) {
        throw SizeCapError("exact hypergraph search is capped at " + std::to_string(cap) +
                           " edges; instance has " + std::to_string(h.edge_count()));
    }
}

}  // namespace detail

// Grundy cover number: the longest legal edge sequence whose edges cover
// every vertex. Requires every vertex to lie in some edge.
inline CoverSearchResult grundy_cover_exact(const Hypergraph& h, const SearchOptions& opts = {})
{
    detail::check_edge_cap(h, opts);
    if (const auto isolated = h.first_isolated_vertex()) {
        throw PreconditionError("vertex " + std::to_string(*isolated) +
                                " lies in no edge; the Grundy cover number is undefined");
    }
    detail::CoverSearch search(h, opts);
    CoverSearchResult result;
    try {
        result.best_sequence = search.run();
    } catch (const detail::BudgetExhausted&) {
        result.status = SearchStatus::budget_exceeded;
        result.nodes_explored = search.nodes();
        return result;
    }
    result.nodes_explored = search.nodes();
    result.best_length = result.best_sequence.size();
    if (!is_legal_edge_sequence(h, result.best_sequence) ||
        !is_edge_cover(h, result.best_sequence)) {
        throw VerificationError("cover witness failed re-verification");
    }
    return result;
}

// Grundy transversal number: the longest legal transversal sequence.
inline TransversalSearchResult grundy_transversal_exact(const Hypergraph& h,
                                                        const SearchOptions& opts = {})
{
    detail::check_edge_cap(h, opts);
    detail::TransversalSearch search(h, opts);
    TransversalSearchResult result;
    try {
        result.best_sequence = search.run();
    } catch (const detail::BudgetExhausted&) {
        result.status = SearchStatus::budget_exceeded;
        result.nodes_explored = search.nodes();
        return result;
    }
    result.nodes_explored = search.nodes();
    result.best_length = result.best_sequence.size();
    if (!is_legal_transversal_sequence(h, result.best_sequence)) {
        throw VerificationError("transversal witness failed re-verification");
    }
    return result;
}

}  // namespace grundy
