#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "sequences.hpp"

namespace grundy {

/// Chain ordering of a chain graph G = (X, Y, E) with its open-twin classes.
///
/// x_parts[i] is the twin class X_{i+1}; the classes are ordered so that
/// their neighbourhoods grow, and y_parts[i] = N(X_{i+1}) \ N(X_i). Hence
/// N(X_i) = Y_1 + ... + Y_i and N(Y_j) = X_j + ... + X_k. x_order and
/// y_order are the concatenations of the parts, which is a chain ordering.
struct ChainStructure {
    std::vector<Vertex> x_order;
    std::vector<Vertex> y_order;
    std::vector<std::vector<Vertex>> x_parts;
    std::vector<std::vector<Vertex>> y_parts;

    std::size_t k() const noexcept { return x_parts.size(); }
    std::size_t n1() const noexcept { return x_order.size(); }
    std::size_t n2() const noexcept { return y_order.size(); }
};

enum class ChainRejectionReason { not_bipartite, incomparable_neighborhoods, isolated_vertex };

struct ChainRejection {
    ChainRejectionReason reason;
    // For incomparable_neighborhoods: two X-vertices whose neighbourhoods are
    // not nested. For isolated_vertex: `first` is the vertex.
    Vertex first = 0;
    Vertex second = 0;

    std::string message() const
    {
        switch (reason) {
        case ChainRejectionReason::not_bipartite:
            return "not a chain graph: graph is not bipartite";
        case ChainRejectionReason::incomparable_neighborhoods:
            return "not a chain graph: neighbourhoods of " + std::to_string(first) + " and " +
                   std::to_string(second) + " are incomparable";
        case ChainRejectionReason::isolated_vertex:
            return "not a chain graph without isolated vertices: vertex " +
                   std::to_string(first) + " is isolated";
        }
        return "not a chain graph";
    }
};

using ChainRecognition = std::variant<ChainStructure, ChainRejection>;

// Sorts X by degree with a counting sort and checks that consecutive
// neighbourhoods are nested; equal degrees then force equal neighbourhoods.
// Linear in n + m. Throws PreconditionError on an empty graph or an
// isolated vertex.
inline ChainRecognition recognize_chain(const Graph& g)
{
    const std::size_t n = g.size();
    if (n == 0) {
        throw PreconditionError("chain recognition needs at least one edge");
    }
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        if (d == 0) {
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " is isolated; use the exact solver instead");
        }
        max_degree = std::max(max_degree, d);
    }

    const auto bp = bipartition(g);
    if (!bp) {
        return ChainRejection{ChainRejectionReason::not_bipartite};
    }

    std::vector<std::size_t> bucket_start(max_degree + 2, 0);
    for (const Vertex x : bp->side_x) {
        ++bucket_start[g.degree(x) + 1];
    }
    std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());

    ChainStructure cs;
    cs.x_order.resize(bp->side_x.size());
    for (const Vertex x : bp->side_x) {
        cs.x_order[bucket_start[g.degree(x)]++] = x;
    }

    for (std::size_t i = 0; i + 1 < cs.x_order.size(); ++i) {
        const auto a = g.neighbors(cs.x_order[i]);
        const auto b = g.neighbors(cs.x_order[i + 1]);
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) {
            return ChainRejection{ChainRejectionReason::incomparable_neighborhoods,
                                  cs.x_order[i], cs.x_order[i + 1]};
        }
    }

    for (std::size_t i = 0; i < cs.x_order.size(); ++i) {
        if (i == 0 || g.degree(cs.x_order[i]) != g.degree(cs.x_order[i - 1])) {
            cs.x_parts.emplace_back();
        }
        cs.x_parts.back().push_back(cs.x_order[i]);
    }

    std::vector<bool> assigned(n, false);
    for (const auto& part : cs.x_parts) {
        auto& y_part = cs.y_parts.emplace_back();
        for (const Vertex y : g.neighbors(part.front())) {
            if (!assigned[y]) {
                assigned[y] = true;
                y_part.push_back(y);
            }
        }
        cs.y_order.insert(cs.y_order.end(), y_part.begin(), y_part.end());
    }
    return cs;
}

// Checks a structure against its graph: the parts partition V, X_i is
// independent of Y_{i+1..k} and complete to Y_1..Y_i (and therefore
// N(Y_j) = X_j + ... + X_k). O(n + m).
inline bool is_valid_chain_structure(const Graph& g, const ChainStructure& cs)
{
    const std::size_t k = cs.k();
    if (k == 0 || cs.y_parts.size() != k) {
        return false;
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> x_part(g.size(), none);
    std::vector<std::size_t> y_part(g.size(), none);
    std::size_t seen = 0;
    std::vector<std::size_t> y_prefix(k + 1, 0);
    std::vector<std::size_t> x_suffix(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (cs.x_parts[i].empty() || cs.y_parts[i].empty()) {
            return false;
        }
        for (const Vertex x : cs.x_parts[i]) {
            if (x >= g.size() || x_part[x] != none || y_part[x] != none) {
                return false;
            }
            x_part[x] = i;
            ++seen;
        }
        for (const Vertex y : cs.y_parts[i]) {
            if (y >= g.size() || x_part[y] != none || y_part[y] != none) {
                return false;
            }
            y_part[y] = i;
            ++seen;
        }
        y_prefix[i + 1] = y_prefix[i] + cs.y_parts[i].size();
    }
    for (std::size_t i = k; i-- > 0;) {
        x_suffix[i] = x_suffix[i + 1] + cs.x_parts[i].size();
    }
    if (seen != g.size()) {
        return false;
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (x_part[v] != none) {
            const std::size_t i = x_part[v];
            if (g.degree(v) != y_prefix[i + 1]) {
                return false;
            }
            for (const Vertex u : g.neighbors(v)) {
                if (y_part[u] == none || y_part[u] > i) {
                    return false;
                }
            }
        } else {
            const std::size_t j = y_part[v];
            if (g.degree(v) != x_suffix[j]) {
                return false;
            }
            for (const Vertex u : g.neighbors(v)) {
                if (x_part[u] == none || x_part[u] < j) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Output of the chain-graph algorithm: the emitted order, the score table
// and the chosen index i*. For k = 1 the table has two entries, all of Y
// (index 0) and all of X (index 1).
struct ChainSolution {
    std::vector<Vertex> order;
    std::vector<std::size_t> scores;
    std::size_t best_index = 0;
};

/// Grundy dominating sequence of a chain graph from its chain structure.
///
/// The score table is
///   sum[0] = n2 + |X_1| if |Y_1| = 1, else n2
///   sum[i] = |X_1..X_i| + |Y_{i+1}..Y_k| + 1   for 1 <= i <= k-1
///   sum[k] = n1 + |Y_k| if |X_k| = 1, else n1
/// and i* is the smallest index attaining the maximum. The order emitted for
/// i* realises exactly sum[i*]. Runs in O(n).
inline ChainSolution grundy_chain(const ChainStructure& cs)
{
    const std::size_t k = cs.k();
    if (k == 0) {
        throw PreconditionError("chain structure has no parts");
    }
    const std::size_t n1 = cs.n1();
    const std::size_t n2 = cs.n2();
    ChainSolution sol;

    if (k == 1) {
        // Complete bipartite: the longer side, each vertex footprinting itself.
        sol.scores = {n2, n1};
        sol.best_index = n1 > n2 ? 1 : 0;
        sol.order = sol.best_index == 1 ? cs.x_order : cs.y_order;
        return sol;
    }

    // Parts are 1-based below to follow the usual X_1..X_k numbering.
    const auto X = [&](std::size_t i) -> const std::vector<Vertex>& { return cs.x_parts[i - 1]; };
    const auto Y = [&](std::size_t i) -> const std::vector<Vertex>& { return cs.y_parts[i - 1]; };
    auto& out = sol.order;
    const auto emit = [&](const std::vector<Vertex>& part) {
        out.insert(out.end(), part.begin(), part.end());
    };

    sol.scores.assign(k + 1, 0);
    sol.scores[0] = Y(1).size() == 1 ? n2 + X(1).size() : n2;
    std::size_t x_prefix = 0;
    std::size_t y_prefix = 0;
    for (std::size_t i = 1; i <= k - 1; ++i) {
        x_prefix += X(i).size();
        y_prefix += Y(i).size();
        sol.scores[i] = x_prefix + n2 - y_prefix + 1;
    }
    sol.scores[k] = X(k).size() == 1 ? n1 + Y(k).size() : n1;

    const std::size_t best = static_cast<std::size_t>(
        std::max_element(sol.scores.begin(), sol.scores.end()) - sol.scores.begin());
    sol.best_index = best;
    out.reserve(sol.scores[best]);

    if (best == 0 && Y(1).size() > 1) {
        for (std::size_t j = k; j >= 1; --j) {
            emit(Y(j));
        }
    } else if (best == 0) {
        emit(X(1));
        if (k >= 3) {
            for (std::size_t j = k; j >= 3; --j) {
                emit(Y(j));
            }
        }
        emit(Y(1));
        emit(Y(2));
    } else if (best == k && X(k).size() > 1) {
        for (std::size_t i = 1; i <= k; ++i) {
            emit(X(i));
        }
    } else if (best == k) {
        if (k >= 3) {
            for (std::size_t i = 1; i <= k - 2; ++i) {
                emit(X(i));
            }
            emit(Y(k));
            emit(X(k));
            emit(X(k - 1));
        } else {
            emit(Y(2));
            emit(X(2));
            emit(X(1));
        }
    } else {
        const Vertex pivot = X(best + 1).front();
        for (std::size_t i = 1; i + 1 <= best; ++i) {
            emit(X(i));
        }
        for (std::size_t j = k; j >= best + 1; --j) {
            emit(Y(j));
        }
        out.push_back(pivot);
        emit(X(best));
    }
    return sol;
}

// Runs the chain algorithm and re-verifies its output against the graph.
inline VertexSequence grundy_chain_verified(const Graph& g, const ChainStructure& cs)
{
    const auto sol = grundy_chain(cs);
    return verify_dominating_sequence(g, sol.order, sol.scores[sol.best_index]);
}

// alpha(G) = max over n1, n2 and |X_1..X_i| + |Y_{i+1}..Y_k| for 1 <= i <= k-1.
inline std::size_t independence_number_chain(const ChainStructure& cs)
{
    const std::size_t k = cs.k();
    std::size_t best = std::max(cs.n1(), cs.n2());
    std::size_t x_prefix = 0;
    std::size_t y_suffix = cs.n2();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        x_prefix += cs.x_parts[i].size();
        y_suffix -= cs.y_parts[i].size();
        best = std::max(best, x_prefix + y_suffix);
    }
    return best;
}

// Partition sizes as "k=<k> |X_i|=a,b,.. |Y_i|=c,d,..".
inline std::string chain_profile_string(const ChainStructure& cs)
{
    const auto join = [](const std::vector<std::vector<Vertex>>& parts) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            s += (i ? "," : "") + std::to_string(parts[i].size());
        }
        return s;
    };
    return "k=" + std::to_string(cs.k()) + " |X_i|=" + join(cs.x_parts) +
           " |Y_i|=" + join(cs.y_parts);
}

/// Result for a co-chain graph (the complement of a chain graph).
///
/// In G the classes X_1..X_k and Y_1..Y_k of the complement's chain
/// structure are closed-twin classes, X and Y are cliques, and
/// N[x in X_i] = X + Y_{i+1..k}, N[y in Y_j] = Y + X_{1..j-1}. Taking one
/// vertex of X_k, X_{k-1}, ..., X_1 footprints X, then Y_k, ..., Y_2 in
/// turn, and a final vertex of Y_1 footprints Y_1: a dominating sequence of
/// length k + 1. The exact solver confirms this value on every co-chain
/// graph it can reach.
struct CochainSolution {
    std::size_t classes = 0;  // k, closed-twin classes per side
    std::size_t gamma_gr = 0;
    VertexSequence witness;
    ChainStructure complement_structure;
};

using CochainRecognition = std::variant<CochainSolution, ChainRejection>;

inline CochainRecognition grundy_cochain(const Graph& g)
{
    const Graph h = complement(g);
    for (Vertex v = 0; v < h.size(); ++v) {
        if (h.degree(v) == 0) {
            return ChainRejection{ChainRejectionReason::isolated_vertex, v};
        }
    }
    auto rec = recognize_chain(h);
    if (auto* rej = std::get_if<ChainRejection>(&rec)) {
        return *rej;
    }
    auto& cs = std::get<ChainStructure>(rec);

    std::vector<Vertex> order;
    for (std::size_t i = cs.k(); i-- > 0;) {
        order.push_back(cs.x_parts[i].front());
    }
    order.push_back(cs.y_parts.front().front());

    CochainSolution sol;
    sol.classes = cs.k();
    sol.gamma_gr = order.size();
    sol.witness = verify_dominating_sequence(g, order, order.size());
    sol.complement_structure = std::move(cs);
    return sol;
}

}  // namespace grundy
