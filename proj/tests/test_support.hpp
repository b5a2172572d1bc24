// Shared oracles and fixtures: brute-force reference computations kept
// independent of the library paths they cross-check.
#ifndef BCX_TEST_SUPPORT_HPP
#define BCX_TEST_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "bcx/constructions.hpp"
#include "bcx/invariants.hpp"
#include "bcx/matroid.hpp"

namespace bcx_test {

using bcx::Mask;

inline std::optional<bcx::ErrorCode> error_code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const bcx::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

// Rank by exhaustive enumeration of independent subsets (definition only,
// no greedy step).
inline int brute_force_rank(const bcx::Matroid& m, Mask x) {
    int best = 0;
    for (Mask sub = x;; sub = (sub - 1) & x) {
        bool independent = true;
        for (Mask c : m.circuits()) {
            if (bcx::subset_of(c, sub)) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, bcx::popcount(sub));
        if (sub == 0) break;
    }
    return best;
}

// Face counts of the broken circuit complex by direct enumeration of all
// subsets against the raw (unminimalized) broken circuit list.
inline std::vector<std::int64_t> bc_face_counts_by_enumeration(const bcx::Matroid& m,
                                                               const bcx::LinearOrder& order) {
    std::vector<Mask> broken;
    for (Mask c : m.circuits()) broken.push_back(c & ~bcx::bit(order.least_index(c)));
    std::vector<std::int64_t> counts(m.size() + 1, 0);
    const Mask all = bcx::full_mask(m.size());
    for (Mask x = 0;; ++x) {
        bool face = true;
        for (Mask b : broken) {
            if (bcx::subset_of(b, x)) {
                face = false;
                break;
            }
        }
        if (face) ++counts[static_cast<std::size_t>(bcx::popcount(x))];
        if (x == all) break;
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

// Rank of an edge subset straight from graph theory: touched vertices
// minus components of the induced subgraph.
inline int graph_subset_rank(const bcx::Graph& g, const std::vector<int>& edge_labels) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    std::vector<bool> touched(g.vertex_count, false);
    for (const auto& e : g.edges) {
        if (std::find(edge_labels.begin(), edge_labels.end(), e.label) == edge_labels.end()) continue;
        touched[e.u] = touched[e.v] = true;
        parent[find(e.u)] = find(e.v);
    }
    int vertices = 0, components = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (!touched[v]) continue;
        ++vertices;
        if (find(v) == v) ++components;
    }
    return vertices - components;
}

// The definitional double loop: a_i <= a_j for all 0 <= i <= j <= s-i.
inline bool strongly_flawless_by_definition(const std::vector<std::int64_t>& a) {
    const int s = static_cast<int>(a.size()) - 1;
    for (int i = 0; i <= s; ++i) {
        for (int j = i; j <= s - i; ++j) {
            if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(j)]) return false;
        }
    }
    return true;
}

inline bcx::Matroid u23() { return bcx::uniform(2, 3); }

inline bcx::Matroid k23_matroid() { return bcx::graphic(bcx::k23_graph()); }

// Theta graph with paths of lengths 3, 2, 2 between the branch vertices;
// edges 1,2,3 form the length-3 series class.
inline bcx::Graph theta322() {
    bcx::Graph g;
    g.vertex_count = 6;
    g.add_edge(0, 1, 1);
    g.add_edge(0, 4, 2);
    g.add_edge(1, 5, 3);
    g.add_edge(2, 4, 4);
    g.add_edge(2, 5, 5);
    g.add_edge(3, 4, 6);
    g.add_edge(3, 5, 7);
    return g;
}

// Two triangles sharing a vertex: connected graph, disconnected matroid.
inline bcx::Graph bowtie() {
    bcx::Graph g;
    g.vertex_count = 5;
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 0, 3);
    g.add_edge(2, 3, 4);
    g.add_edge(3, 4, 5);
    g.add_edge(4, 2, 6);
    return g;
}

// A small mixed corpus exercised by the property tests.
inline std::vector<bcx::Matroid> small_corpus() {
    std::vector<bcx::Matroid> corpus;
    corpus.push_back(bcx::uniform(1, 1));
    corpus.push_back(bcx::uniform(1, 2));
    corpus.push_back(bcx::uniform(2, 2));
    corpus.push_back(u23());
    corpus.push_back(bcx::uniform(1, 3));
    corpus.push_back(bcx::uniform(2, 4));
    corpus.push_back(bcx::uniform(3, 4));
    corpus.push_back(bcx::uniform(3, 3));
    corpus.push_back(k23_matroid());
    corpus.push_back(bcx::graphic(bcx::triangle()));
    corpus.push_back(bcx::graphic(bcx::complete(4)));
    corpus.push_back(bcx::graphic(theta322()));
    corpus.push_back(bcx::graphic(bowtie()));
    return corpus;
}

} // namespace bcx_test

#endif
