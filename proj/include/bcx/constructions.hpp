// Builders for the matroid families used as test corpora.
#ifndef BCX_CONSTRUCTIONS_HPP
#define BCX_CONSTRUCTIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "bcx/matroid.hpp"

namespace bcx {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Undirected multigraph. Vertices are 0-based; parallel edges are allowed
// and a self-loop (u == v) deliberately creates a matroid loop.
struct Graph {
    struct Edge {
        int u = 0;
        int v = 0;
        int label = 0;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;

    void add_edge(int u, int v, int label) { edges.push_back({u, v, label}); }
};

// Exact rational matrix; entries normalize themselves (gcd-reduced,
// positive denominator) through cpp_rational.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigRational> entries; // row-major

    BigRational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const BigRational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static RationalMatrix zero(std::size_t rows, std::size_t cols) {
        return RationalMatrix{rows, cols, std::vector<BigRational>(rows * cols)};
    }
};

// Matrix of residues mod a prime p.
struct PrimeFieldMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::int64_t p = 2;
    std::vector<std::int64_t> entries; // row-major, values in [0, p)

    std::int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static PrimeFieldMatrix zero(std::size_t rows, std::size_t cols, std::int64_t p) {
        return PrimeFieldMatrix{rows, cols, p, std::vector<std::int64_t>(rows * cols, 0)};
    }
};

bool is_prime(std::int64_t p);

// U_{r,n} on labels 1..n: circuits are all (r+1)-subsets.
Matroid uniform(int r, int n);

// Cycle matroid: ground = edge labels, circuits = edge sets of simple
// cycles (including 2-cycles from parallel edges and 1-cycles from
// self-loops).
Matroid graphic(const Graph& g);

// Vector matroids: ground = column indices 1..cols, circuits = minimal
// linearly dependent column sets, found by exact elimination.
Matroid linear_rational(const RationalMatrix& a);
Matroid linear_prime(const PrimeFieldMatrix& a);

// Exact rank of the column subset selected by `columns`.
std::size_t rational_column_rank(const RationalMatrix& a, const std::vector<std::size_t>& columns);
std::size_t prime_column_rank(const PrimeFieldMatrix& a, const std::vector<std::size_t>& columns);

// Standard parametric graphs; edge labels are 1-based and deterministic.
Graph triangle();
Graph wheel(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
// The complete bipartite graph K_{2,3} with the edge labeling used
// throughout the test corpus: spokes 1,2 through the middle vertex and
// rim edges 3..6.
Graph k23_graph();

// Deterministic enumeration of all connected loopless multigraphs with
// 1..max_edges edges, one representative per isomorphism class, in a
// stable order (by edge count, then canonical encoding). Restartable and
// independent per consumer.
std::vector<Graph> family_graphs(int max_edges);

// Canonical encoding used for dedup and ordering in family_graphs: the
// lexicographically smallest sorted edge-endpoint list over vertex
// relabelings (restricted to degree-compatible permutations).
std::vector<std::pair<int, int>> canonical_graph_encoding(const Graph& g);

} // namespace bcx

#endif
