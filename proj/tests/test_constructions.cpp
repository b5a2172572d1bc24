#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bcx/constructions.hpp"
#include "test_support.hpp"

using namespace bcx;
using namespace bcx_test;

TEST_CASE("uniform matroids") {
    CHECK(uniform(2, 3) == Matroid::from_circuits(GroundSet({1, 2, 3}), {{1, 2, 3}}));
    CHECK(uniform(4, 4).circuits().empty());
    CHECK(uniform(0, 2).loops() == full_mask(2));
    CHECK(error_code_of([] { uniform(3, 2); }) == ErrorCode::BadParameters);
    CHECK(error_code_of([] { uniform(-1, 2); }) == ErrorCode::BadParameters);
    CHECK(uniform(2, 4).circuits().size() == 4); // all 3-subsets of a 4-set
}

TEST_CASE("graphic matroids") {
    Matroid k23 = graphic(k23_graph());
    CHECK(k23.rank() == 4);
    auto circuits = k23.circuit_labels();
    std::sort(circuits.begin(), circuits.end());
    CHECK(circuits ==
          std::vector<std::vector<int>>{{1, 2, 3, 6}, {1, 2, 4, 5}, {3, 4, 5, 6}});

    CHECK(graphic(triangle()) == Matroid::from_circuits(GroundSet({1, 2, 3}), {{1, 2, 3}}));

    Graph path;
    path.vertex_count = 4;
    path.add_edge(0, 1, 1);
    path.add_edge(1, 2, 2);
    path.add_edge(2, 3, 3);
    CHECK(graphic(path).circuits().empty()); // tree -> free matroid

    Graph selfloop;
    selfloop.vertex_count = 2;
    selfloop.add_edge(0, 0, 1);
    selfloop.add_edge(0, 1, 2);
    CHECK(graphic(selfloop).loops() == bit(0));

    Graph parallel;
    parallel.vertex_count = 2;
    parallel.add_edge(0, 1, 1);
    parallel.add_edge(0, 1, 2);
    parallel.add_edge(0, 1, 3);
    CHECK(graphic(parallel) == uniform(1, 3));

    Graph big;
    big.vertex_count = 26;
    for (int i = 0; i < 25; ++i) big.add_edge(i, i + 1, i + 1);
    CHECK(error_code_of([&] { graphic(big); }) == ErrorCode::TooLarge);

    Graph bad;
    bad.vertex_count = 1;
    bad.add_edge(0, 3, 1);
    CHECK(error_code_of([&] { graphic(bad); }) == ErrorCode::BadParameters);
}

TEST_CASE("graphic rank matches the graph oracle") {
    for (const Graph& g : family_graphs(5)) {
        Matroid m = graphic(g);
        CHECK(m.rank() == g.vertex_count - 1); // connected graphs
        // Spot-check subset ranks against vertices-minus-components.
        std::vector<int> batch;
        for (const auto& e : g.edges) {
            batch.push_back(e.label);
            CHECK(m.rank(batch) == graph_subset_rank(g, batch));
        }
    }
}

TEST_CASE("linear matroids over the rationals") {
    RationalMatrix eye = RationalMatrix::zero(3, 3);
    for (std::size_t i = 0; i < 3; ++i) eye.at(i, i) = 1;
    CHECK(linear_rational(eye).circuits().empty());

    RationalMatrix u = RationalMatrix::zero(2, 3);
    u.at(0, 0) = 1;
    u.at(1, 1) = 1;
    u.at(0, 2) = 1;
    u.at(1, 2) = 1;
    CHECK(linear_rational(u) == uniform(2, 3));

    // Fractional entries normalize exactly.
    RationalMatrix frac = RationalMatrix::zero(1, 2);
    frac.at(0, 0) = BigRational(1, 3);
    frac.at(0, 1) = BigRational(2, 6);
    CHECK(linear_rational(frac) == Matroid::from_circuits(GroundSet({1, 2}), {{1, 2}}));
}

TEST_CASE("incidence matrix of the bipartite graph matches its cycle matroid") {
    // Oriented vertex-edge incidence with one row dropped, columns in edge
    // label order.
    Graph g = k23_graph();
    RationalMatrix a = RationalMatrix::zero(4, 6);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const auto& e = g.edges[j];
        if (e.u < 4) a.at(static_cast<std::size_t>(e.u), j) += 1;
        if (e.v < 4) a.at(static_cast<std::size_t>(e.v), j) -= 1;
    }
    CHECK(linear_rational(a) == graphic(g));
}

TEST_CASE("prime field agrees with rationals on small sign matrices") {
    std::vector<RationalMatrix> cases;
    {
        RationalMatrix a = RationalMatrix::zero(2, 4);
        std::int64_t data[2][4] = {{1, 0, 1, 1}, {0, 1, 1, -1}};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = data[i][j];
        cases.push_back(a);
    }
    {
        RationalMatrix a = RationalMatrix::zero(3, 6);
        std::int64_t data[3][6] = {{1, 0, 0, 1, 1, 0}, {0, 1, 0, -1, 0, 1}, {0, 0, 1, 0, -1, -1}};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 6; ++j) a.at(i, j) = data[i][j];
        cases.push_back(a);
    }
    for (const auto& a : cases) {
        for (std::int64_t p : {5, 7}) {
            PrimeFieldMatrix b = PrimeFieldMatrix::zero(a.rows, a.cols, p);
            for (std::size_t i = 0; i < a.rows; ++i) {
                for (std::size_t j = 0; j < a.cols; ++j) {
                    std::int64_t num = static_cast<std::int64_t>(numerator(a.at(i, j)));
                    b.at(i, j) = ((num % p) + p) % p;
                }
            }
            CHECK(linear_prime(b) == linear_rational(a));
        }
    }
    CHECK(error_code_of([] { PrimeFieldMatrix m = PrimeFieldMatrix::zero(1, 1, 6); linear_prime(m); }) ==
          ErrorCode::BadParameters);
}

TEST_CASE("characteristic matters: GF(2) can add dependencies") {
    // Columns (1,1) and (1,-1): independent over Q, parallel mod 2.
    RationalMatrix a = RationalMatrix::zero(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 1) = -1;
    CHECK(linear_rational(a).circuits().empty());

    PrimeFieldMatrix b = PrimeFieldMatrix::zero(2, 2, 2);
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    b.at(0, 1) = 1;
    b.at(1, 1) = 1;
    CHECK(linear_prime(b) == Matroid::from_circuits(GroundSet({1, 2}), {{1, 2}}));
}

TEST_CASE("standard graph families") {
    Graph kb = complete_bipartite(2, 3);
    CHECK(kb.edges.size() == 6);
    CHECK(kb.vertex_count == 5);
    CHECK(graphic(complete(4)).rank() == 3);
    CHECK(graphic(wheel(3)).size() == 6);
    CHECK(error_code_of([] { wheel(2); }) == ErrorCode::BadParameters);
    CHECK(error_code_of([] { complete_bipartite(0, 3); }) == ErrorCode::BadParameters);
}

TEST_CASE("family enumeration is deterministic and isomorphism-free") {
    std::vector<Graph> first = family_graphs(4);
    std::vector<Graph> second = family_graphs(4);
    REQUIRE(first.size() == second.size());
    std::set<std::vector<std::pair<int, int>>> encodings;
    bool has_triangle = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
        auto enc_a = canonical_graph_encoding(first[i]);
        auto enc_b = canonical_graph_encoding(second[i]);
        CHECK(enc_a == enc_b);
        CHECK(encodings.insert(enc_a).second); // no isomorphic duplicates
        if (enc_a == canonical_graph_encoding(triangle())) has_triangle = true;
        // Every member builds a valid matroid through the circuit validator.
        CHECK_NOTHROW(graphic(first[i]));
    }
    CHECK(has_triangle);

    // Counts by edge number stay stable across runs and start 1, 2, 5.
    std::map<std::size_t, int> by_edges;
    for (const Graph& g : first) ++by_edges[g.edges.size()];
    CHECK(by_edges[1] == 1);
    CHECK(by_edges[2] == 2);
    CHECK(by_edges[3] == 5);
}
