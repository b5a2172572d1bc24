#include <doctest.h>

#include <algorithm>

#include "bcx/invariants.hpp"
#include "test_support.hpp"

using namespace bcx;
using namespace bcx_test;

TEST_CASE("broken circuits") {
    Matroid m = u23();
    auto bc = broken_circuits(m, LinearOrder::default_for(m.ground()));
    REQUIRE(bc.size() == 1);
    CHECK(m.ground().labels_of(bc[0]) == std::vector<int>{2, 3});

    // Under the order 3 < 1 < 2 the least element of {1,2,3} is 3.
    auto bc2 = broken_circuits(m, LinearOrder::from_labels(m.ground(), {3, 1, 2}));
    REQUIRE(bc2.size() == 1);
    CHECK(m.ground().labels_of(bc2[0]) == std::vector<int>{1, 2});

    Matroid k23 = k23_matroid();
    CHECK(broken_circuits(k23, LinearOrder::default_for(k23.ground())).size() == 3);

    Matroid pair = Matroid::from_circuits(GroundSet({1, 2}), {{1, 2}});
    auto bc3 = broken_circuits(pair, LinearOrder::default_for(pair.ground()));
    REQUIRE(bc3.size() == 1);
    CHECK(pair.ground().labels_of(bc3[0]) == std::vector<int>{2});

    Matroid loopy = Matroid::from_circuits(GroundSet({1}), {{1}});
    CHECK(error_code_of([&] { broken_circuits(loopy, LinearOrder::default_for(loopy.ground())); }) ==
          ErrorCode::HasLoops);
}

TEST_CASE("f-vectors") {
    CHECK(bc_f_vector(u23()).counts == std::vector<std::int64_t>{1, 3, 2});
    CHECK(bc_f_vector(k23_matroid()).counts == std::vector<std::int64_t>{1, 6, 15, 17, 7});
    CHECK(bc_f_vector(uniform(4, 4)).counts == std::vector<std::int64_t>{1, 4, 6, 4, 1});

    // DFS counting equals plain enumeration on the corpus.
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless() || m.size() > 7) continue;
        LinearOrder order = LinearOrder::default_for(m.ground());
        auto counts = bc_f_vector(m, order).counts;
        while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
        CHECK(counts == bc_face_counts_by_enumeration(m, order));
    }

    // f_1 counts the elements that are not singleton broken circuits.
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless() || m.size() == 0) continue;
        LinearOrder order = LinearOrder::default_for(m.ground());
        std::int64_t dominated = 0;
        for (Mask b : broken_circuits(m, order)) {
            if (popcount(b) == 1) ++dominated;
        }
        FVector f = bc_f_vector(m, order);
        if (f.rank >= 1) CHECK(f.counts[1] == static_cast<std::int64_t>(m.size()) - dominated);
    }
}

TEST_CASE("f-vector is order independent") {
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless() || m.size() > 6) continue;
        auto reference = bc_f_vector(m).counts;
        std::vector<int> labels = m.ground().labels();
        std::sort(labels.begin(), labels.end());
        do {
            CHECK(bc_f_vector(m, LinearOrder::from_labels(m.ground(), labels)).counts == reference);
        } while (std::next_permutation(labels.begin(), labels.end()));
    }
}

TEST_CASE("characteristic polynomial") {
    CHECK(characteristic_polynomial(u23()).coeffs() == std::vector<std::int64_t>{2, -3, 1});
    CHECK(characteristic_polynomial(k23_matroid()).coeffs() ==
          std::vector<std::int64_t>{7, -17, 15, -6, 1});
    CHECK(characteristic_polynomial(uniform(1, 1)).coeffs() == std::vector<std::int64_t>{-1, 1});

    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless()) continue;
        CHECK(characteristic_polynomial(m) == char_poly_subset_expansion(m));
    }
    // The subset expansion vanishes identically in the presence of a loop.
    CHECK(char_poly_subset_expansion(uniform(0, 2)).is_zero());
}

TEST_CASE("tutte polynomial") {
    BivariatePolynomial t = tutte(u23());
    CHECK(t.coeff(2, 0) == 1);
    CHECK(t.coeff(1, 0) == 1);
    CHECK(t.coeff(0, 1) == 1);
    CHECK(t.terms().size() == 3);

    for (const Matroid& m : small_corpus()) {
        CHECK(tutte(m) == tutte_subset_expansion(m));
        if (m.size() <= 7) CHECK(tutte(m.dual()) == tutte(m).swapped_variables());
    }

    // A 10-element case: the rank-5 wheel.
    Matroid w5 = graphic(wheel(5));
    REQUIRE(w5.size() == 10);
    CHECK(tutte(w5) == tutte_subset_expansion(w5));

    // Specializations: chi(M;t) = (-1)^r T(M;1-t,0) and h(M;t) = T(M;t,0).
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless()) continue;
        IntPolynomial chi = characteristic_polynomial(m);
        IntPolynomial from_tutte =
            tutte(m).at_y_zero().composed_with_one_minus_t() * ((m.rank() % 2 == 0) ? 1 : -1);
        CHECK(chi == from_tutte);
        CHECK(h_polynomial(m) == tutte(m).at_y_zero());
    }
}

TEST_CASE("h-vectors") {
    HVector h = h_vector(k23_matroid());
    CHECK(h.full == std::vector<std::int64_t>{1, 2, 3, 1, 0});
    CHECK(h.trimmed() == std::vector<std::int64_t>{1, 2, 3, 1});
    CHECK(h.s == 3);
    CHECK(h_polynomial(k23_matroid()).coeffs() == std::vector<std::int64_t>{0, 1, 3, 2, 1});

    Matroid k23 = k23_matroid();
    CHECK(h_polynomial(k23.contraction(std::vector<int>{1})).coeffs() ==
          std::vector<std::int64_t>{0, 1, 2, 1});
    CHECK(h_polynomial(k23.deletion(std::vector<int>{1, 2})).coeffs() ==
          std::vector<std::int64_t>{0, 1, 1, 1});
    CHECK(h_polynomial(k23.contraction(std::vector<int>{1, 2})).coeffs() ==
          std::vector<std::int64_t>{0, 0, 1});

    // Circuits have the all-ones trimmed h-vector.
    for (int r = 1; r <= 8; ++r) {
        HVector hc = h_vector(uniform(r, r + 1));
        CHECK(hc.trimmed() == std::vector<std::int64_t>(static_cast<std::size_t>(r), 1));
    }

    // Theta graph: frozen via hand deletion-contraction through the
    // bipartite minor.
    CHECK(h_vector(graphic(theta322())).trimmed() == std::vector<std::int64_t>{1, 2, 3, 3, 1});

    // K4: chi = (t-1)(t-2)(t-3), so h(t) = t(t+1)(t+2) and h = (1,3,2).
    CHECK(h_vector(graphic(complete(4))).trimmed() == std::vector<std::int64_t>{1, 3, 2});

    CHECK(error_code_of([] { h_vector(uniform(0, 1)); }) == ErrorCode::HasLoops);
}

TEST_CASE("h-vector shape on the corpus") {
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless()) continue;
        HVector h = h_vector(m);
        for (int i = 0; i <= h.rank; ++i) CHECK(h.at(i) >= 0);
        CHECK(h.s == h.rank - static_cast<int>(m.components().size()));
    }
}

TEST_CASE("h deletion-contraction") {
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless() || m.size() < 2) continue;
        const Mask coloops = m.coloops();
        for (std::size_t e = 0; e < m.size(); ++e) {
            IntPolynomial lhs = h_polynomial_via_tutte(m);
            if (coloops & bit(e)) {
                CHECK(lhs == IntPolynomial::monomial(1, 1) *
                                 h_polynomial_via_tutte(m.deletion(Mask(bit(e)))));
            } else {
                CHECK(lhs == h_polynomial_via_tutte(m.deletion(Mask(bit(e)))) +
                                 h_polynomial_via_tutte(m.contraction(Mask(bit(e)))));
            }
        }
    }
}

TEST_CASE("h product rules") {
    Matroid a = u23();
    Matroid b = Matroid::from_circuits(GroundSet({4, 5, 6, 7}), {{4, 5, 6, 7}});
    CHECK(h_polynomial(direct_sum(a, b)) == h_polynomial(a) * h_polynomial(b));

    Matroid c1 = Matroid::from_circuits(GroundSet({1, 2, 9}), {{1, 2, 9}});
    Matroid c2 = Matroid::from_circuits(GroundSet({3, 4, 9}), {{3, 4, 9}});
    Matroid p = parallel_connection(c1, c2, 9);
    CHECK(h_polynomial(p) * IntPolynomial::monomial(1, 1) == h_polynomial(c1) * h_polynomial(c2));
}

TEST_CASE("series class h coincidences") {
    // h-vectors of M-e, M-S and M_j-e' coincide for every series class.
    for (const Matroid& m : small_corpus()) {
        if (!m.is_loopless() || !m.is_connected() || m.size() < 2) continue;
        for (Mask cls : m.series_classes().classes()) {
            auto labels = m.ground().labels_of(cls);
            auto reference = h_vector(m.deletion(cls)).trimmed();
            for (int e : labels) {
                CHECK(h_vector(m.deletion(std::vector<int>{e})).trimmed() == reference);
            }
            Matroid contracted = m;
            for (std::size_t j = 1; j < labels.size(); ++j) {
                contracted = contracted.contraction(std::vector<int>{labels[j - 1]});
                for (std::size_t k = j; k < labels.size(); ++k) {
                    CHECK(h_vector(contracted.deletion(std::vector<int>{labels[k]})).trimmed() ==
                          reference);
                }
            }
        }
    }
}

TEST_CASE("f and h transforms") {
    FVector f;
    f.rank = 2;
    f.counts = {1, 3, 2};
    HVector h = f_to_h(f);
    CHECK(h.full == std::vector<std::int64_t>{1, 1, 0});
    CHECK(h.s == 1);
    CHECK(h_to_f(h, 2).counts == f.counts);

    FVector fk;
    fk.rank = 4;
    fk.counts = {1, 6, 15, 17, 7};
    CHECK(f_to_h(fk).full == std::vector<std::int64_t>{1, 2, 3, 1, 0});

    // Inverse pair on assorted nonnegative vectors.
    for (std::vector<std::int64_t> counts :
         {std::vector<std::int64_t>{1, 5, 9, 4}, {1, 0, 0}, {1, 7, 2, 2, 1}}) {
        FVector probe;
        probe.rank = static_cast<int>(counts.size()) - 1;
        probe.counts = counts;
        CHECK(h_to_f(f_to_h(probe), probe.rank).counts == counts);
    }

    FVector bad;
    bad.rank = 3;
    bad.counts = {1, 2};
    CHECK(error_code_of([&] { f_to_h(bad); }) == ErrorCode::LengthMismatch);
}
