#include <doctest.h>

#include <algorithm>

#include "bcx/flawless.hpp"
#include "test_support.hpp"

using namespace bcx;
using namespace bcx_test;

namespace {

using Seq = std::vector<std::int64_t>;

// All sequences of the given length with entries in [0, max_entry].
template <typename Fn>
void for_each_sequence(int length, std::int64_t max_entry, Fn&& fn) {
    Seq seq(static_cast<std::size_t>(length), 0);
    while (true) {
        fn(seq);
        int pos = length - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == max_entry) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

} // namespace

TEST_CASE("complementary h-vectors") {
    ComplementaryHVector hbar = complementary_h(k23_matroid());
    CHECK(hbar.entries == Seq{0, 1});
    CHECK(hbar.s == 3);

    // Symmetric trimmed h-vectors give all-zero entries.
    CHECK(complementary_h(uniform(3, 4)).entries == Seq{0, 0}); // h = (1,1,1)
    CHECK(complementary_h(uniform(1, 2)).entries == Seq{0});    // h = (1)

    Matroid loopy = uniform(0, 2);
    ComplementaryHVector degenerate = complementary_h(loopy);
    CHECK(degenerate.entries == Seq{0});
    CHECK(degenerate.from_loopy);
}

TEST_CASE("shape predicates") {
    CHECK(is_unimodal({1, 2, 3, 1}));
    CHECK(is_flawless({1, 2, 3, 1}));
    CHECK(is_strongly_flawless({1, 2, 3, 1}));
    CHECK_FALSE(is_unimodal({1, 0, 2}));
    CHECK(unimodal_report({1, 0, 2}).violating_index == 2);
    CHECK_FALSE(is_flawless({2, 1, 1}));
    CHECK(is_symmetric({1, 2, 2, 1}));
    CHECK_FALSE(is_symmetric({1, 2, 1, 2}));
    CHECK(is_log_concave({1, 2, 3, 1}));
    CHECK_FALSE(is_log_concave({1, 1, 2}));
    CHECK(log_concave_report({1, 1, 2}).violating_index == 1);
    CHECK(error_code_of([] { is_unimodal({}); }) == ErrorCode::EmptySequence);

    // (1,2,3,1): rescaled by C(i+1, i) gives (1, 1, 1, 1/4), log-concave.
    CHECK(is_strongly_log_concave({1, 2, 3, 1}));
    CHECK(is_strongly_log_concave({1, 4, 6, 4, 1}));
    // (1,2,2,2,1), the 6-cycle-plus-chord h-vector, rescales to
    // (1, 1, 2/3, 1/2, 1/5) where (2/3)^2 = 4/9 < 1/2: the rescaled
    // variant is strictly stronger than plain log-concavity.
    CHECK(is_log_concave({1, 2, 2, 2, 1}));
    CHECK_FALSE(is_strongly_log_concave({1, 2, 2, 2, 1}));
    CHECK(error_code_of([] { is_strongly_log_concave({2, 1}); }) == ErrorCode::BadParameters);
}

TEST_CASE("strongly flawless matches the definitional double loop") {
    for_each_sequence(5, 3, [](const Seq& seq) {
        CHECK(is_strongly_flawless(seq) == strongly_flawless_by_definition(seq));
    });
    for_each_sequence(2, 4, [](const Seq& seq) {
        CHECK(is_strongly_flawless(seq) == strongly_flawless_by_definition(seq));
    });
}

TEST_CASE("unimodal and flawless combine into strongly flawless") {
    for (int length = 1; length <= 6; ++length) {
        for_each_sequence(length, 4, [](const Seq& seq) {
            CHECK((is_unimodal(seq) && is_flawless(seq)) == (is_unimodal(seq) && is_strongly_flawless(seq)));
        });
    }
}

TEST_CASE("positive log-concave sequences are unimodal") {
    for (int length = 1; length <= 5; ++length) {
        for_each_sequence(length, 4, [](const Seq& seq) {
            bool positive = std::all_of(seq.begin(), seq.end(), [](std::int64_t v) { return v > 0; });
            if (positive && is_log_concave(seq)) CHECK(is_unimodal(seq));
        });
    }
}

TEST_CASE("products of strongly flawless polynomials") {
    IntPolynomial phi({0, 1, 1}); // t^2 + t
    CHECK(product_strongly_flawless_check(phi, phi));
    CHECK((phi * phi).coefficient_sequence() == Seq{1, 2, 1});

    CHECK(error_code_of([] {
              product_strongly_flawless_check(IntPolynomial({-1, 1}), IntPolynomial({1}));
          }) == ErrorCode::NegativeCoefficients);

    PredicateReport grid = strongly_flawless_product_grid(4, 3);
    CHECK(grid.ok);

    // Symmetric unimodal times symmetric unimodal stays symmetric unimodal.
    std::vector<Seq> symmetric_unimodal;
    for (int length = 1; length <= 4; ++length) {
        for_each_sequence(length, 3, [&](const Seq& seq) {
            if (!seq.empty() && seq.front() > 0 && seq.back() > 0 && is_symmetric(seq) &&
                is_unimodal(seq)) {
                symmetric_unimodal.push_back(seq);
            }
        });
    }
    for (const Seq& a : symmetric_unimodal) {
        for (const Seq& b : symmetric_unimodal) {
            IntPolynomial pa(Seq(a.rbegin(), a.rend()));
            IntPolynomial pb(Seq(b.rbegin(), b.rend()));
            Seq product = (pa * pb).coefficient_sequence();
            CHECK(is_symmetric(product));
            CHECK(is_unimodal(product));
        }
    }
}

TEST_CASE("series identity checkers on the worked example") {
    Matroid k23 = k23_matroid();
    Mask spokes = k23.ground().mask_of({1, 2});

    CHECK(check_series1(k23, spokes, 1).ok);
    CHECK(check_series1(k23, spokes, 2).ok);
    CHECK(check_series2(k23, spokes, 1).ok);
    CHECK(check_series2(k23, spokes, 2).ok);

    // The displayed computation: hbar_1 = 0 + 0 + (1 - 0) = 1 via the first
    // identity, and 0 + (1 - 0) = 1 via the second.
    ComplementaryHVector hbar = complementary_h(k23);
    CHECK(hbar.at(0) == 0);
    CHECK(hbar.at(1) == 1);
    ComplementaryHVector tilde = complementary_h(k23.contraction(std::vector<int>{1}));
    CHECK(tilde.at(0) == 0);
    CHECK(tilde.at(1) == 0);
    Matroid over_s = k23.contraction(std::vector<int>{1, 2});
    IntPolynomial h_over_s = h_polynomial_via_tutte(over_s);
    CHECK(h_over_s.coeffs() == std::vector<std::int64_t>{0, 0, 1}); // t^2
    ComplementaryHVector minus_s = complementary_h(k23.deletion(std::vector<int>{1, 2}));
    CHECK(minus_s.at(0) == 0);

    CHECK(error_code_of([&] { check_series1(k23, spokes, 3); }) == ErrorCode::PreconditionViolation);
    CHECK(error_code_of([&] {
              check_series1(k23, k23.ground().mask_of({1, 3}), 1);
          }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("series identities across small graphic corpus") {
    for (const Graph& g : family_graphs(6)) {
        Matroid m = graphic(g);
        if (!m.is_connected() || m.size() < 2) continue;
        for (Mask cls : m.series_classes().classes()) {
            for (int e : m.ground().labels_of(cls)) {
                CHECK(check_series2(m, cls, e).ok);
            }
        }
        for (Mask cls : m.removable_series_classes()) {
            if (popcount(cls) < 2) continue;
            for (int e : m.ground().labels_of(cls)) {
                CHECK(check_series1(m, cls, e).ok);
            }
        }
    }
}

TEST_CASE("series identity on a whole-circuit class") {
    // An (r+1)-circuit: the class is the ground set and the contraction
    // collapses; the second identity is vacuously exact.
    for (int r = 1; r <= 4; ++r) {
        Matroid c = uniform(r, r + 1);
        CHECK(check_series2(c, full_mask(static_cast<std::size_t>(r) + 1), 1).ok);
    }
}

TEST_CASE("deletion-contraction expansion of the complementary vector") {
    Matroid k4 = graphic(complete(4));
    int instances = 0;
    for (std::size_t e_idx = 0; e_idx < k4.size(); ++e_idx) {
        Matroid del = k4.deletion(Mask(bit(e_idx)));
        Matroid con = k4.contraction(Mask(bit(e_idx)));
        if (!del.is_connected() || !con.is_connected() || !con.is_loopless()) continue;
        ++instances;
        CHECK(check_deletion_contraction_expansion(k4, k4.ground().label_at(e_idx)).ok);
    }
    CHECK(instances > 0);
    CHECK(run_lemma_check("mc-expansion", graphic(theta322())).ok);
}

TEST_CASE("g-vectors and the Macaulay bound") {
    CHECK(g_vector(k23_matroid()).entries == Seq{1, 1});
    CHECK(is_O_sequence({1, 1}));
    CHECK(is_O_sequence({1, 3, 6, 10}));
    CHECK_FALSE(is_O_sequence({1, 2, 5}));
    CHECK(o_sequence_report({1, 2, 5}).violating_index == 2);
    CHECK(is_O_sequence({1, 4, 10, 20}));
    CHECK_FALSE(is_O_sequence({1, 2, -1}));
    CHECK(error_code_of([] { is_O_sequence({2, 1}); }) == ErrorCode::NotStartingAtOne);

    // Prefixes of an O-sequence are O-sequences.
    Seq seq = {1, 3, 6, 10, 15, 21};
    for (std::size_t len = 1; len <= seq.size(); ++len) {
        CHECK(is_O_sequence(Seq(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(len))));
    }
}

TEST_CASE("lemma runner dispatch") {
    Matroid k23 = k23_matroid();
    for (const std::string& name : known_lemma_names()) {
        LemmaOutcome outcome = run_lemma_check(name, k23);
        CHECK(outcome.ok);
    }
    CHECK(run_lemma_check("series1", k23).instances == 6);
    CHECK(error_code_of([&] { run_lemma_check("nope", k23); }) == ErrorCode::UnknownPredicate);
}

TEST_CASE("predicate evaluation and loops") {
    Matroid k23 = k23_matroid();
    CHECK(evaluate_predicate("strongly-flawless", k23).ok);
    CHECK(evaluate_predicate("unimodal", k23).ok);
    CHECK(evaluate_predicate("log-concave", k23).ok);
    CHECK(evaluate_predicate("o-sequence", k23).ok);

    Matroid loopy = uniform(0, 2);
    PredicateReport vacuous = evaluate_predicate("strongly-flawless", loopy);
    CHECK(vacuous.ok);
    CHECK(vacuous.detail.find("loop") != std::string::npos);

    CHECK(error_code_of([&] { evaluate_predicate("nope", k23); }) == ErrorCode::UnknownPredicate);
}

TEST_CASE("sweeps are deterministic and parallel-safe") {
    std::vector<std::pair<std::string, Matroid>> family;
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            family.push_back({"uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
                              uniform(r, n)});
        }
    }
    std::vector<std::string> predicates = {"strongly-flawless", "unimodal", "o-sequence"};
    SweepReport serial = sweep(family, predicates, 1);
    SweepReport parallel = sweep(family, predicates, 4);
    REQUIRE(serial.items.size() == parallel.items.size());
    for (std::size_t i = 0; i < serial.items.size(); ++i) {
        CHECK(serial.items[i].id == parallel.items[i].id);
        CHECK(serial.items[i].h_trimmed == parallel.items[i].h_trimmed);
        for (const auto& [name, report] : serial.items[i].predicates) {
            CHECK(report.ok == parallel.items[i].predicates.at(name).ok);
        }
    }
    for (const auto& [name, count] : serial.violation_counts) CHECK(count == 0);
    CHECK_FALSE(serial.first_counterexample.has_value());

    CHECK(error_code_of([&] { sweep(family, {"nope"}, 1); }) == ErrorCode::UnknownPredicate);
}
