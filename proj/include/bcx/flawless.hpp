// Complementary h-vectors, h-vector shape predicates, series-class
// identity checkers, g-vectors with the O-sequence test, and sweeps.
#ifndef BCX_FLAWLESS_HPP
#define BCX_FLAWLESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcx/invariants.hpp"
#include "bcx/matroid.hpp"
#include "bcx/polynomial.hpp"

namespace bcx {

// Entries hbar_i = h_{s-i} - h_i for 0 <= i <= floor(s/2), taken on the
// trimmed h-vector; (0) by convention when the matroid has a loop.
struct ComplementaryHVector {
    std::vector<std::int64_t> entries;
    int s = 0;
    bool from_loopy = false;

    // hbar_i with the out-of-range convention hbar_i = 0.
    std::int64_t at(int i) const {
        if (i < 0 || i >= static_cast<int>(entries.size()) || from_loopy) return 0;
        return entries[static_cast<std::size_t>(i)];
    }
    bool nonnegative() const {
        for (std::int64_t v : entries) {
            if (v < 0) return false;
        }
        return true;
    }
};

// (1, h_1-h_0, ..., h_{floor(s/2)} - h_{floor(s/2)-1}).
struct GVector {
    std::vector<std::int64_t> entries;
};

struct PredicateReport {
    bool ok = true;
    std::optional<int> violating_index;
    // Empty on success; otherwise a failure kind such as
    // "identity-mismatch" or "branch-disagreement", plus detail.
    std::string kind;
    std::string detail;

    static PredicateReport pass() { return {}; }
    static PredicateReport fail(int index, std::string kind, std::string detail = "") {
        PredicateReport r;
        r.ok = false;
        r.violating_index = index;
        r.kind = std::move(kind);
        r.detail = std::move(detail);
        return r;
    }
};

ComplementaryHVector complementary_h(const Matroid& m);
GVector g_vector(const Matroid& m);

// Sequence shape predicates. All take nonempty integer sequences and
// report the first violating index on failure.
PredicateReport unimodal_report(const std::vector<std::int64_t>& a);
PredicateReport flawless_report(const std::vector<std::int64_t>& a);
PredicateReport strongly_flawless_report(const std::vector<std::int64_t>& a);
PredicateReport symmetric_report(const std::vector<std::int64_t>& a);
PredicateReport log_concave_report(const std::vector<std::int64_t>& a);
// Rescaled log-concavity: h'_i = h_i / C(h_1+i-1, i) in exact rational
// arithmetic; needs h_0 = 1 and nonnegative entries.
PredicateReport strongly_log_concave_report(const std::vector<std::int64_t>& a);

bool is_unimodal(const std::vector<std::int64_t>& a);
bool is_flawless(const std::vector<std::int64_t>& a);
bool is_strongly_flawless(const std::vector<std::int64_t>& a);
bool is_symmetric(const std::vector<std::int64_t>& a);
bool is_log_concave(const std::vector<std::int64_t>& a);
bool is_strongly_log_concave(const std::vector<std::int64_t>& a);

// Macaulay growth bound: a_{i+1} <= a_i^<i> with pseudo-powers computed
// from the i-binomial representation. Throws NotStartingAtOne unless
// a_0 = 1; negative entries simply fail.
PredicateReport o_sequence_report(const std::vector<std::int64_t>& a);
bool is_O_sequence(const std::vector<std::int64_t>& a);

// Coefficient-sequence check for products: multiplies, strips the common
// power-of-t factor, and tests strong flawlessness of the result.
bool product_strongly_flawless_check(const IntPolynomial& phi, const IntPolynomial& psi);

// Exhaustive product check over all pairs of strongly flawless coefficient
// sequences with length <= max_len and entries <= max_entry.
PredicateReport strongly_flawless_product_grid(int max_len, int max_entry);

// Identity checker: for a non-trivial removable series class S and e in S,
//   hbar_i(M) = hbar_i(M/e) + hbar_{i-m+1}(M-S)
//             + (h_{i-m+1}(M/S) - h_{i-m}(M/S))      for 0 <= i <= s/2.
PredicateReport check_series1(const Matroid& m, Mask series_class, int e);

// Identity checker for the three-branch decomposition of hbar_i(M) through
// the contraction M/(S-e) and M/S; overlapping branch domains are
// evaluated under every applicable branch and must agree.
PredicateReport check_series2(const Matroid& m, Mask series_class, int e);

// Expansion hbar_i(M) = hbar_i(M-e) + hbar_i(M/e) + (h_i(M/e) - h_{i-1}(M/e))
// for 0 <= i <= floor((s-1)/2), valid when M-e and M/e are connected and
// M/e is loopless.
PredicateReport check_deletion_contraction_expansion(const Matroid& m, int e);

struct LemmaOutcome {
    bool ok = true;
    int instances = 0;
    std::string first_failure;
};

// Runs one named identity suite over a single matroid, enumerating the
// qualifying instances. Known names: series1, series2, two-sum,
// deletion-contraction, h-shape, series-props, product-rules,
// mc-expansion. Throws UnknownPredicate for other names.
LemmaOutcome run_lemma_check(const std::string& name, const Matroid& m);
const std::vector<std::string>& known_lemma_names();

struct SweepItem {
    std::string id;
    std::size_t ground_size = 0;
    int rank = 0;
    bool loopy = false;
    std::vector<std::int64_t> h_trimmed;
    std::vector<std::int64_t> hbar;
    std::map<std::string, PredicateReport> predicates;
    // Wall-clock cost of this item; kept out of the serialized report so
    // that reports stay byte-identical across runs.
    double elapsed_us = 0.0;
};

struct SweepReport {
    std::vector<SweepItem> items;
    std::map<std::string, int> violation_counts;
    std::optional<std::string> first_counterexample;
};

// Predicate names accepted by sweeps: flawless, strongly-flawless,
// unimodal, log-concave, strongly-log-concave, symmetric, o-sequence
// (the last applies the Macaulay test to the g-vector).
const std::vector<std::string>& known_predicate_names();
PredicateReport evaluate_predicate(const std::string& name, const Matroid& m);

SweepReport sweep(const std::vector<std::pair<std::string, Matroid>>& family,
                  const std::vector<std::string>& predicates, int jobs = 1);

} // namespace bcx

#endif
