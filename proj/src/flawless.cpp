#include "bcx/flawless.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <sstream>
#include <thread>

namespace bcx {

using BigInt = boost::multiprecision::cpp_int;

namespace {

void require_nonempty(const std::vector<std::int64_t>& a) {
    if (a.empty()) throw Error(ErrorCode::EmptySequence, "predicate needs a nonempty sequence");
}

BigInt big_binomial(BigInt n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

} // namespace

ComplementaryHVector complementary_h(const Matroid& m) {
    ComplementaryHVector out;
    if (!m.is_loopless()) {
        out.entries = {0};
        out.s = 0;
        out.from_loopy = true;
        return out;
    }
    HVector h = h_vector(m);
    out.s = h.s;
    for (int i = 0; i <= h.s / 2; ++i) out.entries.push_back(h.at(h.s - i) - h.at(i));
    return out;
}

GVector g_vector(const Matroid& m) {
    if (!m.is_loopless()) throw Error(ErrorCode::HasLoops, "g-vector needs a loopless matroid");
    HVector h = h_vector(m);
    GVector g;
    g.entries.push_back(1);
    for (int i = 1; i <= h.s / 2; ++i) g.entries.push_back(h.at(i) - h.at(i - 1));
    return g;
}

PredicateReport unimodal_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    for (; i + 1 < a.size(); ++i) {
        if (a[i] < a[i + 1]) {
            return PredicateReport::fail(static_cast<int>(i + 1), "rises-after-peak");
        }
    }
    return PredicateReport::pass();
}

PredicateReport flawless_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    const int s = static_cast<int>(a.size()) - 1;
    for (int i = 0; i <= s / 2; ++i) {
        if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(s - i)]) {
            return PredicateReport::fail(i, "mirror-exceeded");
        }
    }
    return PredicateReport::pass();
}

PredicateReport strongly_flawless_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    const int s = static_cast<int>(a.size()) - 1;
    // a_i <= a_j for i <= j <= s-i is equivalent to a monotone first half
    // together with the mirror inequalities.
    for (int i = 0; i + 1 <= s / 2; ++i) {
        if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i + 1)]) {
            return PredicateReport::fail(i + 1, "prefix-not-monotone");
        }
    }
    return flawless_report(a);
}

PredicateReport symmetric_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    const int s = static_cast<int>(a.size()) - 1;
    for (int i = 0; i <= s / 2; ++i) {
        if (a[static_cast<std::size_t>(i)] != a[static_cast<std::size_t>(s - i)]) {
            return PredicateReport::fail(i, "asymmetric");
        }
    }
    return PredicateReport::pass();
}

PredicateReport log_concave_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    for (std::size_t j = 1; j + 1 < a.size(); ++j) {
        if (BigInt(a[j]) * a[j] < BigInt(a[j - 1]) * a[j + 1]) {
            return PredicateReport::fail(static_cast<int>(j), "log-concavity-violated");
        }
    }
    return PredicateReport::pass();
}

PredicateReport strongly_log_concave_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    if (a[0] != 1) throw Error(ErrorCode::BadParameters, "rescaled log-concavity needs h_0 = 1");
    for (std::int64_t v : a) {
        if (v < 0) throw Error(ErrorCode::BadParameters, "rescaled log-concavity needs nonnegative entries");
    }
    if (a.size() == 1) return PredicateReport::pass();
    const std::int64_t h1 = a[1];
    if (h1 == 0) {
        // The rescaling divides by C(h_1+i-1, i) = 0 for i >= 1; only the
        // all-zero tail qualifies.
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i] != 0) return PredicateReport::fail(static_cast<int>(i), "rescale-undefined");
        }
        return PredicateReport::pass();
    }
    std::vector<BigInt> denom(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        denom[i] = big_binomial(h1 + static_cast<std::int64_t>(i) - 1, static_cast<std::int64_t>(i));
    }
    // h'_j^2 >= h'_{j-1} h'_{j+1} cross-multiplied by the positive denominators.
    for (std::size_t j = 1; j + 1 < a.size(); ++j) {
        BigInt lhs = BigInt(a[j]) * a[j] * denom[j - 1] * denom[j + 1];
        BigInt rhs = BigInt(a[j - 1]) * a[j + 1] * denom[j] * denom[j];
        if (lhs < rhs) return PredicateReport::fail(static_cast<int>(j), "log-concavity-violated");
    }
    return PredicateReport::pass();
}

bool is_unimodal(const std::vector<std::int64_t>& a) { return unimodal_report(a).ok; }
bool is_flawless(const std::vector<std::int64_t>& a) { return flawless_report(a).ok; }
bool is_strongly_flawless(const std::vector<std::int64_t>& a) { return strongly_flawless_report(a).ok; }
bool is_symmetric(const std::vector<std::int64_t>& a) { return symmetric_report(a).ok; }
bool is_log_concave(const std::vector<std::int64_t>& a) { return log_concave_report(a).ok; }
bool is_strongly_log_concave(const std::vector<std::int64_t>& a) {
    return strongly_log_concave_report(a).ok;
}

namespace {

// a^<i>: write a as C(k_i,i) + C(k_{i-1},i-1) + ... + C(k_j,j) with
// k_i > k_{i-1} > ... > k_j >= j >= 1, then bump every binomial.
BigInt macaulay_pseudo_power(BigInt a, int i) {
    BigInt result = 0;
    std::int64_t d = i;
    while (a > 0 && d >= 1) {
        std::int64_t k = d;
        while (big_binomial(k + 1, d) <= a) ++k;
        a -= big_binomial(k, d);
        result += big_binomial(k + 1, d + 1);
        --d;
    }
    return result;
}

} // namespace

PredicateReport o_sequence_report(const std::vector<std::int64_t>& a) {
    require_nonempty(a);
    if (a[0] != 1) throw Error(ErrorCode::NotStartingAtOne, "O-sequences start with 1");
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] < 0) return PredicateReport::fail(static_cast<int>(i), "negative-entry");
    }
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        BigInt bound = macaulay_pseudo_power(BigInt(a[i]), static_cast<int>(i));
        if (BigInt(a[i + 1]) > bound) {
            return PredicateReport::fail(static_cast<int>(i + 1), "macaulay-bound-exceeded");
        }
    }
    return PredicateReport::pass();
}

bool is_O_sequence(const std::vector<std::int64_t>& a) { return o_sequence_report(a).ok; }

bool product_strongly_flawless_check(const IntPolynomial& phi, const IntPolynomial& psi) {
    for (const IntPolynomial* p : {&phi, &psi}) {
        if (p->is_zero()) throw Error(ErrorCode::EmptySequence, "zero polynomial in product check");
        for (std::int64_t c : p->coeffs()) {
            if (c < 0) throw Error(ErrorCode::NegativeCoefficients, "product check needs nonnegative coefficients");
        }
    }
    return is_strongly_flawless((phi * psi).coefficient_sequence());
}

PredicateReport strongly_flawless_product_grid(int max_len, int max_entry) {
    // All trimmed coefficient sequences (nonzero first and last entry).
    std::vector<std::vector<std::int64_t>> pool;
    std::vector<std::int64_t> current;
    auto emit = [&](auto&& self, int remaining) -> void {
        if (!current.empty() && current.back() != 0 && is_strongly_flawless(current)) {
            pool.push_back(current);
        }
        if (remaining == 0) return;
        for (std::int64_t v = current.empty() ? 1 : 0; v <= max_entry; ++v) {
            current.push_back(v);
            self(self, remaining - 1);
            current.pop_back();
        }
    };
    emit(emit, max_len);

    auto to_poly = [](const std::vector<std::int64_t>& seq) {
        std::vector<std::int64_t> coeffs(seq.rbegin(), seq.rend());
        return IntPolynomial(std::move(coeffs));
    };

    PredicateReport report;
    int pairs = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            ++pairs;
            if (!product_strongly_flawless_check(to_poly(pool[i]), to_poly(pool[j]))) {
                std::ostringstream os;
                os << "pair #" << i << " x #" << j;
                return PredicateReport::fail(pairs, "product-not-strongly-flawless", os.str());
            }
        }
    }
    report.detail = std::to_string(pairs) + " products checked over " +
                    std::to_string(pool.size()) + " sequences";
    return report;
}

namespace {

struct HView {
    IntPolynomial poly; // T(.;t,0)
    int rank = 0;

    // h_i with the zero convention outside [0, rank]; identically zero for
    // loopy matroids.
    std::int64_t at(int i) const {
        if (i < 0 || i > rank) return 0;
        return poly.coeff(static_cast<std::size_t>(rank - i));
    }

    // Largest index with h_i != 0, or -1 for the zero polynomial.
    int top_index() const {
        for (int i = rank; i >= 0; --i) {
            if (at(i) != 0) return i;
        }
        return -1;
    }

    // hbar_i by the defining formula h_{s-i} - h_i, extended beyond
    // floor(s/2). The identity proofs expand deletion-contraction into
    // exactly these differences, so the checkers read minors through this
    // view; it agrees with the trimmed complementary vector on its range
    // and vanishes for loopy matroids and for i < 0.
    std::int64_t hbar(int i) const {
        if (i < 0) return 0;
        int s = top_index();
        if (s < 0) return 0;
        return at(s - i) - at(i);
    }
};

HView h_view(const Matroid& m) {
    return {h_polynomial_via_tutte(m), m.rank()};
}

void require_clause(bool ok, const char* clause) {
    if (!ok) throw Error(ErrorCode::PreconditionViolation, clause);
}

Mask validated_series_class(const Matroid& m, Mask series_class) {
    for (Mask cls : m.series_classes().classes()) {
        if (cls == series_class) return cls;
    }
    throw Error(ErrorCode::PreconditionViolation, "the given set is not a series class");
}

} // namespace

PredicateReport check_series1(const Matroid& m, Mask series_class, int e) {
    require_clause(m.is_loopless(), "matroid has loops");
    require_clause(m.size() >= 2 && m.is_connected(), "matroid is not connected");
    validated_series_class(m, series_class);
    const int cls_size = popcount(series_class);
    require_clause(cls_size >= 2, "series class is trivial");
    std::size_t e_idx = m.ground().index_of(e);
    require_clause((series_class & bit(e_idx)) != 0, "element not in the series class");
    {
        Matroid rest = m.deletion(series_class);
        require_clause(rest.size() == 0 || rest.is_connected(), "series class is not removable");
    }

    const ComplementaryHVector hbar_m = complementary_h(m);
    const HView contract_e = h_view(m.contraction(Mask(bit(e_idx))));
    const HView minus_s = h_view(m.deletion(series_class));
    const HView h_over_s = h_view(m.contraction(series_class));
    const int s = hbar_m.s;
    const int msize = cls_size;

    for (int i = 0; i <= s / 2; ++i) {
        std::int64_t rhs = contract_e.hbar(i) + minus_s.hbar(i - msize + 1) +
                           (h_over_s.at(i - msize + 1) - h_over_s.at(i - msize));
        if (hbar_m.at(i) != rhs) {
            std::ostringstream os;
            os << "i=" << i << ": " << hbar_m.at(i) << " != " << rhs;
            return PredicateReport::fail(i, "identity-mismatch", os.str());
        }
    }
    return PredicateReport::pass();
}

PredicateReport check_series2(const Matroid& m, Mask series_class, int e) {
    require_clause(m.is_loopless(), "matroid has loops");
    require_clause(m.size() >= 2 && m.is_connected(), "matroid is not connected");
    validated_series_class(m, series_class);
    std::size_t e_idx = m.ground().index_of(e);
    require_clause((series_class & bit(e_idx)) != 0, "element not in the series class");

    const int msize = popcount(series_class);
    const ComplementaryHVector hbar_m = complementary_h(m);
    const HView tilde = h_view(m.contraction(series_class & ~bit(e_idx)));
    const HView h_over_s = h_view(m.contraction(series_class));
    const int s = hbar_m.s;

    for (int i = 0; i <= s / 2; ++i) {
        std::vector<std::pair<const char*, std::int64_t>> branch_values;

        if (i <= std::min(msize - 1, s - msize + 1)) {
            std::int64_t acc = 0;
            for (int j = 0; j <= std::min(i, s - msize - i); ++j) acc += tilde.hbar(j);
            for (int j = 1; j <= i; ++j)
                acc += h_over_s.at(i - j) - h_over_s.at(s - msize + 1 - j);
            branch_values.push_back({"low", acc});
        }
        if (msize - 1 <= s - msize + 1 && msize - 1 <= i) {
            std::int64_t acc = 0;
            for (int j = i - msize + 1; j <= std::min(i, s - msize - i); ++j) acc += tilde.hbar(j);
            for (int j = 1; j <= msize - 1; ++j) acc += h_over_s.at(i - j) - h_over_s.at(s - i - j);
            branch_values.push_back({"mid", acc});
        }
        if (s - msize + 1 <= msize - 1 && s - msize + 1 <= i) {
            branch_values.push_back({"zero", 0});
        }

        for (std::size_t b = 1; b < branch_values.size(); ++b) {
            if (branch_values[b].second != branch_values[0].second) {
                std::ostringstream os;
                os << "i=" << i << ": branch " << branch_values[0].first << "="
                   << branch_values[0].second << " vs branch " << branch_values[b].first << "="
                   << branch_values[b].second;
                return PredicateReport::fail(i, "branch-disagreement", os.str());
            }
        }
        if (branch_values.empty()) {
            return PredicateReport::fail(i, "no-branch-applies");
        }
        if (branch_values[0].second != hbar_m.at(i)) {
            std::ostringstream os;
            os << "i=" << i << ": " << hbar_m.at(i) << " != " << branch_values[0].second;
            return PredicateReport::fail(i, "identity-mismatch", os.str());
        }
    }
    return PredicateReport::pass();
}

PredicateReport check_deletion_contraction_expansion(const Matroid& m, int e) {
    require_clause(m.is_loopless(), "matroid has loops");
    require_clause(m.size() >= 2 && m.is_connected(), "matroid is not connected");
    std::size_t e_idx = m.ground().index_of(e);
    Matroid minus_e = m.deletion(Mask(bit(e_idx)));
    Matroid over_e = m.contraction(Mask(bit(e_idx)));
    require_clause(minus_e.is_connected(), "deletion is not connected");
    require_clause(over_e.is_connected(), "contraction is not connected");
    require_clause(over_e.is_loopless(), "contraction has loops");

    const ComplementaryHVector hbar_m = complementary_h(m);
    const HView del = h_view(minus_e);
    const HView h_con = h_view(over_e);
    const int s = hbar_m.s;

    for (int i = 0; i <= s / 2; ++i) {
        std::int64_t rhs = del.hbar(i) + h_con.hbar(i) + (h_con.at(i) - h_con.at(i - 1));
        if (hbar_m.at(i) != rhs) {
            std::ostringstream os;
            os << "i=" << i << ": " << hbar_m.at(i) << " != " << rhs;
            return PredicateReport::fail(i, "identity-mismatch", os.str());
        }
    }
    return PredicateReport::pass();
}

namespace {

LemmaOutcome& record(LemmaOutcome& out, const PredicateReport& report, const std::string& instance) {
    ++out.instances;
    if (out.ok && !report.ok) {
        out.ok = false;
        out.first_failure = instance + ": " + report.kind +
                            (report.detail.empty() ? "" : " (" + report.detail + ")");
    }
    return out;
}

std::string instance_name(const Matroid& m, Mask cls, int e) {
    std::ostringstream os;
    os << "S={";
    auto labels = m.ground().labels_of(cls);
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << "}, e=" << e;
    return os.str();
}

LemmaOutcome lemma_series1(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() < 2 || !m.is_connected()) return out;
    for (Mask cls : m.removable_series_classes()) {
        if (popcount(cls) < 2) continue;
        for (int e : m.ground().labels_of(cls)) {
            record(out, check_series1(m, cls, e), instance_name(m, cls, e));
        }
    }
    return out;
}

LemmaOutcome lemma_series2(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() < 2 || !m.is_connected()) return out;
    for (Mask cls : m.series_classes().classes()) {
        for (int e : m.ground().labels_of(cls)) {
            record(out, check_series2(m, cls, e), instance_name(m, cls, e));
        }
    }
    return out;
}

LemmaOutcome lemma_two_sum(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() == 0) return out;
    for (Mask cls : m.series_classes().classes()) {
        for (int e : m.ground().labels_of(cls)) {
            Matroid rebuilt = series_class_reconstruction(m, cls, e);
            PredicateReport report = rebuilt == m
                                         ? PredicateReport::pass()
                                         : PredicateReport::fail(0, "reconstruction-differs", rebuilt.to_string());
            record(out, report, instance_name(m, cls, e));
        }
    }
    return out;
}

LemmaOutcome lemma_deletion_contraction(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() < 2) return out;
    const IntPolynomial h_m = h_polynomial_via_tutte(m);
    const Mask coloop_mask = m.coloops();
    for (std::size_t e = 0; e < m.size(); ++e) {
        IntPolynomial expect;
        if (coloop_mask & bit(e)) {
            expect = IntPolynomial::monomial(1, 1) * h_polynomial_via_tutte(m.deletion(Mask(bit(e))));
        } else {
            expect = h_polynomial_via_tutte(m.deletion(Mask(bit(e)))) +
                     h_polynomial_via_tutte(m.contraction(Mask(bit(e))));
        }
        PredicateReport report = h_m == expect
                                     ? PredicateReport::pass()
                                     : PredicateReport::fail(static_cast<int>(e), "identity-mismatch");
        record(out, report, "e=" + std::to_string(m.ground().label_at(e)));
    }
    return out;
}

LemmaOutcome lemma_h_shape(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless()) return out;
    HVector h = h_vector(m);
    PredicateReport report = PredicateReport::pass();
    for (int i = 0; i <= h.rank && report.ok; ++i) {
        if (h.at(i) < 0) report = PredicateReport::fail(i, "negative-entry");
    }
    if (report.ok) {
        int c = static_cast<int>(m.components().size());
        if (h.s != h.rank - c) {
            report = PredicateReport::fail(h.s, "top-index-mismatch",
                                           "s=" + std::to_string(h.s) + " r-c=" + std::to_string(h.rank - c));
        }
    }
    record(out, report, "h-vector shape");
    return out;
}

LemmaOutcome lemma_series_props(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() < 2 || !m.is_connected()) return out;
    const int r = m.rank();
    for (Mask cls : m.series_classes().classes()) {
        const int msize = popcount(cls);
        const auto cls_labels = m.ground().labels_of(cls);
        Matroid minus_s = m.deletion(cls);
        PredicateReport report = PredicateReport::pass();

        if (minus_s.rank() != r - msize + 1) {
            report = PredicateReport::fail(0, "rank-drop-mismatch");
        }

        const std::vector<std::int64_t> h_minus_s = h_vector(minus_s).trimmed();

        Matroid contracted = m;
        for (int j = 1; j < msize && report.ok; ++j) {
            contracted = contracted.contraction(std::vector<int>{cls_labels[static_cast<std::size_t>(j - 1)]});
            if (contracted.rank() != r - j) {
                report = PredicateReport::fail(j, "contraction-rank-mismatch");
                break;
            }
            if (!contracted.is_connected()) {
                report = PredicateReport::fail(j, "contraction-disconnected");
                break;
            }
            std::vector<int> tail(cls_labels.begin() + j, cls_labels.end());
            Mask tail_mask = contracted.ground().mask_of(tail);
            if (contracted.is_loopless()) {
                bool is_class = false;
                for (Mask c2 : contracted.series_classes().classes()) {
                    if (c2 == tail_mask) is_class = true;
                }
                if (!is_class) {
                    report = PredicateReport::fail(j, "tail-not-a-series-class");
                    break;
                }
            } else if (contracted.loops() != full_mask(contracted.size()) ||
                       tail_mask != full_mask(contracted.size())) {
                // Contracting inside a series class can only bottom out at a
                // loop when the class was the whole ground circuit.
                report = PredicateReport::fail(j, "unexpected-loops-after-contraction");
                break;
            }
            if (contracted.deletion(tail_mask) != minus_s) {
                report = PredicateReport::fail(j, "deletion-identity-mismatch");
                break;
            }
            for (int ep : tail) {
                Matroid mj_minus = contracted.deletion(std::vector<int>{ep});
                if (h_vector(mj_minus).trimmed() != h_minus_s) {
                    report = PredicateReport::fail(j, "h-vector-mismatch", "M_j - e'");
                    break;
                }
            }
        }
        if (report.ok) {
            for (int e : cls_labels) {
                Matroid minus_e = m.deletion(std::vector<int>{e});
                if (h_vector(minus_e).trimmed() != h_minus_s) {
                    report = PredicateReport::fail(0, "h-vector-mismatch", "M - e");
                    break;
                }
            }
        }
        record(out, report, instance_name(m, cls, cls_labels.front()));
    }
    return out;
}

LemmaOutcome lemma_product_rules(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() == 0) return out;
    const Mask eligible = full_mask(m.size()) & ~m.coloops();
    if (eligible == 0) return out;
    const std::size_t e_idx = static_cast<std::size_t>(lowest_bit(eligible));
    const int e = m.ground().label_at(e_idx);
    const int fresh = m.ground().labels().back() + 1;

    // Partner: a 3-circuit through e on otherwise fresh labels.
    Matroid partner = Matroid::from_circuits(GroundSet({e, fresh, fresh + 1}),
                                             {{e, fresh, fresh + 1}});
    Matroid joined = parallel_connection(m, partner, e);
    const IntPolynomial t1 = IntPolynomial::monomial(1, 1);

    PredicateReport report = PredicateReport::pass();
    if (h_polynomial_via_tutte(joined) * t1 !=
        h_polynomial_via_tutte(m) * h_polynomial_via_tutte(partner)) {
        report = PredicateReport::fail(0, "parallel-product-mismatch");
    }
    if (report.ok) {
        Matroid split = direct_sum(m.contraction(std::vector<int>{e}),
                                   partner.contraction(std::vector<int>{e}));
        if (joined.contraction(std::vector<int>{e}) != split) {
            report = PredicateReport::fail(0, "parallel-contraction-mismatch");
        }
    }
    if (report.ok) {
        // Direct sum with a fully fresh 3-circuit.
        Matroid fresh_circuit = Matroid::from_circuits(GroundSet({fresh, fresh + 1, fresh + 2}),
                                                       {{fresh, fresh + 1, fresh + 2}});
        Matroid summed = direct_sum(m, fresh_circuit);
        if (h_polynomial_via_tutte(summed) !=
            h_polynomial_via_tutte(m) * h_polynomial_via_tutte(fresh_circuit)) {
            report = PredicateReport::fail(0, "direct-sum-product-mismatch");
        }
    }
    record(out, report, "e=" + std::to_string(e));
    return out;
}

LemmaOutcome lemma_mc_expansion(const Matroid& m) {
    LemmaOutcome out;
    if (!m.is_loopless() || m.size() < 2 || !m.is_connected()) return out;
    for (std::size_t e_idx = 0; e_idx < m.size(); ++e_idx) {
        Matroid minus_e = m.deletion(Mask(bit(e_idx)));
        Matroid over_e = m.contraction(Mask(bit(e_idx)));
        if (!minus_e.is_connected() || !over_e.is_connected() || !over_e.is_loopless()) continue;
        int e = m.ground().label_at(e_idx);
        record(out, check_deletion_contraction_expansion(m, e), "e=" + std::to_string(e));
    }
    return out;
}

} // namespace

const std::vector<std::string>& known_lemma_names() {
    static const std::vector<std::string> names = {
        "series1",  "series2",      "two-sum",       "deletion-contraction",
        "h-shape",  "series-props", "product-rules", "mc-expansion",
    };
    return names;
}

LemmaOutcome run_lemma_check(const std::string& name, const Matroid& m) {
    if (name == "series1") return lemma_series1(m);
    if (name == "series2") return lemma_series2(m);
    if (name == "two-sum") return lemma_two_sum(m);
    if (name == "deletion-contraction") return lemma_deletion_contraction(m);
    if (name == "h-shape") return lemma_h_shape(m);
    if (name == "series-props") return lemma_series_props(m);
    if (name == "product-rules") return lemma_product_rules(m);
    if (name == "mc-expansion") return lemma_mc_expansion(m);
    throw Error(ErrorCode::UnknownPredicate, "unknown lemma check '" + name + "'");
}

const std::vector<std::string>& known_predicate_names() {
    static const std::vector<std::string> names = {
        "flawless",  "strongly-flawless", "unimodal",   "log-concave",
        "strongly-log-concave", "symmetric", "o-sequence",
    };
    return names;
}

PredicateReport evaluate_predicate(const std::string& name, const Matroid& m) {
    bool known = false;
    for (const auto& candidate : known_predicate_names()) known = known || candidate == name;
    if (!known) throw Error(ErrorCode::UnknownPredicate, "unknown predicate '" + name + "'");

    if (!m.is_loopless()) {
        // Loop convention: hbar = (0), every shape predicate vacuously true.
        PredicateReport report;
        report.detail = "matroid has a loop; predicate is vacuous";
        return report;
    }
    if (name == "o-sequence") return o_sequence_report(g_vector(m).entries);
    const std::vector<std::int64_t> h = h_vector(m).trimmed();
    if (name == "flawless") return flawless_report(h);
    if (name == "strongly-flawless") return strongly_flawless_report(h);
    if (name == "unimodal") return unimodal_report(h);
    if (name == "log-concave") return log_concave_report(h);
    if (name == "strongly-log-concave") return strongly_log_concave_report(h);
    return symmetric_report(h);
}

SweepReport sweep(const std::vector<std::pair<std::string, Matroid>>& family,
                  const std::vector<std::string>& predicates, int jobs) {
    for (const auto& p : predicates) {
        bool known = false;
        for (const auto& candidate : known_predicate_names()) known = known || candidate == p;
        if (!known) throw Error(ErrorCode::UnknownPredicate, "unknown predicate '" + p + "'");
    }

    SweepReport report;
    report.items.resize(family.size());
    auto evaluate_item = [&](std::size_t index) {
        const auto start = std::chrono::steady_clock::now();
        const auto& [id, m] = family[index];
        SweepItem item;
        item.id = id;
        item.ground_size = m.size();
        item.rank = m.rank();
        item.loopy = !m.is_loopless();
        if (!item.loopy) {
            item.h_trimmed = h_vector(m).trimmed();
        }
        item.hbar = complementary_h(m).entries;
        for (const auto& p : predicates) item.predicates[p] = evaluate_predicate(p, m);
        item.elapsed_us =
            std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
                .count();
        report.items[index] = std::move(item);
    };

    if (jobs <= 1 || family.size() < 2) {
        for (std::size_t i = 0; i < family.size(); ++i) evaluate_item(i);
    } else {
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), family.size());
        std::vector<std::thread> threads;
        std::atomic<std::size_t> next{0};
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= family.size()) break;
                    evaluate_item(i);
                }
            });
        }
        for (auto& t : threads) t.join();
    }

    for (const auto& p : predicates) report.violation_counts[p] = 0;
    for (const auto& item : report.items) {
        for (const auto& [p, outcome] : item.predicates) {
            if (!outcome.ok) {
                ++report.violation_counts[p];
                if (!report.first_counterexample) report.first_counterexample = item.id;
            }
        }
    }
    return report;
}

} // namespace bcx
