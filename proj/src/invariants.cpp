#include "bcx/invariants.hpp"

#include <algorithm>
#include <unordered_map>

namespace bcx {

namespace {

void require_loopless(const Matroid& m, const char* what) {
    if (!m.is_loopless()) {
        throw Error(ErrorCode::HasLoops, std::string(what) + " needs a loopless matroid");
    }
}

} // namespace

std::vector<Mask> broken_circuits(const Matroid& m, const LinearOrder& order) {
    require_loopless(m, "broken circuit computation");
    std::vector<Mask> broken;
    broken.reserve(m.circuits().size());
    for (Mask c : m.circuits()) broken.push_back(c & ~bit(order.least_index(c)));
    return antichain_minimalize(std::move(broken));
}

FVector bc_f_vector(const Matroid& m, const LinearOrder& order) {
    require_loopless(m, "f-vector computation");
    const std::size_t n = m.size();
    const int r = m.rank();
    std::vector<Mask> broken = broken_circuits(m, order);

    // Broken circuits containing a given element, for incremental checks.
    std::vector<std::vector<Mask>> by_element(n);
    for (Mask b : broken) {
        for_each_bit(b, [&](std::size_t e) { by_element[e].push_back(b); });
    }

    FVector f;
    f.rank = r;
    f.counts.assign(static_cast<std::size_t>(r) + 1, 0);
    // Depth-first walk of the subset tree in index order. A subset is
    // counted when it contains no broken circuit; all faces arise this way
    // because faces are downward closed.
    auto walk = [&](auto&& self, Mask chosen, std::size_t next_element, int size) -> void {
        ++f.counts[static_cast<std::size_t>(size)];
        for (std::size_t e = next_element; e < n; ++e) {
            Mask candidate = chosen | bit(e);
            bool blocked = false;
            for (Mask b : by_element[e]) {
                if (subset_of(b, candidate)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) self(self, candidate, e + 1, size + 1);
        }
    };
    walk(walk, 0, 0, 0);
    return f;
}

FVector bc_f_vector(const Matroid& m) {
    return bc_f_vector(m, LinearOrder::default_for(m.ground()));
}

IntPolynomial characteristic_polynomial(const Matroid& m) {
    require_loopless(m, "characteristic polynomial");
    FVector f = bc_f_vector(m);
    IntPolynomial chi;
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        std::int64_t sign = (i % 2 == 0) ? 1 : -1;
        chi = chi + IntPolynomial::monomial(sign * f.counts[i],
                                            static_cast<std::size_t>(f.rank) - i);
    }
    return chi;
}

IntPolynomial char_poly_subset_expansion(const Matroid& m) {
    if (m.size() > Matroid::kDefaultMaxElements) {
        throw Error(ErrorCode::TooLarge, "subset expansion beyond the desk-scale cap");
    }
    const int r = m.rank();
    const Mask all = full_mask(m.size());
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(r) + 1, 0);
    for (Mask x = 0;; ++x) {
        int sign = popcount(x) % 2 == 0 ? 1 : -1;
        coeffs[static_cast<std::size_t>(r - m.rank(x))] += sign;
        if (x == all) break;
    }
    return IntPolynomial(std::move(coeffs));
}

namespace {

// Canonical memo key for the Tutte recursion: ground size plus the sorted
// circuit family over compacted indices. No isomorphism reduction.
struct TutteKey {
    std::vector<Mask> data; // data[0] = n, rest = circuits

    bool operator==(const TutteKey& rhs) const { return data == rhs.data; }
};

struct TutteKeyHash {
    std::size_t operator()(const TutteKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (Mask m : k.data) {
            h ^= std::hash<Mask>{}(m);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Lightweight minor state: circuits over indices 0..n-1. Deletion and
// contraction re-compact indices; validation is skipped inside the
// recursion since both operations preserve the circuit axioms.
struct MinorState {
    std::size_t n = 0;
    std::vector<Mask> circuits;

    TutteKey key() const {
        TutteKey k;
        k.data.reserve(circuits.size() + 1);
        k.data.push_back(static_cast<Mask>(n));
        k.data.insert(k.data.end(), circuits.begin(), circuits.end());
        return k;
    }
};

MinorState minor_delete(const MinorState& s, std::size_t e) {
    Mask kept = full_mask(s.n) & ~bit(e);
    MinorState out;
    out.n = s.n - 1;
    for (Mask c : s.circuits) {
        if (!subset_of(c, kept)) continue;
        Mask low = c & (bit(e) - 1);
        out.circuits.push_back(low | ((c >> 1) & ~(bit(e) - 1)));
    }
    std::sort(out.circuits.begin(), out.circuits.end());
    return out;
}

MinorState minor_contract(const MinorState& s, std::size_t e) {
    Mask kept = full_mask(s.n) & ~bit(e);
    std::vector<Mask> reduced;
    reduced.reserve(s.circuits.size());
    for (Mask c : s.circuits) {
        Mask rest = c & kept;
        if (rest == 0) continue;
        Mask low = rest & (bit(e) - 1);
        reduced.push_back(low | ((rest >> 1) & ~(bit(e) - 1)));
    }
    MinorState out;
    out.n = s.n - 1;
    out.circuits = antichain_minimalize(std::move(reduced));
    return out;
}

BivariatePolynomial tutte_recurse(const MinorState& s,
                                  std::unordered_map<TutteKey, BivariatePolynomial, TutteKeyHash>& memo) {
    if (s.n == 0) return BivariatePolynomial::constant(1);
    TutteKey key = s.key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Mask loop_mask = 0;
    Mask in_circuit = 0;
    for (Mask c : s.circuits) {
        if (popcount(c) == 1) loop_mask |= c;
        in_circuit |= c;
    }
    Mask coloop_mask = full_mask(s.n) & ~in_circuit;

    BivariatePolynomial result;
    if ((loop_mask | coloop_mask) != 0) {
        // Strip one loop or coloop; both reduce to the same deletion.
        std::size_t e;
        int dx = 0, dy = 0;
        if (loop_mask != 0) {
            e = static_cast<std::size_t>(lowest_bit(loop_mask));
            dy = 1;
        } else {
            e = static_cast<std::size_t>(lowest_bit(coloop_mask));
            dx = 1;
        }
        result = tutte_recurse(minor_delete(s, e), memo).shifted(dx, dy);
    } else {
        std::size_t pivot = 0; // smallest index; nothing here is a loop or coloop
        result = tutte_recurse(minor_delete(s, pivot), memo) +
                 tutte_recurse(minor_contract(s, pivot), memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

BivariatePolynomial tutte(const Matroid& m) {
    MinorState s;
    s.n = m.size();
    s.circuits = m.circuits();
    std::unordered_map<TutteKey, BivariatePolynomial, TutteKeyHash> memo;
    return tutte_recurse(s, memo);
}

BivariatePolynomial tutte_subset_expansion(const Matroid& m) {
    if (m.size() > Matroid::kDefaultMaxElements) {
        throw Error(ErrorCode::TooLarge, "subset expansion beyond the desk-scale cap");
    }
    const int r = m.rank();
    const Mask all = full_mask(m.size());
    // Precomputed powers of (x-1) and (y-1).
    std::vector<BivariatePolynomial> xp(static_cast<std::size_t>(r) + 1);
    std::vector<BivariatePolynomial> yp(m.size() + 1);
    BivariatePolynomial xm1;
    xm1.add_term(1, 0, 1);
    xm1.add_term(0, 0, -1);
    BivariatePolynomial ym1;
    ym1.add_term(0, 1, 1);
    ym1.add_term(0, 0, -1);
    xp[0] = BivariatePolynomial::constant(1);
    for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * xm1;
    yp[0] = BivariatePolynomial::constant(1);
    for (std::size_t i = 1; i < yp.size(); ++i) yp[i] = yp[i - 1] * ym1;

    BivariatePolynomial acc;
    for (Mask x = 0;; ++x) {
        int rx = m.rank(x);
        acc = acc + xp[static_cast<std::size_t>(r - rx)] * yp[static_cast<std::size_t>(popcount(x) - rx)];
        if (x == all) break;
    }
    return acc;
}

IntPolynomial h_polynomial_via_tutte(const Matroid& m) {
    return tutte(m).at_y_zero();
}

HVector f_to_h(const FVector& f) {
    if (f.counts.size() != static_cast<std::size_t>(f.rank) + 1) {
        throw Error(ErrorCode::LengthMismatch, "f-vector must have rank+1 entries");
    }
    const int r = f.rank;
    HVector h;
    h.rank = r;
    h.full.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= r; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j <= i; ++j) {
            std::int64_t sign = ((i - j) % 2 == 0) ? 1 : -1;
            acc += sign * binomial(r - j, i - j) * f.counts[static_cast<std::size_t>(j)];
        }
        h.full[static_cast<std::size_t>(i)] = acc;
    }
    h.s = 0;
    for (int i = r; i >= 0; --i) {
        if (h.full[static_cast<std::size_t>(i)] != 0) {
            h.s = i;
            break;
        }
    }
    return h;
}

FVector h_to_f(const HVector& h, int rank) {
    if (h.full.size() != static_cast<std::size_t>(h.rank) + 1 || h.rank != rank) {
        throw Error(ErrorCode::LengthMismatch, "h-vector length does not match the stated rank");
    }
    FVector f;
    f.rank = rank;
    f.counts.assign(static_cast<std::size_t>(rank) + 1, 0);
    for (int i = 0; i <= rank; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j <= i; ++j) acc += binomial(rank - j, i - j) * h.at(j);
        f.counts[static_cast<std::size_t>(i)] = acc;
    }
    return f;
}

HVector h_vector(const Matroid& m) {
    require_loopless(m, "h-vector computation");
    HVector h = f_to_h(bc_f_vector(m));
    // Second route: coefficients of T(M;t,0), with h_i at degree r-i.
    IntPolynomial via_tutte = h_polynomial_via_tutte(m);
    for (int i = 0; i <= h.rank; ++i) {
        if (h.at(i) != via_tutte.coeff(static_cast<std::size_t>(h.rank - i))) {
            throw Error(ErrorCode::InternalInconsistency,
                        "f-transform and Tutte routes disagree on the h-vector");
        }
    }
    if (via_tutte.degree() > h.rank) {
        throw Error(ErrorCode::InternalInconsistency, "Tutte h-polynomial exceeds the rank degree");
    }
    return h;
}

IntPolynomial h_polynomial(const Matroid& m) {
    HVector h = h_vector(m);
    IntPolynomial out;
    for (int i = 0; i <= h.rank; ++i) {
        out = out + IntPolynomial::monomial(h.at(i), static_cast<std::size_t>(h.rank - i));
    }
    return out;
}

} // namespace bcx
