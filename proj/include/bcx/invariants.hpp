// Broken circuit complexes, f-/h-vectors, characteristic and Tutte
// polynomials, with independent subset-expansion oracles.
#ifndef BCX_INVARIANTS_HPP
#define BCX_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "bcx/matroid.hpp"
#include "bcx/polynomial.hpp"

namespace bcx {

// Face counts of the broken circuit complex by cardinality, f_0..f_r.
struct FVector {
    std::vector<std::int64_t> counts;
    int rank = 0;

    bool operator==(const FVector& rhs) const { return counts == rhs.counts && rank == rhs.rank; }
};

// h-vector of the broken circuit complex. The full vector has length
// rank+1; the trimmed view drops the zero tail after the top nonzero
// index s (= rank - #components for loopless matroids).
struct HVector {
    std::vector<std::int64_t> full; // h_0..h_r
    int rank = 0;
    int s = 0; // last nonzero index

    std::vector<std::int64_t> trimmed() const {
        return std::vector<std::int64_t>(full.begin(), full.begin() + s + 1);
    }
    // h_i with the convention h_i = 0 outside [0, r].
    std::int64_t at(int i) const {
        if (i < 0 || i > rank) return 0;
        return full[static_cast<std::size_t>(i)];
    }
    bool operator==(const HVector& rhs) const {
        return full == rhs.full && rank == rhs.rank && s == rhs.s;
    }
};

// Broken circuits of (M, <): every circuit with its least element removed,
// as an inclusion-minimal set family. Requires looplessness.
std::vector<Mask> broken_circuits(const Matroid& m, const LinearOrder& order);

// Counts the subsets of E containing no broken circuit, by cardinality.
FVector bc_f_vector(const Matroid& m, const LinearOrder& order);
FVector bc_f_vector(const Matroid& m);

// Whitney-Rota: chi(M;t) = sum_i (-1)^i f_i t^{r-i}, from the f-vector
// under the default order. Requires looplessness.
IntPolynomial characteristic_polynomial(const Matroid& m);

// Literal subset expansion sum_{X subset E} (-1)^{|X|} t^{r - r(X)}; the
// oracle for characteristic_polynomial. Works for any matroid.
IntPolynomial char_poly_subset_expansion(const Matroid& m);

// Tutte polynomial by memoized deletion-contraction (loops contribute y,
// coloops x, otherwise T(M) = T(M-e) + T(M/e) with the smallest-index
// eligible pivot).
BivariatePolynomial tutte(const Matroid& m);

// Literal corank-nullity expansion over all subsets; the Tutte oracle.
BivariatePolynomial tutte_subset_expansion(const Matroid& m);

// h-polynomial T(M;t,0), valid for any matroid (identically zero when M
// has a loop).
IntPolynomial h_polynomial_via_tutte(const Matroid& m);

// h-polynomial sum_i h_i t^{r-i}. Computed from the f-vector transform and
// from T(M;t,0); both routes must agree (InternalInconsistency otherwise).
// Requires looplessness.
IntPolynomial h_polynomial(const Matroid& m);
HVector h_vector(const Matroid& m);

// Mutually inverse binomial transforms between f- and h-vectors.
HVector f_to_h(const FVector& f);
FVector h_to_f(const HVector& h, int rank);

} // namespace bcx

#endif
