// Exact integer polynomials in one and two variables.
#ifndef BCX_POLYNOMIAL_HPP
#define BCX_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bcx {

// Dense univariate polynomial with exact 64-bit integer coefficients.
// coeffs_[d] is the coefficient of t^d; the top coefficient is nonzero
// unless the polynomial is zero (empty coefficient list).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial constant(std::int64_t c);
    // c * t^d
    static IntPolynomial monomial(std::int64_t c, std::size_t d);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(std::size_t d) const {
        return d < coeffs_.size() ? coeffs_[d] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t operator()(std::int64_t t) const;

    // Coefficients read from the highest nonzero degree down to the lowest
    // nonzero degree: the sequence (a_0..a_n) of a_0 t^{n+u} + ... + a_n t^u.
    // Empty for the zero polynomial.
    std::vector<std::int64_t> coefficient_sequence() const;

    // p(1 - t), expanded exactly.
    IntPolynomial composed_with_one_minus_t() const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(std::int64_t scalar) const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

// Sparse bivariate polynomial; keys are (x-degree, y-degree), zero
// coefficients are never stored.
class BivariatePolynomial {
  public:
    using Key = std::pair<int, int>;

    BivariatePolynomial() = default;
    static BivariatePolynomial constant(std::int64_t c);
    static BivariatePolynomial monomial(std::int64_t c, int dx, int dy);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int dx, int dy) const;
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    void add_term(int dx, int dy, std::int64_t c);

    BivariatePolynomial operator+(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator*(const BivariatePolynomial& rhs) const;
    bool operator==(const BivariatePolynomial& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const BivariatePolynomial& rhs) const { return !(*this == rhs); }

    // Multiplies by x^dx * y^dy.
    BivariatePolynomial shifted(int dx, int dy) const;

    // Restriction to y = 0: the univariate polynomial in x made of the
    // terms with y-degree zero.
    IntPolynomial at_y_zero() const;

    // Exact evaluation with x and y swapped, as a new polynomial.
    BivariatePolynomial swapped_variables() const;

    std::int64_t evaluate(std::int64_t x, std::int64_t y) const;

    std::string to_string() const;

  private:
    std::map<Key, std::int64_t> terms_;
};

// Binomial coefficient C(n, k) as an exact 64-bit value; values stay small
// at desk scale (n <= ~64).
std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace bcx

#endif
