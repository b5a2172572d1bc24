#include "bcx/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace bcx {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
    return IntPolynomial(c == 0 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{c});
}

IntPolynomial IntPolynomial::monomial(std::int64_t c, std::size_t d) {
    if (c == 0) return zero();
    std::vector<std::int64_t> v(d + 1, 0);
    v[d] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::operator()(std::int64_t t) const {
    std::int64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

std::vector<std::int64_t> IntPolynomial::coefficient_sequence() const {
    if (coeffs_.empty()) return {};
    std::size_t lo = 0;
    while (coeffs_[lo] == 0) ++lo;
    std::vector<std::int64_t> seq;
    for (std::size_t d = coeffs_.size(); d-- > lo;) seq.push_back(coeffs_[d]);
    return seq;
}

IntPolynomial IntPolynomial::composed_with_one_minus_t() const {
    // Horner in the variable (1 - t).
    IntPolynomial acc;
    IntPolynomial one_minus_t({1, -1});
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * one_minus_t + constant(coeffs_[i]);
    }
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<std::int64_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    return *this + rhs * -1;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(std::int64_t scalar) const {
    std::vector<std::int64_t> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        std::int64_t c = coeffs_[d];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || d == 0) os << a;
        if (d > 0) {
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

BivariatePolynomial BivariatePolynomial::constant(std::int64_t c) {
    return monomial(c, 0, 0);
}

BivariatePolynomial BivariatePolynomial::monomial(std::int64_t c, int dx, int dy) {
    BivariatePolynomial p;
    p.add_term(dx, dy, c);
    return p;
}

std::int64_t BivariatePolynomial::coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? 0 : it->second;
}

void BivariatePolynomial::add_term(int dx, int dy, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out = *this;
    for (const auto& [key, c] : rhs.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivariatePolynomial BivariatePolynomial::shifted(int dx, int dy) const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) out.add_term(key.first + dx, key.second + dy, c);
    return out;
}

IntPolynomial BivariatePolynomial::at_y_zero() const {
    IntPolynomial out;
    for (const auto& [key, c] : terms_)
        if (key.second == 0) out = out + IntPolynomial::monomial(c, static_cast<std::size_t>(key.first));
    return out;
}

BivariatePolynomial BivariatePolynomial::swapped_variables() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
    return out;
}

std::int64_t BivariatePolynomial::evaluate(std::int64_t x, std::int64_t y) const {
    std::int64_t acc = 0;
    for (const auto& [key, c] : terms_) {
        std::int64_t term = c;
        for (int i = 0; i < key.first; ++i) term *= x;
        for (int i = 0; i < key.second; ++i) term *= y;
        acc += term;
    }
    return acc;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then higher x-degree.
    std::vector<std::pair<Key, std::int64_t>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    for (const auto& [key, c] : sorted) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        std::int64_t a = c < 0 ? -c : c;
        bool has_var = key.first > 0 || key.second > 0;
        if (a != 1 || !has_var) os << a;
        if (key.first > 0) {
            os << "x";
            if (key.first > 1) os << "^" << key.first;
        }
        if (key.second > 0) {
            os << "y";
            if (key.second > 1) os << "^" << key.second;
        }
        first = false;
    }
    return os.str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::int64_t acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

} // namespace bcx
