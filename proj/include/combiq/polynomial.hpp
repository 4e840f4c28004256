#pragma once

#include "combiq/bigint.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace combiq {

/// Dense polynomial in one variable q with BigInt coefficients, index =
/// exponent. Normalized: no trailing zero coefficients; the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial one() { return IntPolynomial({BigInt(1)}); }

    static IntPolynomial monomial(BigInt c, int degree) {
        if (degree < 0) throw std::invalid_argument("monomial: negative degree");
        std::vector<BigInt> v(degree + 1);
        v[degree] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt coefficient(int exponent) const {
        if (exponent < 0 || exponent > degree()) return 0;
        return coeffs_[exponent];
    }

    BigInt evaluate_at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    IntPolynomial& operator+=(const IntPolynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
        a += b;
        return a;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    /// This polynomial times q^k.
    IntPolynomial shifted(int k) const {
        if (k < 0) throw std::invalid_argument("shifted: negative shift");
        if (is_zero()) return {};
        std::vector<BigInt> out(coeffs_.size() + k);
        for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    /// Coefficients rise to a peak then fall (weakly).
    bool coefficients_unimodal() const {
        int i = 0, d = degree();
        while (i < d && coeffs_[i] <= coeffs_[i + 1]) ++i;
        while (i < d && coeffs_[i] >= coeffs_[i + 1]) ++i;
        return i == d || d < 0;
    }

    bool operator==(const IntPolynomial& other) const = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Text form: space-separated coefficients from degree 0 upward; "0" for the
/// zero polynomial.
inline std::string encode(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) s += ' ';
        s += p.coefficient(i).str();
    }
    return s;
}

inline IntPolynomial parse_polynomial(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) coeffs.emplace_back(tok);
    return IntPolynomial(std::move(coeffs));
}

}  // namespace combiq
