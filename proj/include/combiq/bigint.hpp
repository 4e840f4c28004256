#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace combiq {

/// Arbitrary-precision signed integer. Every count in the library is exact;
/// no floating point appears anywhere on a counting path.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an internal consistency check fails (a bug, not bad input):
/// a division that must be exact leaves a remainder, a count that must be
/// nonnegative comes out negative, and so on.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // r = C(n-k+i, i), so the division is exact
    }
    return r;
}

/// Quotient that must be exact; a nonzero remainder signals a bug upstream.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0 || num % den != 0)
        throw internal_error(std::string(context) + ": non-exact division");
    return num / den;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace combiq
