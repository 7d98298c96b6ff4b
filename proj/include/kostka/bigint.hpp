#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace kostka {

using BigInt = mpz_class;
using BigRat = mpq_class;
using Int = long;

// C(n, k) with the counting convention: 0 when k < 0 or n < k.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || n < k) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline int sign_of(const BigRat& q) { return sgn(q); }

// Canonical decimal string, e.g. "-42".
inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Canonical rational string: "p/q", or just "p" when the denominator is 1.
inline std::string to_rational_string(const BigRat& v) { return v.get_str(); }

BigInt parse_bigint(const std::string& s);
BigRat parse_bigrat(const std::string& s);

} // namespace kostka
