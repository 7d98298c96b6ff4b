#pragma once

#include "kostka/bigint.hpp"

#include <string>
#include <vector>

namespace kostka {

// Univariate polynomial with exact rational coefficients, stored lowest
// degree first with trailing zeros trimmed. The zero polynomial has an
// empty coefficient list and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRat> coeffs);

    static RationalPolynomial constant(const BigRat& c);
    static RationalPolynomial from_integers(const std::vector<BigInt>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<BigRat>& coefficients() const { return coeffs_; }
    BigRat coefficient(int i) const;
    BigRat leading_coefficient() const;

    BigRat evaluate(const BigRat& x) const;
    BigRat evaluate(const BigInt& x) const { return evaluate(BigRat(x)); }
    BigRat evaluate(Int x) const { return evaluate(BigRat(x)); }

    RationalPolynomial derivative() const;

    // p(a + b*t).
    RationalPolynomial compose_affine(const BigRat& a, const BigRat& b) const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const BigRat& c) const;
    RationalPolynomial operator-() const;

    bool operator==(const RationalPolynomial&) const = default;

    // True when the polynomial takes integer values at every integer in
    // [lo, hi] (exact evaluation).
    bool integer_valued_on(Int lo, Int hi) const;

    std::string to_string(const std::string& var = "n") const;

private:
    std::vector<BigRat> coeffs_;

    void trim();
};

// Quotient and remainder; divisor must be nonzero.
struct PolyDivMod {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

PolyDivMod divmod(const RationalPolynomial& numerator, const RationalPolynomial& divisor);

// Monic gcd of a and b (1 for coprime inputs; zero polynomial only when
// both inputs are zero).
RationalPolynomial polynomial_gcd(RationalPolynomial a, RationalPolynomial b);

// p divided by gcd(p, p'); same roots, all simple.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

// Number of distinct real roots of a squarefree polynomial, by a Sturm
// sequence over (-inf, +inf).
int sturm_real_root_count(const RationalPolynomial& squarefree);

} // namespace kostka
