#pragma once

#include "kostka/bigint.hpp"
#include "kostka/ehrhart.hpp"

namespace kostka {

// H_ell(t): number of ell x ell nonnegative integer matrices with every
// line sum equal to t, by a row DP over sorted remaining column sums.
BigInt magic_square_count(int ell, Int t);

// Strictly positive matrices with line sums t; equals H_ell(t - ell) by
// subtracting 1 from every entry, and 0 when t < ell.
BigInt birkhoff_interior_count(int ell, Int t);

struct BirkhoffResult {
    RationalPolynomial polynomial;
    std::vector<EvaluationPoint> transcript;   // the d+1 interpolation points
};

// Ehrhart polynomial of the Birkhoff polytope B_ell via the classical
// symmetry interpolation: trivial zeros at -1..-(ell-1), computed values
// at t = 1..(ell-1)(ell-2)/2, and their mirrors at -ell-t with sign
// (-1)^(ell-1). Verified at one extra positive point before returning.
// Throws ResourceGuard for ell >= 7 and VerificationError on mismatch.
BirkhoffResult birkhoff_ehrhart(int ell);

} // namespace kostka
