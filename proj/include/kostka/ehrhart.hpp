#pragma once

#include "kostka/bigint.hpp"
#include "kostka/rational_polynomial.hpp"

#include <string>
#include <vector>

namespace kostka {

struct EvaluationPoint {
    Int x = 0;      // may be negative
    BigInt value;   // signed: negative-side entries already carry (-1)^d

    bool operator==(const EvaluationPoint&) const = default;
};

// Counting backend driven by the adaptive scheduler: lattice points and
// interior lattice points of the n-th dilate, plus the declared dimension.
// positive(0) is conceptually 1 and never queried.
class PointEvaluator {
public:
    virtual ~PointEvaluator() = default;

    virtual int dimension() const = 0;
    virtual BigInt positive(Int n) const = 0;
    virtual BigInt interior(Int n) const = 0;
};

struct AdaptiveResult {
    RationalPolynomial polynomial;
    std::vector<EvaluationPoint> transcript;
};

// Unique polynomial of degree <= |points|-1 through all points.
// Throws DuplicateAbscissa on repeated x values.
RationalPolynomial lagrange_interpolate(const std::vector<EvaluationPoint>& points);

// Adaptive evaluation-point scheduling: starts from (0,1) with unit costs
// on both sides, repeatedly takes the cheaper side (ties go negative),
// records the raw count as that side's new cost, and stops at d+1 points.
// Zero strict counts keep the negative side selected, so those points are
// free.
AdaptiveResult adaptive_ehrhart(const PointEvaluator& evaluator);

struct VerificationReport {
    bool ok = true;
    Int x = 0;              // offending point when !ok
    std::string expected;
    std::string actual;
    std::string message;

    explicit operator bool() const { return ok; }
};

// Evaluates poly at one fresh positive and one fresh negative dilation
// (relative to the transcript) and compares against the evaluator, with
// the (-1)^d sign on the negative side; also checks integer-valuedness on
// [-(d+2), d+2].
VerificationReport verify_polynomial(const RationalPolynomial& poly,
                                     const PointEvaluator& evaluator,
                                     const std::vector<EvaluationPoint>& transcript);

// h*-vector h_0..h_d, reported at full length d+1 including trailing
// zeros; the effective degree is the last nonzero index.
class HStarVector {
public:
    HStarVector() = default;
    explicit HStarVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}

    const std::vector<BigInt>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    const BigInt& entry(std::size_t i) const { return entries_[i]; }

    // Max i with h_i != 0; -1 when all entries vanish.
    int effective_degree() const;

    bool all_nonnegative() const;

    BigInt sum() const;

    // h_0 + h_1 t + ... as an exact polynomial.
    RationalPolynomial polynomial() const;

    bool operator==(const HStarVector&) const = default;

    std::string to_string() const;

private:
    std::vector<BigInt> entries_;
};

// h*_j = sum_{i=0..j} (-1)^i C(d+1, i) L(j-i) for j = 0..d, where d is the
// polynomial degree. Throws NonIntegralHStar when an entry is not an
// integer.
HStarVector hstar_from_ehrhart(const RationalPolynomial& poly);

bool is_nonnegative_coeffs(const RationalPolynomial& poly);

// Palindromicity with respect to the h*-polynomial's own degree s:
// h_i = h_{s-i} for all i.
bool is_palindromic(const HStarVector& h);

// h_i^2 >= h_{i-1} h_{i+1} across the support, which must have no
// internal zeros.
bool is_log_concave(const HStarVector& h);

// Log-concavity of h_i / C(s, i) in exact rationals, s = effective degree.
bool is_ultra_log_concave(const HStarVector& h);

// Exact decision via a Sturm sequence on the squarefree part; no floating
// point. Throws ZeroPolynomial on the zero polynomial.
bool is_real_rooted(const RationalPolynomial& poly);

struct HStarProperties {
    bool hstar_nonneg = false;
    bool palindromic = false;
    bool log_concave = false;
    bool ultra_log_concave = false;
    bool real_rooted = false;

    bool operator==(const HStarProperties&) const = default;
};

HStarProperties analyze_hstar(const HStarVector& h);

} // namespace kostka
