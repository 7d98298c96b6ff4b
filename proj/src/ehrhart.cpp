#include "kostka/ehrhart.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace kostka {

RationalPolynomial lagrange_interpolate(const std::vector<EvaluationPoint>& points) {
    if (points.empty()) throw Error("interpolation needs at least one point");
    {
        std::set<Int> xs;
        for (const auto& p : points) {
            if (!xs.insert(p.x).second) {
                throw DuplicateAbscissa("repeated abscissa " + std::to_string(p.x));
            }
        }
    }

    // Newton divided differences, then expansion to the monomial basis.
    const std::size_t m = points.size();
    std::vector<BigRat> coef(m);           // divided-difference coefficients
    std::vector<BigRat> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = BigRat(points[i].value);
    coef[0] = col[0];
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = 0; i + level < m; ++i) {
            BigRat dx(points[i + level].x - points[i].x);
            col[i] = (col[i + 1] - col[i]) / dx;
        }
        col.resize(m - level);
        coef[level] = col[0];
    }

    RationalPolynomial result;
    RationalPolynomial basis = RationalPolynomial::constant(BigRat(1));
    for (std::size_t i = 0; i < m; ++i) {
        result = result + basis * coef[i];
        basis = basis * RationalPolynomial(std::vector<BigRat>{BigRat(-points[i].x), BigRat(1)});
    }
    return result;
}

AdaptiveResult adaptive_ehrhart(const PointEvaluator& evaluator) {
    const int d = evaluator.dimension();
    if (d < 0) throw Error("negative dimension");

    std::vector<EvaluationPoint> points{{0, BigInt(1)}};
    Int p = 0;
    Int q = 0;
    BigInt cost_pos(1);
    BigInt cost_neg(1);
    const int sign = d % 2 == 0 ? 1 : -1;

    while (static_cast<int>(points.size()) <= d) {
        if (cost_neg <= cost_pos) {
            ++q;
            BigInt v = evaluator.interior(q);
            points.push_back({-q, sign > 0 ? v : BigInt(-v)});
            cost_neg = v;
        } else {
            ++p;
            BigInt v = evaluator.positive(p);
            points.push_back({p, v});
            cost_pos = v;
        }
    }
    return {lagrange_interpolate(points), std::move(points)};
}

VerificationReport verify_polynomial(const RationalPolynomial& poly,
                                     const PointEvaluator& evaluator,
                                     const std::vector<EvaluationPoint>& transcript) {
    const int d = evaluator.dimension();
    const int sign = d % 2 == 0 ? 1 : -1;

    Int max_pos = 0;
    Int max_neg = 0;
    for (const auto& pt : transcript) {
        max_pos = std::max(max_pos, pt.x);
        max_neg = std::max(max_neg, -pt.x);
    }

    auto fail = [](Int x, const BigRat& expected, const BigRat& actual, const std::string& what) {
        VerificationReport r;
        r.ok = false;
        r.x = x;
        r.expected = expected.get_str();
        r.actual = actual.get_str();
        std::ostringstream msg;
        msg << what << " at x = " << x << ": evaluator gives " << r.expected
            << ", polynomial gives " << r.actual;
        r.message = msg.str();
        return r;
    };

    const Int fresh_pos = max_pos + 1;
    BigRat expected_pos{evaluator.positive(fresh_pos)};
    BigRat actual_pos = poly.evaluate(fresh_pos);
    if (actual_pos != expected_pos) {
        return fail(fresh_pos, expected_pos, actual_pos, "positive-count mismatch");
    }

    const Int fresh_neg = max_neg + 1;
    BigRat expected_neg = BigRat(evaluator.interior(fresh_neg)) * sign;
    BigRat actual_neg = poly.evaluate(-fresh_neg);
    if (actual_neg != expected_neg) {
        return fail(-fresh_neg, expected_neg, actual_neg, "interior-count mismatch");
    }

    for (Int x = -(d + 2); x <= d + 2; ++x) {
        BigRat v = poly.evaluate(x);
        if (v.get_den() != 1) {
            VerificationReport r;
            r.ok = false;
            r.x = x;
            r.expected = "an integer";
            r.actual = v.get_str();
            r.message = "non-integer value " + r.actual + " at x = " + std::to_string(x);
            return r;
        }
    }
    return {};
}

int HStarVector::effective_degree() const {
    for (int i = static_cast<int>(entries_.size()) - 1; i >= 0; --i) {
        if (entries_[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

bool HStarVector::all_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& e) { return e >= 0; });
}

BigInt HStarVector::sum() const {
    BigInt s(0);
    for (const auto& e : entries_) s += e;
    return s;
}

RationalPolynomial HStarVector::polynomial() const {
    return RationalPolynomial::from_integers(entries_);
}

std::string HStarVector::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ", ";
        out << entries_[i].get_str();
    }
    out << ")";
    return out.str();
}

HStarVector hstar_from_ehrhart(const RationalPolynomial& poly) {
    const int d = poly.degree();
    if (d < 0) throw Error("h* of the zero polynomial");

    std::vector<BigRat> values;   // L(0..d)
    values.reserve(static_cast<std::size_t>(d) + 1);
    for (int m = 0; m <= d; ++m) values.push_back(poly.evaluate(static_cast<Int>(m)));

    std::vector<BigInt> entries;
    entries.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        BigRat h(0);
        for (int i = 0; i <= j; ++i) {
            BigRat term = BigRat(binomial(d + 1, i)) * values[static_cast<std::size_t>(j - i)];
            if (i % 2 == 0) h += term; else h -= term;
        }
        if (h.get_den() != 1) {
            throw NonIntegralHStar("h*_" + std::to_string(j) + " = " + h.get_str() +
                                   " is not an integer");
        }
        entries.push_back(BigInt(h.get_num()));
    }
    return HStarVector(std::move(entries));
}

bool is_nonnegative_coeffs(const RationalPolynomial& poly) {
    return std::all_of(poly.coefficients().begin(), poly.coefficients().end(),
                       [](const BigRat& c) { return c >= 0; });
}

bool is_palindromic(const HStarVector& h) {
    const int s = h.effective_degree();
    if (s < 0) return true;
    for (int i = 0; i <= s; ++i) {
        if (h.entry(static_cast<std::size_t>(i)) != h.entry(static_cast<std::size_t>(s - i))) {
            return false;
        }
    }
    return true;
}

namespace {

// First and last nonzero index, or (-1, -1); contiguity of the support is
// required by both concavity notions.
struct Support {
    int first = -1;
    int last = -1;
    bool contiguous = true;
};

Support support_of(const HStarVector& h) {
    Support s;
    for (int i = 0; i < static_cast<int>(h.length()); ++i) {
        if (h.entry(static_cast<std::size_t>(i)) != 0) {
            if (s.first < 0) s.first = i;
            s.last = i;
        }
    }
    if (s.first >= 0) {
        for (int i = s.first; i <= s.last; ++i) {
            if (h.entry(static_cast<std::size_t>(i)) == 0) s.contiguous = false;
        }
    }
    return s;
}

} // namespace

bool is_log_concave(const HStarVector& h) {
    const Support sup = support_of(h);
    if (sup.first < 0) return true;
    if (!sup.contiguous) return false;
    for (int i = sup.first + 1; i < sup.last; ++i) {
        const BigInt& a = h.entry(static_cast<std::size_t>(i - 1));
        const BigInt& b = h.entry(static_cast<std::size_t>(i));
        const BigInt& c = h.entry(static_cast<std::size_t>(i + 1));
        if (b * b < a * c) return false;
    }
    return true;
}

bool is_ultra_log_concave(const HStarVector& h) {
    const Support sup = support_of(h);
    if (sup.first < 0) return true;
    if (!sup.contiguous) return false;
    const int s = h.effective_degree();
    for (int i = sup.first + 1; i < sup.last; ++i) {
        BigRat a = BigRat(h.entry(static_cast<std::size_t>(i - 1))) / BigRat(binomial(s, i - 1));
        BigRat b = BigRat(h.entry(static_cast<std::size_t>(i))) / BigRat(binomial(s, i));
        BigRat c = BigRat(h.entry(static_cast<std::size_t>(i + 1))) / BigRat(binomial(s, i + 1));
        if (b * b < a * c) return false;
    }
    return true;
}

bool is_real_rooted(const RationalPolynomial& poly) {
    if (poly.is_zero()) throw ZeroPolynomial("real-rootedness of the zero polynomial");
    if (poly.degree() <= 1) return true;
    RationalPolynomial sf = squarefree_part(poly);
    if (sf.degree() <= 1) return true;
    return sturm_real_root_count(sf) == sf.degree();
}

HStarProperties analyze_hstar(const HStarVector& h) {
    HStarProperties p;
    p.hstar_nonneg = h.all_nonnegative();
    p.palindromic = is_palindromic(h);
    p.log_concave = is_log_concave(h);
    p.ultra_log_concave = is_ultra_log_concave(h);
    RationalPolynomial hp = h.polynomial();
    p.real_rooted = hp.is_zero() ? false : is_real_rooted(hp);
    return p;
}

} // namespace kostka
