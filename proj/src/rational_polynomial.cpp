#include "kostka/rational_polynomial.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kostka {

BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

BigRat parse_bigrat(const std::string& s) {
    try {
        BigRat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

RationalPolynomial::RationalPolynomial(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const BigRat& c) {
    return RationalPolynomial(std::vector<BigRat>{c});
}

RationalPolynomial RationalPolynomial::from_integers(const std::vector<BigInt>& coeffs) {
    std::vector<BigRat> qs;
    qs.reserve(coeffs.size());
    for (const auto& c : coeffs) qs.emplace_back(c);
    return RationalPolynomial(std::move(qs));
}

BigRat RationalPolynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) return BigRat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

BigRat RationalPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? BigRat(0) : coeffs_.back();
}

BigRat RationalPolynomial::evaluate(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRat> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * BigRat(static_cast<long>(i)));
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::compose_affine(const BigRat& a, const BigRat& b) const {
    // Horner with the linear argument a + b*t
    RationalPolynomial acc;
    const RationalPolynomial arg(std::vector<BigRat>{a, b});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * arg + constant(*it);
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<BigRat> out(std::max(coeffs_.size(), o.coeffs_.size()), BigRat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    return *this + (-o);
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<BigRat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigRat> out(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const BigRat& c) const {
    std::vector<BigRat> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return RationalPolynomial(std::move(out));
}

PolyDivMod divmod(const RationalPolynomial& numerator, const RationalPolynomial& divisor) {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<BigRat> rem(numerator.coefficients());
    const int dd = divisor.degree();
    const BigRat lead = divisor.leading_coefficient();
    if (static_cast<int>(rem.size()) - 1 < dd) {
        return {RationalPolynomial{}, RationalPolynomial(std::move(rem))};
    }
    std::vector<BigRat> quot(rem.size() - static_cast<std::size_t>(dd), BigRat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        BigRat f = rem[static_cast<std::size_t>(i)] / lead;
        if (f == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coefficients()[static_cast<std::size_t>(j)];
        }
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

bool RationalPolynomial::integer_valued_on(Int lo, Int hi) const {
    for (Int x = lo; x <= hi; ++x) {
        BigRat v = evaluate(BigRat(x));
        if (v.get_den() != 1) return false;
    }
    return true;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRat& c = coeffs_[i];
        if (c == 0) continue;
        BigRat abs = c < 0 ? BigRat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs == 1;
        if (i == 0) {
            out << abs.get_str();
        } else {
            if (!unit) out << abs.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalPolynomial polynomial_gcd(RationalPolynomial a, RationalPolynomial b) {
    auto monic = [](const RationalPolynomial& p) {
        if (p.is_zero()) return p;
        return p * (BigRat(1) / p.leading_coefficient());
    };
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        RationalPolynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = monic(r);
    }
    return a;
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
    if (p.degree() == 0) return RationalPolynomial::constant(BigRat(1));
    RationalPolynomial g = polynomial_gcd(p, p.derivative());
    if (g.degree() == 0) {
        return p * (BigRat(1) / p.leading_coefficient());
    }
    return divmod(p, g).quotient * (BigRat(1) / p.leading_coefficient());
}

namespace {

int sign_at_plus_infinity(const RationalPolynomial& p) {
    return sgn(p.leading_coefficient());
}

int sign_at_minus_infinity(const RationalPolynomial& p) {
    int s = sgn(p.leading_coefficient());
    return p.degree() % 2 == 0 ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sturm_real_root_count(const RationalPolynomial& squarefree) {
    if (squarefree.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
    if (squarefree.degree() == 0) return 0;

    std::vector<RationalPolynomial> chain{squarefree, squarefree.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        const RationalPolynomial& s0 = chain[chain.size() - 2];
        const RationalPolynomial& s1 = chain.back();
        RationalPolynomial r = -(divmod(s0, s1).remainder);
        if (r.is_zero()) break;
        // positive rescaling keeps the sign pattern and the coefficients small
        BigRat lead = r.leading_coefficient();
        BigRat scale = lead < 0 ? BigRat(-lead) : lead;
        chain.push_back(r * (BigRat(1) / scale));
    }

    std::vector<int> at_minus;
    std::vector<int> at_plus;
    for (const auto& s : chain) {
        if (s.is_zero()) continue;
        at_minus.push_back(sign_at_minus_infinity(s));
        at_plus.push_back(sign_at_plus_infinity(s));
    }
    return sign_variations(at_minus) - sign_variations(at_plus);
}

} // namespace kostka
