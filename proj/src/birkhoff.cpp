#include "kostka/birkhoff.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace kostka {

namespace {

using Cols = std::vector<Int>;   // remaining column sums, sorted descending

// Adds to `out` every way of subtracting a composition of t (bounded by
// the remaining column sums) from cols; keys are re-sorted, which is valid
// because row transitions are symmetric in the columns.
void add_row_transitions(const Cols& cols, Int t, const BigInt& count, std::map<Cols, BigInt>& out) {
    const int ell = static_cast<int>(cols.size());
    std::vector<Int> suffix(static_cast<std::size_t>(ell) + 1, 0);
    for (int j = ell - 1; j >= 0; --j) {
        suffix[static_cast<std::size_t>(j)] = suffix[static_cast<std::size_t>(j) + 1] + cols[static_cast<std::size_t>(j)];
    }
    Cols next(cols);
    auto rec = [&](auto&& self, int j, Int rem) -> void {
        if (j == ell) {
            Cols key(next);
            std::sort(key.begin(), key.end(), std::greater<Int>());
            out[key] += count;
            return;
        }
        const Int cap = cols[static_cast<std::size_t>(j)];
        const Int rest = suffix[static_cast<std::size_t>(j) + 1];
        Int from = std::max<Int>(0, rem - rest);
        Int to = std::min(cap, rem);
        for (Int x = from; x <= to; ++x) {
            next[static_cast<std::size_t>(j)] = cap - x;
            self(self, j + 1, rem - x);
        }
    };
    rec(rec, 0, t);
}

} // namespace

BigInt magic_square_count(int ell, Int t) {
    if (ell < 1) throw Error("side length must be at least 1");
    if (t < 0) throw Error("line sum must be nonnegative");
    if (t == 0) return 1;
    if (ell == 1) return 1;

    std::map<Cols, BigInt> states;
    states.emplace(Cols(static_cast<std::size_t>(ell), t), BigInt(1));
    // ell-1 row placements; whatever column sums remain form the last row
    for (int row = 0; row + 1 < ell; ++row) {
        std::map<Cols, BigInt> next;
        for (const auto& [cols, count] : states) {
            add_row_transitions(cols, t, count, next);
        }
        states = std::move(next);
    }
    BigInt total(0);
    for (const auto& [cols, count] : states) total += count;
    return total;
}

BigInt birkhoff_interior_count(int ell, Int t) {
    if (ell < 1) throw Error("side length must be at least 1");
    if (t < 1) throw Error("dilation must be positive");
    if (t < ell) return 0;
    return magic_square_count(ell, t - ell);
}

BirkhoffResult birkhoff_ehrhart(int ell) {
    if (ell < 1) throw Error("side length must be at least 1");
    if (ell >= 7) {
        throw ResourceGuard("B_" + std::to_string(ell) +
                            " is beyond the practical range of this method (ell <= 6)");
    }

    const int d = (ell - 1) * (ell - 1);
    const Int m = static_cast<Int>(ell - 1) * (ell - 2) / 2;
    const int sign = (ell - 1) % 2 == 0 ? 1 : -1;

    std::vector<BigInt> values(static_cast<std::size_t>(m) + 1);   // H(0..m)
    values[0] = 1;
    for (Int t = 1; t <= m; ++t) values[static_cast<std::size_t>(t)] = magic_square_count(ell, t);

    std::vector<EvaluationPoint> assembled;
    assembled.push_back({0, BigInt(1)});
    for (Int x = 1; x < ell; ++x) assembled.push_back({-x, BigInt(0)});
    for (Int t = 1; t <= m; ++t) assembled.push_back({t, values[static_cast<std::size_t>(t)]});
    for (Int t = 0; t <= m; ++t) {
        BigInt v = values[static_cast<std::size_t>(t)];
        assembled.push_back({-ell - t, sign > 0 ? v : BigInt(-v)});
    }

    std::vector<EvaluationPoint> points(assembled.begin(),
                                        assembled.begin() + std::min<std::size_t>(assembled.size(),
                                                                                  static_cast<std::size_t>(d) + 1));
    RationalPolynomial poly = lagrange_interpolate(points);

    // leftover assembled points are free cross-checks
    for (std::size_t i = points.size(); i < assembled.size(); ++i) {
        if (poly.evaluate(assembled[i].x) != BigRat(assembled[i].value)) {
            throw VerificationError("Birkhoff polynomial disagrees with mirror point at x = " +
                                    std::to_string(assembled[i].x));
        }
    }
    // one extra positive value
    BigInt extra = magic_square_count(ell, m + 1);
    if (poly.evaluate(m + 1) != BigRat(extra)) {
        throw VerificationError("Birkhoff polynomial disagrees with H(" + std::to_string(m + 1) + ")");
    }
    return {std::move(poly), std::move(points)};
}

} // namespace kostka
