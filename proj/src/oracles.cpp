#include "kostka/oracles.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace kostka::oracles {

namespace {

class BudgetMeter {
public:
    explicit BudgetMeter(const OracleBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.max_nodes) {
            throw BudgetExceeded("oracle enumeration exceeded " +
                                 std::to_string(budget_.max_nodes) + " nodes");
        }
        if (budget_.max_seconds > 0 && (nodes_ & 0xfff) == 0) {
            const auto elapsed = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start_).count();
            if (elapsed > budget_.max_seconds) {
                throw BudgetExceeded("oracle enumeration exceeded time budget");
            }
        }
    }

private:
    OracleBudget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// All partitions of `size` that fit inside `bound`, by direct recursive
// generation in weakly decreasing order.
void partitions_inside(const Partition& bound, Int size, BudgetMeter& meter,
                       std::vector<Int>& prefix, const std::function<void(const Partition&)>& fn) {
    meter.tick();
    if (size == 0) {
        fn(Partition::canonicalize(prefix));
        return;
    }
    const std::size_t j = prefix.size();
    if (j >= bound.length()) return;
    Int cap = std::min<Int>(bound.part(j), size);
    if (!prefix.empty()) cap = std::min(cap, prefix.back());
    for (Int x = cap; x >= 1; --x) {
        prefix.push_back(x);
        partitions_inside(bound, size - x, meter, prefix, fn);
        prefix.pop_back();
    }
}

} // namespace

BigInt enumerate_ssyt(const SkewShape& shape, const WeightVector& weight,
                      const OracleBudget& budget) {
    if (weight.total() != shape.size()) return 0;
    BudgetMeter meter(budget);
    const WeightVector w = weight.without_zeros();

    BigInt total(0);
    auto rec = [&](auto&& self, const Partition& alpha, std::size_t step) -> void {
        if (step == w.length()) {
            if (alpha == shape.outer()) total += 1;
            return;
        }
        std::vector<Int> prefix;
        partitions_inside(shape.outer(), alpha.size() + w.entry(step), meter, prefix,
                          [&](const Partition& beta) {
                              if (is_horizontal_strip(alpha, beta)) self(self, beta, step + 1);
                          });
    };
    rec(rec, shape.inner(), 0);
    return total;
}

BigInt enumerate_strict_patterns(const ChainSpec& spec, const ForcedEqualityMask& mask,
                                 Int dilation, const OracleBudget& budget) {
    if (spec.weight().total() != spec.shape().size()) return 0;
    const int ell = spec.rows();
    const int k = spec.steps();
    if (ell == 0) return 1;
    BudgetMeter meter(budget);

    const Partition lam = spec.shape().outer().scaled(dilation);
    const Partition mu = spec.shape().inner().scaled(dilation);

    std::vector<Int> row_sum(static_cast<std::size_t>(k) + 1, mu.size());
    for (int i = 1; i <= k; ++i) {
        row_sum[static_cast<std::size_t>(i)] = row_sum[static_cast<std::size_t>(i - 1)] +
                                               dilation * spec.weight().entry(static_cast<std::size_t>(i - 1));
    }

    // pattern[i][j], rows 0..k; boundary rows fixed
    std::vector<std::vector<Int>> pattern(static_cast<std::size_t>(k) + 1,
                                          std::vector<Int>(static_cast<std::size_t>(ell), 0));
    for (int j = 0; j < ell; ++j) {
        pattern[0][static_cast<std::size_t>(j)] = mu.part(static_cast<std::size_t>(j));
        pattern[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = lam.part(static_cast<std::size_t>(j));
    }

    // entrywise constraint check for row i against row i-1
    auto entry_range = [&](int i, int j, Int& lo, Int& hi) {
        const Int below = pattern[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        lo = mask.lower_tight(i, j) ? below : below + 1;
        hi = lam.part(static_cast<std::size_t>(j));
        if (mask.lower_tight(i, j)) hi = std::min(hi, below);
        if (j >= 1) {
            const Int diag = pattern[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j) - 1];
            hi = std::min(hi, mask.upper_tight(i, j) ? diag : diag - 1);
            if (mask.upper_tight(i, j)) lo = std::max(lo, diag);
        }
    };

    BigInt total(0);
    auto rec = [&](auto&& self, int i, int j, Int partial) -> void {
        meter.tick();
        if (i == k) {
            // final row is fixed; check its constraints against row k-1
            for (int jj = 0; jj < ell; ++jj) {
                Int lo, hi;
                entry_range(k, jj, lo, hi);
                const Int v = pattern[static_cast<std::size_t>(k)][static_cast<std::size_t>(jj)];
                if (v < lo || v > hi) return;
            }
            total += 1;
            return;
        }
        if (j == ell) {
            if (partial != row_sum[static_cast<std::size_t>(i)]) return;
            self(self, i + 1, 0, 0);
            return;
        }
        Int lo, hi;
        entry_range(i, j, lo, hi);
        for (Int x = lo; x <= hi; ++x) {
            if (partial + x > row_sum[static_cast<std::size_t>(i)]) break;
            pattern[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
            self(self, i, j + 1, partial + x);
        }
    };
    rec(rec, 1, 0, 0);
    return total;
}

BigInt enumerate_order_maps(const Poset& p, Int k, bool strict, const OracleBudget& budget) {
    if (k <= 0) return 0;
    BudgetMeter meter(budget);
    const int n = p.size();
    std::vector<Int> value(static_cast<std::size_t>(n), 0);

    BigInt total(0);
    auto rec = [&](auto&& self, int v) -> void {
        meter.tick();
        if (v == n) {
            total += 1;
            return;
        }
        for (Int x = 1; x <= k; ++x) {
            bool ok = true;
            for (int u : p.lower_covers(v)) {
                const Int below = value[static_cast<std::size_t>(u)];
                if (strict ? below >= x : below > x) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            value[static_cast<std::size_t>(v)] = x;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return total;
}

std::vector<std::vector<int>> enumerate_linear_extensions(const Poset& p,
                                                          const OracleBudget& budget) {
    BudgetMeter meter(budget);
    std::vector<std::vector<int>> out;
    for_each_linear_extension(p, [&](const std::vector<int>& word) {
        meter.tick();
        out.push_back(word);
    });
    return out;
}

BigInt enumerate_magic_squares(int ell, Int t, bool positive, const OracleBudget& budget) {
    if (ell < 1) throw Error("side length must be at least 1");
    if (t < 0) throw Error("line sum must be nonnegative");
    BudgetMeter meter(budget);

    std::vector<Int> colsum(static_cast<std::size_t>(ell), 0);
    const Int lo = positive ? 1 : 0;

    BigInt total(0);
    // cell-by-cell enumeration in row-major order
    auto rec = [&](auto&& self, int r, int c, Int rowpartial) -> void {
        meter.tick();
        if (r == ell) {
            for (Int s : colsum) {
                if (s != t) return;
            }
            total += 1;
            return;
        }
        if (c == ell) {
            if (rowpartial != t) return;
            self(self, r + 1, 0, 0);
            return;
        }
        for (Int x = lo; x <= t - rowpartial; ++x) {
            if (colsum[static_cast<std::size_t>(c)] + x > t) break;
            colsum[static_cast<std::size_t>(c)] += x;
            self(self, r, c + 1, rowpartial + x);
            colsum[static_cast<std::size_t>(c)] -= x;
        }
    };
    rec(rec, 0, 0, 0);
    return total;
}

} // namespace kostka::oracles
