#include "kostka/gt.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <utility>

namespace kostka {

namespace {

using Row = std::vector<Int>;

struct RowHash {
    std::size_t operator()(const Row& r) const {
        std::size_t h = 1469598103934665603ull;
        for (Int v : r) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using StateMap = std::unordered_map<Row, BigInt, RowHash>;

Row padded(const Partition& p, int ell) {
    Row r(static_cast<std::size_t>(ell), 0);
    for (int j = 0; j < ell; ++j) r[static_cast<std::size_t>(j)] = p.part(static_cast<std::size_t>(j));
    return r;
}

// Enumerates all rows v with lo[j] <= v[j] <= hi[j] and sum(v) = target,
// pruned by suffix bounds, and accumulates count into out[v].
void accumulate_rows(const Row& lo, const Row& hi, Int target, const BigInt& count, StateMap& out) {
    const int ell = static_cast<int>(lo.size());
    std::vector<Int> suffix_lo(static_cast<std::size_t>(ell) + 1, 0);
    std::vector<Int> suffix_hi(static_cast<std::size_t>(ell) + 1, 0);
    for (int j = ell - 1; j >= 0; --j) {
        if (lo[static_cast<std::size_t>(j)] > hi[static_cast<std::size_t>(j)]) return;
        suffix_lo[static_cast<std::size_t>(j)] = suffix_lo[static_cast<std::size_t>(j) + 1] + lo[static_cast<std::size_t>(j)];
        suffix_hi[static_cast<std::size_t>(j)] = suffix_hi[static_cast<std::size_t>(j) + 1] + hi[static_cast<std::size_t>(j)];
    }
    if (target < suffix_lo[0] || target > suffix_hi[0]) return;

    Row v(static_cast<std::size_t>(ell), 0);
    auto rec = [&](auto&& self, int j, Int rem) -> void {
        if (j == ell) {
            out[v] += count;
            return;
        }
        const Int rest_lo = suffix_lo[static_cast<std::size_t>(j) + 1];
        const Int rest_hi = suffix_hi[static_cast<std::size_t>(j) + 1];
        Int from = std::max(lo[static_cast<std::size_t>(j)], rem - rest_hi);
        Int to = std::min(hi[static_cast<std::size_t>(j)], rem - rest_lo);
        for (Int x = from; x <= to; ++x) {
            v[static_cast<std::size_t>(j)] = x;
            self(self, j + 1, rem - x);
        }
    };
    rec(rec, 0, target);
}

} // namespace

ChainSpec::ChainSpec(SkewShape shape, WeightVector weight)
    : shape_(std::move(shape)), weight_(weight.without_zeros()) {}

std::string ChainSpec::to_string() const {
    return shape_.to_string() + " w=" + weight_.to_string();
}

ChainSpec scale_spec(const ChainSpec& spec, Int n) {
    if (n < 1) throw Error("dilation must be positive");
    return spec.scaled(n);
}

BigInt kostka_number(const ChainSpec& spec) {
    if (spec.weight().total() != spec.shape().size()) return 0;
    const int ell = spec.rows();
    if (ell == 0) return 1;   // empty shape, empty weight

    const Row lam = padded(spec.shape().outer(), ell);
    const Row mu = padded(spec.shape().inner(), ell);

    StateMap cur;
    cur.emplace(mu, BigInt(1));
    for (int step = 0; step < spec.steps(); ++step) {
        const Int w = spec.weight().entry(static_cast<std::size_t>(step));
        StateMap next;
        next.reserve(cur.size() * 2);
        Row lo(static_cast<std::size_t>(ell), 0);
        Row hi(static_cast<std::size_t>(ell), 0);
        for (const auto& [alpha, count] : cur) {
            Int asum = 0;
            for (int j = 0; j < ell; ++j) {
                asum += alpha[static_cast<std::size_t>(j)];
                lo[static_cast<std::size_t>(j)] = alpha[static_cast<std::size_t>(j)];
                hi[static_cast<std::size_t>(j)] =
                    j == 0 ? lam[0] : std::min(lam[static_cast<std::size_t>(j)], alpha[static_cast<std::size_t>(j) - 1]);
            }
            accumulate_rows(lo, hi, asum + w, count, next);
        }
        cur = std::move(next);
        if (cur.empty()) return 0;
    }
    auto it = cur.find(lam);
    return it == cur.end() ? BigInt(0) : it->second;
}

ForcedEqualityMask::ForcedEqualityMask(int steps, int columns)
    : steps_(steps),
      columns_(columns),
      lower_(static_cast<std::size_t>(steps) * static_cast<std::size_t>(columns), false),
      upper_(static_cast<std::size_t>(steps) * static_cast<std::size_t>(columns), false),
      forced_(static_cast<std::size_t>(steps + 1) * static_cast<std::size_t>(columns)) {}

std::size_t ForcedEqualityMask::index(int i, int j) const {
    assert(i >= 1 && i <= steps_ && j >= 0 && j < columns_);
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(j);
}

std::optional<Int> ForcedEqualityMask::forced_value(int row, int j) const {
    assert(row >= 0 && row <= steps_ && j >= 0 && j < columns_);
    return forced_[static_cast<std::size_t>(row) * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(j)];
}

void ForcedEqualityMask::set_forced_value(int row, int j, Int v) {
    assert(row >= 0 && row <= steps_ && j >= 0 && j < columns_);
    forced_[static_cast<std::size_t>(row) * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(j)] = v;
}

DimensionResult gt_dimension(const ChainSpec& spec) {
    if (spec.weight().total() != spec.shape().size()) {
        throw SizeMismatch("weight total " + std::to_string(spec.weight().total()) +
                           " differs from shape size " + std::to_string(spec.shape().size()));
    }
    if (kostka_number(spec) == 0) {
        throw EmptyPolytope("no lattice points for " + spec.to_string());
    }

    const int ell = spec.rows();
    const int k = spec.steps();
    const Row lam = padded(spec.shape().outer(), ell);
    const Row mu = padded(spec.shape().inner(), ell);

    // prefix row sums |mu| + w_1 + ... + w_i
    std::vector<Int> row_sum(static_cast<std::size_t>(k) + 1, spec.shape().inner().size());
    for (int i = 1; i <= k; ++i) {
        row_sum[static_cast<std::size_t>(i)] =
            row_sum[static_cast<std::size_t>(i - 1)] + spec.weight().entry(static_cast<std::size_t>(i - 1));
    }

    std::vector<std::vector<std::optional<Int>>> pin(
        static_cast<std::size_t>(k) + 1, std::vector<std::optional<Int>>(static_cast<std::size_t>(ell)));
    for (int j = 0; j < ell; ++j) {
        pin[0][static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(j)];
        pin[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = lam[static_cast<std::size_t>(j)];
    }

    // Fixpoint of two rules: pin an entry when its pinned-neighbor interval
    // degenerates, or when it is the unique unpinned entry of its row.
    bool changed = ell > 0;
    while (changed) {
        changed = false;
        for (int i = 1; i < k; ++i) {
            for (int j = 0; j < ell; ++j) {
                if (pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
                std::optional<Int> lo;
                std::optional<Int> hi;
                auto raise = [&](const std::optional<Int>& b) {
                    if (b && (!lo || *b > *lo)) lo = *b;
                };
                auto lower = [&](const std::optional<Int>& b) {
                    if (b && (!hi || *b < *hi)) hi = *b;
                };
                raise(pin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
                if (j + 1 < ell) raise(pin[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j) + 1]);
                if (j >= 1) lower(pin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j) - 1]);
                lower(pin[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]);
                if (lo && hi && *lo == *hi) {
                    pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *lo;
                    changed = true;
                }
            }
        }
        for (int i = 1; i < k; ++i) {
            int unpinned = -1;
            int count = 0;
            Int pinned_sum = 0;
            for (int j = 0; j < ell; ++j) {
                const auto& p = pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (p) {
                    pinned_sum += *p;
                } else {
                    unpinned = j;
                    ++count;
                }
            }
            if (count == 1) {
                pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(unpinned)] =
                    row_sum[static_cast<std::size_t>(i)] - pinned_sum;
                changed = true;
            }
        }
    }

    int unpinned_total = 0;
    int rows_with_unpinned = 0;
    for (int i = 1; i < k; ++i) {
        int c = 0;
        for (int j = 0; j < ell; ++j) {
            if (!pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ++c;
        }
        unpinned_total += c;
        if (c > 0) ++rows_with_unpinned;
    }

    DimensionResult result;
    result.dimension = unpinned_total - rows_with_unpinned;
    result.mask = ForcedEqualityMask(k, ell);
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j < ell; ++j) {
            const auto& p = pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (p) result.mask.set_forced_value(i, j, *p);
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = 0; j < ell; ++j) {
            const auto& a = pin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const auto& below = pin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            if (a && below && *a == *below) result.mask.set_lower_tight(i, j);
            if (j >= 1) {
                const auto& diag = pin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j) - 1];
                if (a && diag && *a == *diag) result.mask.set_upper_tight(i, j);
            }
        }
    }
    return result;
}

BigInt strict_kostka(const ChainSpec& spec, const ForcedEqualityMask& mask, Int dilation) {
    if (dilation < 1) throw Error("dilation must be positive");
    if (spec.weight().total() != spec.shape().size()) return 0;
    const int ell = spec.rows();
    const int k = spec.steps();
    if (mask.steps() != k || mask.columns() != ell) {
        throw Error("mask shape does not match the chain spec");
    }
    if (ell == 0) return 1;

    const Row lam = padded(spec.shape().outer().scaled(dilation), ell);
    const Row mu = padded(spec.shape().inner().scaled(dilation), ell);

    StateMap cur;
    cur.emplace(mu, BigInt(1));
    Row lo(static_cast<std::size_t>(ell), 0);
    Row hi(static_cast<std::size_t>(ell), 0);
    for (int i = 1; i <= k; ++i) {
        const Int w = dilation * spec.weight().entry(static_cast<std::size_t>(i - 1));
        StateMap next;
        next.reserve(cur.size() * 2);
        for (const auto& [u, count] : cur) {
            Int usum = 0;
            for (Int x : u) usum += x;
            bool feasible = true;
            for (int j = 0; j < ell && feasible; ++j) {
                const Int below = u[static_cast<std::size_t>(j)];
                Int l = mask.lower_tight(i, j) ? below : below + 1;
                Int h = lam[static_cast<std::size_t>(j)];
                if (j >= 1) {
                    const Int diag = u[static_cast<std::size_t>(j) - 1];
                    h = std::min(h, mask.upper_tight(i, j) ? diag : diag - 1);
                    if (mask.upper_tight(i, j)) l = std::max(l, diag);
                }
                if (mask.lower_tight(i, j)) h = std::min(h, below);
                lo[static_cast<std::size_t>(j)] = l;
                hi[static_cast<std::size_t>(j)] = h;
                if (l > h) feasible = false;
            }
            if (!feasible) continue;
            accumulate_rows(lo, hi, usum + w, count, next);
        }
        cur = std::move(next);
        if (cur.empty()) return 0;
    }
    auto it = cur.find(lam);
    return it == cur.end() ? BigInt(0) : it->second;
}

GTEvaluator::GTEvaluator(ChainSpec spec) : spec_(std::move(spec)), dim_(gt_dimension(spec_)) {}

BigInt GTEvaluator::positive(Int n) const {
    return kostka_number(spec_.scaled(n));
}

BigInt GTEvaluator::interior(Int n) const {
    return strict_kostka(spec_, dim_.mask, n);
}

} // namespace kostka
