#pragma once

#include "kostka/bigint.hpp"
#include "kostka/ehrhart.hpp"
#include "kostka/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kostka {

// Chain-of-partitions description of GT(lambda/mu, w): k+1 partition rows
// alpha^(0) = mu, ..., alpha^(k) = lambda, each step adding a horizontal
// strip of size w_i. Zero weight entries are stripped on construction (a
// width-0 strip forces equality and contributes nothing).
class ChainSpec {
public:
    ChainSpec() = default;
    ChainSpec(SkewShape shape, WeightVector weight);

    const SkewShape& shape() const { return shape_; }
    const WeightVector& weight() const { return weight_; }

    // Number of columns tracked (parts of lambda).
    int rows() const { return static_cast<int>(shape_.outer().length()); }

    // Number of strip steps k.
    int steps() const { return static_cast<int>(weight_.length()); }

    ChainSpec scaled(Int n) const { return ChainSpec(shape_.scaled(n), weight_.scaled(n)); }

    bool operator==(const ChainSpec&) const = default;

    std::string to_string() const;

private:
    SkewShape shape_;
    WeightVector weight_;
};

// Per-inequality tightness flags for the interlacing constraints
//   alpha^(i-1)_j <= alpha^(i)_j <= alpha^(i-1)_{j-1},
// recorded at dilation 1 and valid for every dilation. Steps i are
// 1-based in {1..k}; columns j are 0-based in {0..ell-1}. The upper
// inequality exists only for j >= 1. forced_value covers all rows 0..k
// of the pattern (boundary rows are always pinned).
class ForcedEqualityMask {
public:
    ForcedEqualityMask() = default;
    ForcedEqualityMask(int steps, int columns);

    int steps() const { return steps_; }
    int columns() const { return columns_; }

    bool lower_tight(int i, int j) const { return lower_[index(i, j)]; }
    bool upper_tight(int i, int j) const { return upper_[index(i, j)]; }

    std::optional<Int> forced_value(int row, int j) const;

    void set_lower_tight(int i, int j) { lower_[index(i, j)] = true; }
    void set_upper_tight(int i, int j) { upper_[index(i, j)] = true; }
    void set_forced_value(int row, int j, Int v);

private:
    int steps_ = 0;
    int columns_ = 0;
    std::vector<bool> lower_;                    // (i-1)*columns + j
    std::vector<bool> upper_;
    std::vector<std::optional<Int>> forced_;     // row*columns + j, rows 0..k

    std::size_t index(int i, int j) const;
};

// K_{lambda/mu, w}: number of SSYT of the given shape and content, by the
// horizontal-strip DP. Returns 0 when the weight total does not match the
// shape size.
BigInt kostka_number(const ChainSpec& spec);

ChainSpec scale_spec(const ChainSpec& spec, Int n);

struct DimensionResult {
    int dimension = 0;
    ForcedEqualityMask mask;
};

// Dimension of GT(lambda/mu, w) by forced-value propagation, plus the
// discovered tightness mask. The returned dimension is an upper bound on
// the affine dimension by construction; interpolation must be followed by
// verify_polynomial to turn any under-detection into a hard failure.
// Throws SizeMismatch or EmptyPolytope.
DimensionResult gt_dimension(const ChainSpec& spec);

// Number of integer chain patterns for n*lambda / n*mu, weight n*w, where
// every interlacing inequality not flagged tight is strict and every
// flagged one is an equality. Equals the interior lattice-point count of
// the n-th dilate.
BigInt strict_kostka(const ChainSpec& spec, const ForcedEqualityMask& mask, Int dilation);

// Counting backend for the adaptive scheduler: positive(n) is a Kostka
// number of the scaled spec, interior(n) a strict Kostka number.
class GTEvaluator : public PointEvaluator {
public:
    explicit GTEvaluator(ChainSpec spec);

    int dimension() const override { return dim_.dimension; }
    BigInt positive(Int n) const override;
    BigInt interior(Int n) const override;

    const ChainSpec& spec() const { return spec_; }
    const ForcedEqualityMask& mask() const { return dim_.mask; }

private:
    ChainSpec spec_;
    DimensionResult dim_;
};

} // namespace kostka
