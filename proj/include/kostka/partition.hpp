#pragma once

#include "kostka/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kostka {

// Integer partition: weakly decreasing positive parts, canonical form.
class Partition {
public:
    Partition() = default;

    // Validates and strips zero parts. Throws NotAPartition if a positive
    // entry follows a smaller one after zero-stripping; inputs are never
    // silently sorted.
    static Partition canonicalize(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // 0-based part access, 0 beyond the last part.
    Int part(std::size_t j) const { return j < parts_.size() ? parts_[j] : 0; }

    Int size() const;

    // Componentwise containment: inner fits inside *this.
    bool contains(const Partition& inner) const;

    Partition scaled(Int n) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<Int> parts_;
};

// True iff alpha is contained in beta and beta/alpha has at most one cell
// per column, i.e. beta_{j+1} <= alpha_j for all j.
bool is_horizontal_strip(const Partition& alpha, const Partition& beta);

// Skew shape outer/inner with componentwise containment.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    Int size() const { return outer_.size() - inner_.size(); }

    SkewShape scaled(Int n) const { return SkewShape(outer_.scaled(n), inner_.scaled(n)); }

    bool operator==(const SkewShape&) const = default;

    std::string to_string() const;

private:
    Partition outer_;
    Partition inner_;
};

// Content vector (w_1, ..., w_k); entries nonnegative, zeros allowed.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Int> weights);

    const std::vector<Int>& weights() const { return weights_; }
    std::size_t length() const { return weights_.size(); }
    Int entry(std::size_t i) const { return weights_[i]; }

    Int total() const;

    WeightVector scaled(Int n) const;
    WeightVector without_zeros() const;

    bool operator==(const WeightVector&) const = default;

    std::string to_string() const;

private:
    std::vector<Int> weights_;
};

} // namespace kostka
