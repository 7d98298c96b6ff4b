#include "kostka/partition.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kostka {

namespace {

std::string join(const std::vector<Int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    return out.str();
}

} // namespace

Partition Partition::canonicalize(std::vector<Int> parts) {
    std::vector<Int> kept;
    kept.reserve(parts.size());
    for (Int p : parts) {
        if (p < 0) throw NotAPartition("negative part in partition input");
        if (p > 0) kept.push_back(p);
    }
    for (std::size_t i = 1; i < kept.size(); ++i) {
        if (kept[i] > kept[i - 1]) {
            throw NotAPartition("partition entries must be weakly decreasing, got " + join(kept));
        }
    }
    Partition out;
    out.parts_ = std::move(kept);
    return out;
}

Int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int(0));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) {
        // extra inner parts must be zero, which canonical form excludes
        return false;
    }
    for (std::size_t j = 0; j < inner.length(); ++j) {
        if (inner.parts_[j] > parts_[j]) return false;
    }
    return true;
}

Partition Partition::scaled(Int n) const {
    Partition out;
    out.parts_.reserve(parts_.size());
    for (Int p : parts_) out.parts_.push_back(p * n);
    return out;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    return "(" + join(parts_) + ")";
}

bool is_horizontal_strip(const Partition& alpha, const Partition& beta) {
    if (!beta.contains(alpha)) return false;
    for (std::size_t j = 0; beta.part(j + 1) > 0; ++j) {
        if (beta.part(j + 1) > alpha.part(j)) return false;
    }
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
        throw InvalidSkewShape("inner shape " + inner_.to_string() +
                               " is not contained in outer shape " + outer_.to_string());
    }
}

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

WeightVector::WeightVector(std::vector<Int> weights) : weights_(std::move(weights)) {
    for (Int w : weights_) {
        if (w < 0) throw Error("weight entries must be nonnegative");
    }
}

Int WeightVector::total() const {
    return std::accumulate(weights_.begin(), weights_.end(), Int(0));
}

WeightVector WeightVector::scaled(Int n) const {
    std::vector<Int> out;
    out.reserve(weights_.size());
    for (Int w : weights_) out.push_back(w * n);
    return WeightVector(std::move(out));
}

WeightVector WeightVector::without_zeros() const {
    std::vector<Int> out;
    out.reserve(weights_.size());
    for (Int w : weights_) {
        if (w > 0) out.push_back(w);
    }
    return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
    return "(" + join(weights_) + ")";
}

} // namespace kostka
