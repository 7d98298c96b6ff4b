#pragma once

#include <string>
#include <vector>

namespace kostka {

// Permutation of {1..n} in one-line notation. All I/O is 1-based.
class Permutation {
public:
    Permutation() = default;

    // Throws NotAPermutation unless the word is a bijection on {1..n}.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }

    // Value at 0-based position i.
    int operator[](int i) const { return word_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& one_line() const { return word_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> word_;
};

// True iff some subsequence of w is order-isomorphic to pattern.
bool contains_pattern(const Permutation& w, const Permutation& pattern);

// All permutations reachable from w by at most `radius` transpositions
// (position swaps), deduplicated and sorted lexicographically; w itself is
// included at radius 0.
std::vector<Permutation> transposition_neighborhood(const Permutation& w, int radius);

} // namespace kostka
