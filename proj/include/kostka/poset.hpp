#pragma once

#include "kostka/bigint.hpp"
#include "kostka/ehrhart.hpp"
#include "kostka/partition.hpp"
#include "kostka/permutation.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace kostka {

// Finite naturally labeled poset on {0..n-1}: every cover (a, b) with
// a covered by b satisfies a < b as integers. Covers are irredundant.
class Poset {
public:
    Poset() = default;

    // Validates label range, natural labeling, and irredundancy.
    static Poset from_covers(int n, std::vector<std::pair<int, int>> covers);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& lower_covers(int v) const { return lower_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& upper_covers(int v) const { return upper_[static_cast<std::size_t>(v)]; }

    // Full order relation a <_P b.
    bool less(int a, int b) const;

    // Length (number of elements) of the longest chain.
    int longest_chain() const;

    bool operator==(const Poset&) const = default;

    std::string to_json_string() const;
    static Poset from_json_string(const std::string& text);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::vector<int>> upper_;
    std::vector<std::vector<bool>> below_;   // below_[a][b] = a <_P b
};

Poset chain(int n);
Poset antichain(int n);

// Zigzag v0 < p0 > v1 < p1 > ... relabeled naturally (valleys and peaks
// interleaved so the frontier stays small); the underlying unlabeled poset
// is the usual fence.
Poset fence(int n);

// Cells of the Young diagram ordered componentwise, labeled in row-reading
// order (a natural labeling).
Poset shape_poset(const Partition& lambda);

// i <_P j iff i < j and w_i < w_j, relabeled to 0-based.
Poset permutation_poset(const Permutation& w);

// Label-order processing schedule: a vertex is live from the step it is
// processed until its last upper cover is processed; maximal vertices are
// collapsed into multipliers and never enter the state.
struct FrontierPlan {
    std::vector<int> death;   // step at which the vertex leaves the state; -1 for maximal vertices
    int width = 0;            // max number of simultaneously live vertices
};

FrontierPlan frontier_plan(const Poset& p);

// Omega(P, k): order-preserving maps P -> {1..k}, by the frontier DP.
BigInt order_polynomial(const Poset& p, Int k);

// Strict order-preserving maps P -> {1..m}.
BigInt strict_order_polynomial(const Poset& p, Int m);

// Evaluator for the order polytope O(P): dimension n, positive(t) =
// Omega(P, t+1), interior(t) = strict maps into {1..t-1}.
class OrderPolytopeEvaluator : public PointEvaluator {
public:
    explicit OrderPolytopeEvaluator(Poset p) : poset_(std::move(p)) {}

    int dimension() const override { return poset_.size(); }
    BigInt positive(Int n) const override { return order_polynomial(poset_, n + 1); }
    BigInt interior(Int n) const override { return n <= 1 ? BigInt(0) : strict_order_polynomial(poset_, n - 1); }

private:
    Poset poset_;
};

struct OrderEhrhartResult {
    RationalPolynomial polynomial;
    std::vector<EvaluationPoint> transcript;
};

// Adaptive Ehrhart computation for O(P), verified before returning.
// Throws VerificationError if the cross-check fails.
OrderEhrhartResult order_polytope_ehrhart(const Poset& p);

// Called periodically with the number of linear extensions seen so far;
// return false to cancel (the enumeration throws Cancelled).
using LinextProgress = std::function<bool(std::uint64_t)>;

// Descent histogram over all linear extensions, streamed in lexicographic
// order with O(n) memory; length n+1.
HStarVector hstar_via_linext(const Poset& p, const LinextProgress& progress = {});

BigInt count_linear_extensions(const Poset& p, const LinextProgress& progress = {});

// Streams extensions as label words in lexicographic order.
void for_each_linear_extension(const Poset& p,
                               const std::function<void(const std::vector<int>&)>& fn,
                               const LinextProgress& progress = {});

struct SearchFinding {
    Permutation perm;
    HStarVector hstar;
    bool log_concave = false;
    bool ultra_log_concave = false;
};

struct SearchResult {
    std::size_t candidates = 0;               // neighborhood members avoiding the pattern
    std::vector<SearchFinding> findings;      // non-real-rooted, lexicographic by permutation
};

// Called with (processed, total) candidate counts; return false to cancel
// (the search throws Cancelled).
using SearchProgress = std::function<bool(std::size_t, std::size_t)>;

// Enumerates the transposition neighborhood of base, keeps permutations
// avoiding `avoid`, computes each permutation poset's h* via the
// reciprocity path, and returns the non-real-rooted ones.
SearchResult search_nonrealrooted(const Permutation& base, int radius, const Permutation& avoid,
                                  int jobs = 1, const SearchProgress& progress = {});

} // namespace kostka
