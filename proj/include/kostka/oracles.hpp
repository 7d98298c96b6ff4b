#pragma once

#include "kostka/bigint.hpp"
#include "kostka/gt.hpp"
#include "kostka/partition.hpp"
#include "kostka/poset.hpp"

#include <cstdint>
#include <vector>

namespace kostka::oracles {

// Deliberately simple and slow reference enumerations, independent of the
// engine's DP code paths. Shipped with the library so the CLI can expose
// --oracle cross-checks; every enumeration is budget-guarded and throws
// BudgetExceeded rather than running away.
struct OracleBudget {
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 0;   // 0 = no time cap
};

// SSYT count by backtracking over chains of partitions joined by
// horizontal strips.
BigInt enumerate_ssyt(const SkewShape& shape, const WeightVector& weight,
                      const OracleBudget& budget = {});

// Interior-point count by entrywise backtracking over the whole pattern
// with per-inequality strict/equality constraints from the mask.
BigInt enumerate_strict_patterns(const ChainSpec& spec, const ForcedEqualityMask& mask,
                                 Int dilation, const OracleBudget& budget = {});

// Order-preserving (or strictly order-preserving) maps P -> {1..k} by
// vertex-by-vertex backtracking.
BigInt enumerate_order_maps(const Poset& p, Int k, bool strict,
                            const OracleBudget& budget = {});

// All linear extensions as label words, lexicographic order.
std::vector<std::vector<int>> enumerate_linear_extensions(const Poset& p,
                                                          const OracleBudget& budget = {});

// Magic squares by full matrix enumeration with line-sum filters.
BigInt enumerate_magic_squares(int ell, Int t, bool positive,
                               const OracleBudget& budget = {});

} // namespace kostka::oracles
