#include "kostka/oracles.hpp"

#include "kostka/errors.hpp"

#include <doctest.h>

using namespace kostka;

namespace {

Partition P(std::vector<Int> v) { return Partition::canonicalize(std::move(v)); }

} // namespace

TEST_CASE("ssyt oracle fixtures") {
    CHECK(oracles::enumerate_ssyt(SkewShape(P({2, 1})), WeightVector({1, 1, 1})) == 2);
    CHECK(oracles::enumerate_ssyt(SkewShape(P({2, 2})), WeightVector({2, 2})) == 1);
    CHECK(oracles::enumerate_ssyt(SkewShape(P({1}), P({1})), WeightVector(std::vector<Int>{})) == 1);
    CHECK(oracles::enumerate_ssyt(SkewShape(P({3, 2, 1})), WeightVector({1, 1, 1, 1, 1, 1})) == 16);
    CHECK(oracles::enumerate_ssyt(SkewShape(P({2})), WeightVector({1})) == 0);   // size mismatch
}

TEST_CASE("order map oracle fixtures") {
    CHECK(oracles::enumerate_order_maps(chain(3), 2, false) == 4);
    CHECK(oracles::enumerate_order_maps(antichain(3), 2, false) == 8);
    CHECK(oracles::enumerate_order_maps(chain(3), 3, true) == 1);
    CHECK(oracles::enumerate_order_maps(chain(3), 0, false) == 0);
}

TEST_CASE("magic square oracle fixtures") {
    CHECK(oracles::enumerate_magic_squares(3, 1, false) == 6);
    CHECK(oracles::enumerate_magic_squares(3, 3, true) == 1);
    CHECK(oracles::enumerate_magic_squares(3, 2, false) == 21);
    CHECK(oracles::enumerate_magic_squares(2, 0, false) == 1);
}

TEST_CASE("budgets abort cleanly") {
    oracles::OracleBudget tiny;
    tiny.max_nodes = 10;
    CHECK_THROWS_AS(oracles::enumerate_ssyt(SkewShape(P({4, 3, 2, 1})),
                                            WeightVector(std::vector<Int>(10, 1)), tiny),
                    BudgetExceeded);
    CHECK_THROWS_AS(oracles::enumerate_magic_squares(4, 4, false, tiny), BudgetExceeded);
    CHECK_THROWS_AS(oracles::enumerate_order_maps(antichain(8), 8, false, tiny), BudgetExceeded);
}
