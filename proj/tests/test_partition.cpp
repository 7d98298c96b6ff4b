#include "kostka/partition.hpp"

#include "kostka/errors.hpp"

#include <doctest.h>

using namespace kostka;

TEST_CASE("canonicalize strips zeros and validates") {
    CHECK(Partition::canonicalize({3, 2, 1, 0, 0}).parts() == std::vector<Int>{3, 2, 1});
    CHECK(Partition::canonicalize({0, 0}).parts().empty());
    CHECK(Partition::canonicalize({}).parts().empty());
    CHECK_THROWS_AS(Partition::canonicalize({2, 3, 1}), NotAPartition);
    CHECK_THROWS_AS(Partition::canonicalize({1, -1}), NotAPartition);
}

TEST_CASE("partition basics") {
    Partition p = Partition::canonicalize({4, 3, 1});
    CHECK(p.size() == 8);
    CHECK(p.length() == 3);
    CHECK(p.part(0) == 4);
    CHECK(p.part(5) == 0);
    CHECK(p.contains(Partition::canonicalize({3, 1})));
    CHECK_FALSE(p.contains(Partition::canonicalize({5})));
    CHECK_FALSE(Partition::canonicalize({2}).contains(Partition::canonicalize({1, 1})));
    CHECK(p.scaled(3).parts() == std::vector<Int>{12, 9, 3});
}

TEST_CASE("horizontal strips") {
    auto P = [](std::vector<Int> v) { return Partition::canonicalize(std::move(v)); };
    CHECK(is_horizontal_strip(P({2, 1}), P({3, 2})));
    CHECK_FALSE(is_horizontal_strip(P({1}), P({2, 2})));
    CHECK(is_horizontal_strip(P({2, 2}), P({2, 2})));
    CHECK(is_horizontal_strip(P({}), P({5})));
    CHECK_FALSE(is_horizontal_strip(P({3}), P({2})));   // not containing
}

TEST_CASE("horizontal strip means at most one new cell per column") {
    // direct cell enumeration cross-check on all pairs inside a 4x4 box
    std::vector<Partition> all;
    for (Int a = 0; a <= 4; ++a)
        for (Int b = 0; b <= a; ++b)
            for (Int c = 0; c <= b; ++c)
                for (Int d = 0; d <= c; ++d)
                    all.push_back(Partition::canonicalize({a, b, c, d}));
    for (const auto& alpha : all) {
        for (const auto& beta : all) {
            if (!beta.contains(alpha)) continue;
            bool one_per_column = true;
            for (Int col = 1; col <= beta.part(0); ++col) {
                int added = 0;
                for (std::size_t r = 0; r < beta.length(); ++r) {
                    if (beta.part(r) >= col && alpha.part(r) < col) ++added;
                }
                if (added > 1) one_per_column = false;
            }
            CHECK(is_horizontal_strip(alpha, beta) == one_per_column);
        }
    }
}

TEST_CASE("skew shape validation") {
    Partition outer = Partition::canonicalize({4, 3});
    Partition inner = Partition::canonicalize({2, 1});
    SkewShape s(outer, inner);
    CHECK(s.size() == 4);
    CHECK_THROWS_AS(SkewShape(inner, outer), InvalidSkewShape);
    CHECK(s.scaled(2).outer().parts() == std::vector<Int>{8, 6});
}

TEST_CASE("weight vectors") {
    WeightVector w({2, 0, 1});
    CHECK(w.total() == 3);
    CHECK(w.without_zeros().weights() == std::vector<Int>{2, 1});
    CHECK(w.scaled(3).weights() == std::vector<Int>{6, 0, 3});
    CHECK_THROWS_AS(WeightVector({1, -2}), Error);
}
