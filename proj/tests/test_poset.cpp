#include "kostka/poset.hpp"

#include "kostka/errors.hpp"
#include "kostka/oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace kostka;

namespace {

Partition P(std::vector<Int> v) { return Partition::canonicalize(std::move(v)); }

// Random naturally labeled poset: random increasing edges, then
// transitive reduction.
Poset random_natural_poset(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng)) rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] &&
                    rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)]) {
                    rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                }
            }
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            bool direct = true;
            for (int m = a + 1; m < b && direct; ++m) {
                if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] &&
                    rel[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)]) {
                    direct = false;
                }
            }
            if (direct) covers.emplace_back(a, b);
        }
    }
    return Poset::from_covers(n, std::move(covers));
}

} // namespace

TEST_CASE("poset construction and validation") {
    auto c3 = chain(3);
    CHECK(c3.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(antichain(3).covers().empty());
    CHECK(c3.less(0, 2));
    CHECK_FALSE(c3.less(2, 0));
    CHECK(c3.longest_chain() == 3);
    CHECK(antichain(5).longest_chain() == 1);

    CHECK_THROWS_AS(Poset::from_covers(3, {{1, 0}}), InvalidPoset);            // not natural
    CHECK_THROWS_AS(Poset::from_covers(3, {{0, 5}}), InvalidPoset);            // out of range
    CHECK_THROWS_AS(Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidPoset);   // redundant
    CHECK_THROWS_AS(Poset::from_covers(0, {}), InvalidPoset);
}

TEST_CASE("poset json round trip") {
    auto p = fence(6);
    auto q = Poset::from_json_string(p.to_json_string());
    CHECK(p == q);
    CHECK_THROWS_AS(Poset::from_json_string("{"), ParseError);
    CHECK_THROWS_AS(Poset::from_json_string("{\"n\": 2}"), ParseError);
}

TEST_CASE("permutation posets") {
    // single inversion kills the only relation
    CHECK(permutation_poset(Permutation({2, 1})) == antichain(2));
    CHECK(permutation_poset(Permutation({1, 2, 3})) == chain(3));
    // covers of P_w for w = 2,1,3: 0<2 and 1<2
    auto p = permutation_poset(Permutation({2, 1, 3}));
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
}

TEST_CASE("shape posets") {
    auto p = shape_poset(P({2, 2}));
    // cells 0 1 / 2 3
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(shape_poset(P({})), InvalidShape);
    CHECK(shape_poset(P({3})) == chain(3));
}

TEST_CASE("frontier widths") {
    CHECK(frontier_plan(chain(8)).width == 1);
    CHECK(frontier_plan(antichain(8)).width == 0);
    // natural labeling forces two live valleys around each peak
    CHECK(frontier_plan(fence(8)).width == 2);
    CHECK(frontier_plan(fence(20)).width == 2);
    for (auto lambda : {std::vector<Int>{4, 3, 2, 1}, std::vector<Int>{3, 3, 3}, std::vector<Int>{5, 2}}) {
        auto plan = frontier_plan(shape_poset(P(lambda)));
        CHECK(plan.width <= lambda[0]);
    }
}

TEST_CASE("order polynomial fixtures") {
    CHECK(order_polynomial(chain(3), 2) == 4);
    CHECK(order_polynomial(antichain(3), 2) == 8);
    CHECK(order_polynomial(chain(3), 0) == 0);
    CHECK(strict_order_polynomial(chain(3), 3) == 1);
    CHECK(strict_order_polynomial(chain(3), 2) == 0);
    for (Int m = 1; m <= 4; ++m) {
        CHECK(strict_order_polynomial(antichain(4), m) == m * m * m * m);
    }
}

TEST_CASE("order polynomials agree with the oracle") {
    std::mt19937_64 rng(12345);
    std::vector<Poset> fixtures{chain(5), antichain(5), fence(7), fence(8),
                                shape_poset(P({3, 2})), shape_poset(P({2, 2, 1}))};
    for (int i = 0; i < 6; ++i) fixtures.push_back(random_natural_poset(4 + i % 4, 0.35, rng));
    for (const auto& p : fixtures) {
        for (Int k = 0; k <= 5; ++k) {
            CHECK(order_polynomial(p, k) == oracles::enumerate_order_maps(p, k, false));
            CHECK(strict_order_polynomial(p, k) == oracles::enumerate_order_maps(p, k, true));
        }
    }
}

TEST_CASE("order polynomial is monotone and strict vanishes below the longest chain") {
    std::mt19937_64 rng(999);
    for (int t = 0; t < 8; ++t) {
        auto p = random_natural_poset(6, 0.3, rng);
        BigInt prev(-1);
        for (Int k = 0; k <= 6; ++k) {
            BigInt cur = order_polynomial(p, k);
            CHECK(cur >= prev);
            prev = cur;
        }
        for (Int m = 0; m < p.longest_chain(); ++m) {
            CHECK(strict_order_polynomial(p, m) == 0);
        }
        CHECK(strict_order_polynomial(p, p.longest_chain()) > 0);
    }
}

TEST_CASE("order polytope ehrhart of chains and antichains") {
    // chain: order simplex, L(t) = C(t+n, n)
    auto r = order_polytope_ehrhart(chain(4));
    for (Int t = 0; t <= 8; ++t) {
        CHECK(r.polynomial.evaluate(t) == BigRat(binomial(t + 4, 4)));
    }
    // antichain: unit cube, L(t) = (t+1)^n
    auto cube = order_polytope_ehrhart(antichain(3));
    for (Int t = 0; t <= 6; ++t) {
        CHECK(cube.polynomial.evaluate(t) == BigRat((t + 1) * (t + 1) * (t + 1)));
    }
}

TEST_CASE("order polytope reciprocity") {
    std::mt19937_64 rng(777);
    std::vector<Poset> fixtures{chain(4), antichain(4), fence(6), shape_poset(P({3, 2, 1}))};
    for (int i = 0; i < 4; ++i) fixtures.push_back(random_natural_poset(5 + i, 0.3, rng));
    for (const auto& p : fixtures) {
        const int n = p.size();
        auto r = order_polytope_ehrhart(p);
        for (Int k = 1; k <= n + 2; ++k) {
            BigRat lhs = r.polynomial.evaluate(-k);
            if (n % 2 != 0) lhs = -lhs;
            CHECK(lhs == BigRat(strict_order_polynomial(p, k - 1)));
        }
    }
}

TEST_CASE("linear extensions") {
    CHECK(count_linear_extensions(antichain(4)) == 24);
    CHECK(count_linear_extensions(chain(10)) == 1);
    CHECK(count_linear_extensions(shape_poset(P({4, 3, 2, 1}))) == 768);

    auto exts = oracles::enumerate_linear_extensions(antichain(3));
    CHECK(exts.size() == 6);
    CHECK(std::is_sorted(exts.begin(), exts.end()));
    CHECK(exts.front() == std::vector<int>{0, 1, 2});
}

TEST_CASE("hstar via linear extensions") {
    CHECK(hstar_via_linext(antichain(3)).entries() == std::vector<BigInt>{1, 4, 1, 0});
    auto h = hstar_via_linext(chain(5));
    CHECK(h.entry(0) == 1);
    CHECK(h.sum() == 1);
}

TEST_CASE("linext progress hook can cancel") {
    // antichain(9) has 362880 extensions; cancel after the first batch
    CHECK_THROWS_AS(
        hstar_via_linext(antichain(9), [](std::uint64_t seen) { return seen < 70000; }),
        Cancelled);
}

TEST_CASE("stanley cross check on fixture posets") {
    std::mt19937_64 rng(424242);
    std::vector<Poset> fixtures{chain(6), antichain(6), fence(7), fence(9),
                                shape_poset(P({3, 2, 1})), shape_poset(P({2, 2, 2})),
                                permutation_poset(Permutation({3, 1, 4, 2, 6, 5}))};
    for (int i = 0; i < 10; ++i) fixtures.push_back(random_natural_poset(5 + i % 5, 0.3, rng));
    for (const auto& p : fixtures) {
        auto via_linext = hstar_via_linext(p);
        auto via_ehrhart = hstar_from_ehrhart(order_polytope_ehrhart(p).polynomial);
        REQUIRE(via_ehrhart.length() == static_cast<std::size_t>(p.size()) + 1);
        CHECK(via_linext == via_ehrhart);
        CHECK(via_linext.sum() == count_linear_extensions(p));
    }
}

TEST_CASE("fence hstar matches the palindromic fixture") {
    auto h = hstar_via_linext(fence(10));
    CHECK(h.entries() == std::vector<BigInt>{1, 133, 2475, 12331, 20641, 12331, 2475, 133, 1, 0, 0});
    CHECK(is_palindromic(h));
}

TEST_CASE("search on a tiny base finds nothing") {
    auto result = search_nonrealrooted(Permutation::identity(4), 1, Permutation({4, 3, 2, 1}), 2);
    CHECK(result.findings.empty());
    CHECK(result.candidates == 7);   // identity + all 6 transpositions avoid 4321
}

TEST_CASE("search radius 0 finds the non-real-rooted base") {
    Permutation stembridge({2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16});
    auto result = search_nonrealrooted(stembridge, 0, Permutation({4, 3, 2, 1}), 1);
    CHECK(result.candidates == 1);
    REQUIRE(result.findings.size() == 1);
    const auto& f = result.findings.front();
    CHECK(f.perm == stembridge);
    CHECK(f.ultra_log_concave);
    std::vector<BigInt> expect{1, 32, 336, 1420, 2534, 1946, 658, 86, 3};
    expect.resize(18, BigInt(0));
    CHECK(f.hstar.entries() == expect);
}
