#include "kostka/permutation.hpp"

#include "kostka/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kostka;

namespace {

// Reference pattern containment: try every position subset.
bool contains_brute(const Permutation& w, const Permutation& pat) {
    const int n = w.size();
    const int m = pat.size();
    if (m > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int depth, int start) -> bool {
        if (depth == m) {
            for (int a = 0; a < m; ++a) {
                for (int b = a + 1; b < m; ++b) {
                    if ((pat[a] < pat[b]) != (w[idx[static_cast<std::size_t>(a)]] < w[idx[static_cast<std::size_t>(b)]])) {
                        return false;
                    }
                }
            }
            return true;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            if (self(self, depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation({1, 1}), NotAPermutation);
    CHECK_THROWS_AS(Permutation({0, 1}), NotAPermutation);
    CHECK_THROWS_AS(Permutation({3, 1}), NotAPermutation);
    CHECK(Permutation::identity(4).one_line() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("pattern containment fixtures") {
    Permutation stembridge({2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16});
    Permutation with321({3, 4, 6, 8, 10, 12, 2, 1, 15, 5, 17, 7, 9, 11, 13, 14, 16});
    Permutation p321({3, 2, 1});
    CHECK_FALSE(contains_pattern(stembridge, p321));
    CHECK(contains_pattern(with321, p321));
    CHECK_FALSE(contains_pattern(Permutation({1, 2, 3}), Permutation({2, 1})));
    CHECK_FALSE(contains_pattern(with321, Permutation({4, 3, 2, 1})));
}

TEST_CASE("pattern containment agrees with brute force") {
    std::vector<Permutation> patterns;
    {
        std::vector<int> p3{1, 2, 3};
        do patterns.push_back(Permutation(p3));
        while (std::next_permutation(p3.begin(), p3.end()));
        std::vector<int> p4{1, 2, 3, 4};
        do patterns.push_back(Permutation(p4));
        while (std::next_permutation(p4.begin(), p4.end()));
    }
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        do {
            Permutation perm(w);
            for (const auto& pat : patterns) {
                CHECK(contains_pattern(perm, pat) == contains_brute(perm, pat));
            }
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("transposition neighborhood basics") {
    Permutation id2({1, 2});
    auto r0 = transposition_neighborhood(id2, 0);
    CHECK(r0 == std::vector<Permutation>{id2});
    auto r1 = transposition_neighborhood(id2, 1);
    CHECK(r1.size() == 2);
    CHECK(std::is_sorted(r1.begin(), r1.end()));

    // S_4 at radius >= 3: every permutation is reachable
    auto full = transposition_neighborhood(Permutation::identity(4), 3);
    CHECK(full.size() == 24);
}

TEST_CASE("neighborhoods are nested and valid") {
    Permutation w({3, 1, 4, 2, 5});
    auto smaller = transposition_neighborhood(w, 1);
    auto larger = transposition_neighborhood(w, 2);
    std::set<Permutation> big(larger.begin(), larger.end());
    for (const auto& u : smaller) CHECK(big.count(u) == 1);
    CHECK(smaller.size() < larger.size());
}
