#include "kostka/birkhoff.hpp"

#include "kostka/errors.hpp"
#include "kostka/oracles.hpp"

#include <doctest.h>

using namespace kostka;

TEST_CASE("magic square counts") {
    CHECK(magic_square_count(3, 1) == 6);
    CHECK(magic_square_count(3, 2) == 21);
    CHECK(magic_square_count(1, 5) == 1);
    CHECK(magic_square_count(4, 0) == 1);
    CHECK(magic_square_count(2, 3) == 4);   // H_2(t) = t+1
    for (int ell = 1; ell <= 6; ++ell) {
        CHECK(magic_square_count(ell, 1) == factorial(static_cast<unsigned long>(ell)));
    }
}

TEST_CASE("magic squares agree with the enumeration oracle") {
    for (int ell = 1; ell <= 3; ++ell) {
        for (Int t = 0; t <= 4; ++t) {
            CHECK(magic_square_count(ell, t) == oracles::enumerate_magic_squares(ell, t, false));
        }
    }
    CHECK(magic_square_count(4, 2) == oracles::enumerate_magic_squares(4, 2, false));
}

TEST_CASE("interior counts") {
    for (Int t = 1; t <= 3; ++t) {
        CHECK(birkhoff_interior_count(4, t) == 0);
    }
    CHECK(birkhoff_interior_count(3, 3) == 1);
    CHECK(birkhoff_interior_count(3, 4) == magic_square_count(3, 1));
    for (Int t = 3; t <= 5; ++t) {
        CHECK(birkhoff_interior_count(3, t) == oracles::enumerate_magic_squares(3, t, true));
    }
}

TEST_CASE("birkhoff ehrhart small cases") {
    CHECK(birkhoff_ehrhart(1).polynomial == RationalPolynomial::constant(BigRat(1)));
    auto b2 = birkhoff_ehrhart(2);
    CHECK(b2.polynomial == RationalPolynomial(std::vector<BigRat>{BigRat(1), BigRat(1)}));

    auto b3 = birkhoff_ehrhart(3);
    CHECK(b3.polynomial.degree() == 4);
    CHECK(b3.polynomial.evaluate(1) == 6);
    CHECK(b3.polynomial.evaluate(2) == 21);
    CHECK(b3.polynomial.evaluate(-1) == 0);
    CHECK(b3.polynomial.evaluate(-2) == 0);
}

TEST_CASE("birkhoff ehrhart matches counts and reciprocity") {
    for (int ell = 3; ell <= 4; ++ell) {
        auto r = birkhoff_ehrhart(ell);
        const int d = (ell - 1) * (ell - 1);
        CHECK(r.polynomial.degree() == d);
        CHECK(static_cast<int>(r.transcript.size()) == d + 1);
        const Int m = static_cast<Int>(ell - 1) * (ell - 2) / 2;
        for (Int t = 0; t <= m + 1; ++t) {
            CHECK(r.polynomial.evaluate(t) == BigRat(magic_square_count(ell, t)));
        }
        for (Int t = 1; t <= ell + 1; ++t) {
            BigRat lhs = r.polynomial.evaluate(-t);
            if (d % 2 != 0) lhs = -lhs;
            CHECK(lhs == BigRat(birkhoff_interior_count(ell, t)));
        }
    }
}

TEST_CASE("birkhoff symmetry as a polynomial identity") {
    for (int ell = 2; ell <= 4; ++ell) {
        auto r = birkhoff_ehrhart(ell);
        auto mirrored = r.polynomial.compose_affine(BigRat(-ell), BigRat(-1));
        auto rhs = (ell - 1) % 2 == 0 ? r.polynomial : -r.polynomial;
        CHECK(mirrored == rhs);
    }
}

TEST_CASE("birkhoff guard rails") {
    CHECK_THROWS_AS(birkhoff_ehrhart(7), ResourceGuard);
    CHECK_THROWS_AS(birkhoff_ehrhart(0), Error);
    CHECK_THROWS_AS(magic_square_count(2, -1), Error);
}
