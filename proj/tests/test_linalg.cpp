#include "doctest.h"

#include <random>

#include "aifs/linalg.hpp"
#include "helpers.hpp"

using namespace aifs;

TEST_CASE("rational parsing and normal form") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse(" -3 / 6 ").str() == "-1/2");
    CHECK(Rational::parse("0.4999") == Rational(4999, 10000));
    CHECK(Rational(6, -4).den() == 2);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK(Rational(-1, 3).frac() == Rational(2, 3));
    CHECK(rationalize(0.333333333333, 100) == Rational(1, 3));
}

TEST_CASE("inverse and transpose") {
    IntMatrix R({{2, 1}, {0, 2}});
    RationalMatrix inv = inverse(R);
    CHECK(inv(0, 0) == Rational(1, 2));
    CHECK(inv(0, 1) == Rational(-1, 4));
    CHECK(inv(1, 0) == Rational(0));
    CHECK(inv(1, 1) == Rational(1, 2));
    CHECK(transpose(R) == IntMatrix({{2, 0}, {1, 2}}));
    CHECK(inverse(IntMatrix::scalar(1, 4))(0, 0) == Rational(1, 4));
    CHECK_THROWS_AS(inverse(IntMatrix({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("expansivity") {
    CHECK(check_expansive(IntMatrix::scalar(2, 2)));
    CHECK(check_expansive(IntMatrix({{2, 1}, {0, 2}})));
    CHECK_FALSE(check_expansive(IntMatrix({{1, 0}, {0, 2}})));
    CHECK(classify_expansive(IntMatrix({{1, 0}, {0, 2}})) == Expansivity::borderline);
    CHECK(classify_expansive(IntMatrix({{0, 0}, {0, 2}})) == Expansivity::not_expansive);
    try {
        ExpansiveIntMatrix(IntMatrix({{1, 0}, {0, 2}})).require_expansive();
        FAIL("expected borderline");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::borderline);
    }
}

TEST_CASE("property: M * inverse(M) = I, transpose involution, expansivity of transpose") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> U(-4, 4);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t d = 1 + trial % 3;
        IntMatrix M(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                M(i, j) = U(rng);
        CHECK(transpose(transpose(M)) == M);
        if (M.determinant() == 0)
            continue;
        CHECK(RationalMatrix(M) * inverse(M) == RationalMatrix::identity(d));
        CHECK(check_expansive(M) == check_expansive(transpose(M)));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("power_norm_sum bounds the tail of inverse powers") {
    DMatrix Sinv = to_dmatrix(IntMatrix::scalar(1, 4));
    Sinv[0][0] = 0.25;
    double A = power_norm_sum(Sinv);
    CHECK(A >= 1.0 / 3.0);
    CHECK(A < 1.0);
}
