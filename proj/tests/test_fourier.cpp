#include "doctest.h"

#include <cmath>
#include <random>

#include "aifs/fourier.hpp"
#include "helpers.hpp"

using namespace aifs;

TEST_CASE("symbol examples") {
    AffineSystem sier(th::scalar(2, 2), th::simplex(2));
    CHECK(std::abs(eval_mB(sier, {0.0, 0.0}).value - 1.0) < 1e-15);
    CHECK(std::abs(eval_mB(sier, {1.0 / 3, 2.0 / 3}).value) < 1e-12);
    CHECK(eval_mB_exact(sier, th::v({"1/3", "2/3"})).exact_zero);
    auto one = eval_mB_exact(sier, th::vi({0, 0}));
    CHECK_FALSE(one.exact_zero);
    CHECK(std::abs(one.value - 1.0) < 1e-15);

    auto c4 = th::cantor4();
    CHECK(std::abs(eval_mB(c4, {0.25}).value) < 1e-15);

    AffineSystem z4(th::scalar(4, 6), th::simplex(4));
    CHECK(eval_mB_exact(z4, th::v({"1/2", "0", "1/3", "2/3"})).exact_zero);

    AffineSystem d1(th::scalar(1, 2), th::scalars({0, 1}));
    CHECK(eval_WB(d1, {1.0}) == doctest::Approx(1.0));
    CHECK(eval_WB(sier, {1.0 / 3, 2.0 / 3}) < 1e-24);
}

TEST_CASE("property: |m| <= 1, periodicity, exact agrees with float") {
    AffineSystem sier(th::scalar(3, 2), th::simplex(3));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 100);
    for (int t = 0; t < 300; ++t) {
        RationalVector x{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                         Rational(num(rng), den(rng))};
        auto xd = to_double(x);
        auto f = eval_mB(sier, xd).value;
        CHECK(std::abs(f) <= 1.0 + 1e-15);
        auto e = eval_mB_exact(sier, x);
        CHECK(std::abs(e.value - f) < 1e-12);
        DVector shifted = xd;
        shifted[1] += 7;
        CHECK(std::abs(eval_mB(sier, shifted).value - f) < 1e-12);
    }
}

TEST_CASE("weighted two-digit symbol has no zeros") {
    AffineSystem w(th::scalar(1, 2), th::scalars({0, 1}), {Rational(1, 3), Rational(2, 3)});
    for (int i = 0; i <= 10000; ++i) {
        double x = i / 10000.0;
        CHECK(std::abs(eval_mB(w, {x}).value) >= 1.0 / 3.0 - 1e-12);
    }
    for (long k = 0; k < 60; ++k)
        CHECK_FALSE(eval_mB_exact(w, {Rational(k, 60)}).exact_zero);
}

TEST_CASE("W_B normalisation") {
    AffineSystem B(th::scalar(1, 4), th::scalars({0, 2}));
    AffineSystem L(th::scalar(1, 4), th::scalars({0, 1}));
    CHECK(check_WB_normalization(B, L) < 1e-12);

    AffineSystem B3(th::scalar(3, 2), th::simplex(3));
    AffineSystem L3(th::scalar(3, 2), {th::vi({0, 0, 0}), th::vi({1, 1, 0}), th::vi({0, 1, 1}), th::vi({1, 0, 1})});
    CHECK(check_WB_normalization(B3, L3) < 1e-12);

    AffineSystem bad(th::scalar(1, 4), th::scalars({0, 2}));
    CHECK(check_WB_normalization(B, bad) > 0.1);
    double at = eval_WB(B, bad.tau(0, DVector{0.125})) + eval_WB(B, bad.tau(1, DVector{0.125}));
    CHECK(std::abs(at - 1.0) > 0.1);

    AffineSystem three(th::scalar(1, 4), th::scalars({0, 1, 2}));
    CHECK_THROWS_AS(check_WB_normalization(B, three), Error);
}

TEST_CASE("mu hat") {
    auto c4 = th::cantor4();
    auto at0 = eval_mu_hat(c4, {0.0});
    CHECK(at0.value == Complex(1.0, 0.0));

    AffineSystem c01(th::scalar(1, 4), th::scalars({0, 1}));
    auto z = eval_mu_hat_exact(c01, {Rational(2)});
    CHECK(z.exact_zero);
    CHECK(std::abs(eval_mu_hat(c01, {2.0}).value) < 1e-15);

    CHECK(invariance_residual(c4, {0.0}) < 1e-15);
    CHECK(invariance_residual(c4, {1.0}) < 1e-9);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(-10, 10);
    AffineSystem shear(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2));
    for (int t = 0; t < 50; ++t) {
        CHECK(invariance_residual(c4, {U(rng)}) < 1e-10);
        CHECK(invariance_residual(shear, {U(rng), U(rng)}) < 1e-10);
    }
    // closed form: mu_hat(x) for Cantor-4 with B={0,2}
    double x = 1.7, expected = 1.0;
    for (int n = 1; n < 60; ++n)
        expected *= std::cos(2.0 * M_PI * x / std::pow(4.0, n));
    auto v = eval_mu_hat(c4, {x});
    CHECK(std::abs(std::abs(v.value) - std::abs(expected)) < 1e-11);
}

TEST_CASE("property: coordinate change covariance") {
    AffineSystem sier(th::scalar(2, 3), th::simplex(2));
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
    std::uniform_real_distribution<double> U(-10, 10);
    int done = 0;
    while (done < 10) {
        RationalMatrix V(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                V(i, j) = Rational(num(rng), den(rng));
        if (V.determinant().is_zero())
            continue;
        SymbolData sv = conjugated_symbol(sier, V);
        SymbolData sb = symbol_data(sier);
        auto Vt = V.transpose().to_double();
        for (int t = 0; t < 10; ++t) {
            DVector x{U(rng), U(rng)};
            auto a = eval_mu_hat_terms(sv, x, 60).value;
            auto b = eval_mu_hat_terms(sb, mat_vec(Vt, x), 60).value;
            CHECK(std::abs(a - b) < 1e-9);
        }
        ++done;
    }
}
