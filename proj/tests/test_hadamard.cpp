#include "doctest.h"

#include "aifs/fourier.hpp"
#include "aifs/hadamard.hpp"
#include "helpers.hpp"

using namespace aifs;

namespace {
std::vector<RationalVector> sier3_L(long p) {
    long h = p / 2;
    return {th::vi({0, 0, 0}), th::vi({h, h, 0}), th::vi({0, h, h}), th::vi({h, 0, h})};
}
} // namespace

TEST_CASE("Hadamard certification examples") {
    auto c4 = check_hadamard(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1}));
    CHECK(c4.certified);
    CHECK(c4.exact_checked);
    CHECK(c4.exact_unitary);
    CHECK(c4.unitarity_defect < 1e-12);

    auto s3 = check_hadamard(th::scalar(3, 2), th::simplex(3), sier3_L(2));
    CHECK(s3.certified);

    auto bad = check_hadamard(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 2}));
    CHECK_FALSE(bad.certified);
    CHECK(bad.unitarity_defect == doctest::Approx(1.0));

    CHECK_THROWS_AS(check_hadamard(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1, 3})), Error);

    auto nozero = check_hadamard(th::scalar(1, 4), th::scalars({1, 3}), th::scalars({0, 1}));
    CHECK(nozero.certified);
    CHECK_FALSE(nozero.warnings.empty());
}

TEST_CASE("dual pair") {
    auto c4 = check_hadamard(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1}));
    auto dp = make_dual_pair(c4);
    CHECK(dp.dual.R().matrix() == th::scalar(1, 4));
    CHECK(dp.dual.digits() == th::scalars({0, 1}));

    // L = R^T {0, (1/3,2/3), (2/3,1/3)} turns H into the 3x3 Fourier matrix
    std::vector<RationalVector> L{th::vi({0, 0}), th::v({"2/3", "5/3"}), th::v({"4/3", "4/3"})};
    auto sh = check_hadamard(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2), L);
    REQUIRE(sh.certified);
    CHECK(make_dual_pair(sh).dual.R().matrix() == IntMatrix({{2, 0}, {1, 2}}));
    auto bad = check_hadamard(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 2}));
    CHECK_THROWS_AS(make_dual_pair(bad), Error);
}

TEST_CASE("property: swapped triple certification, normalisation, column sums") {
    struct Case {
        IntMatrix R;
        std::vector<RationalVector> B, L;
    };
    std::vector<Case> cases{
        {th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1})},
        {th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 2})},
        {th::scalar(1, 3), th::scalars({0, 1}), th::scalars({0, 1})},
        {th::scalar(3, 2), th::simplex(3), sier3_L(2)},
        {th::scalar(3, 4), th::simplex(3), sier3_L(4)},
        {th::scalar(2, 3), th::simplex(2), {th::vi({0, 0}), th::vi({2, -2}), th::vi({-2, 2})}},
        {th::scalar(2, 3), th::simplex(2), {th::vi({0, 0}), th::vi({1, 2}), th::vi({2, 4})}},
    };
    for (const auto &c : cases) {
        auto fwd = check_hadamard(c.R, c.B, c.L);
        auto rev = check_hadamard(transpose(c.R), c.L, c.B);
        CHECK(fwd.certified == rev.certified);
        CHECK(std::abs(fwd.unitarity_defect - rev.unitarity_defect) < 1e-12);
        if (!fwd.certified)
            continue;
        auto dp = make_dual_pair(fwd);
        CHECK(check_WB_normalization(dp.primal, dp.dual) < 1e-10);
        auto Rinv = inverse(c.R);
        for (std::size_t i = 0; i < c.L.size(); ++i)
            for (std::size_t j = i + 1; j < c.L.size(); ++j) {
                Complex s = 0;
                for (const auto &b : c.B) {
                    double ph = dot(Rinv * b, c.L[i] - c.L[j]).to_double();
                    s += std::exp(Complex(0, 2 * M_PI * ph));
                }
                CHECK(std::abs(s) < 1e-10);
            }
    }
}
