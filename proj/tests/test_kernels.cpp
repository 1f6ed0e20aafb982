#include "doctest.h"

#include <omp.h>

#include "aifs/kernels.hpp"
#include "helpers.hpp"

using namespace aifs;

namespace {
struct ThreadScope {
    int saved;
    explicit ThreadScope(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadScope() { omp_set_num_threads(saved); }
};
} // namespace

TEST_CASE("parallel kernels match their serial references") {
    ThreadScope threads(4);
    AffineSystem shear(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2));
    std::vector<DVector> digits;
    for (const auto &b : shear.digits())
        digits.push_back(to_double(b));

    SUBCASE("word expansion") {
        auto a = kernels::expand_words(shear.R_inverse_d(), digits, {0.0, 0.0}, 6);
        auto b = kernels::serial::expand_words(shear.R_inverse_d(), digits, {0.0, 0.0}, 6);
        CHECK(a == b);
    }
    SUBCASE("zero scan") {
        auto s = symbol_data(shear);
        CHECK(kernels::scan_zeros(s, 32) == kernels::serial::scan_zeros(s, 32));
    }
    SUBCASE("D_n search") {
        for (auto [M, d] : {std::pair<long, std::size_t>{27, 1}, {9, 2}, {12, 3}, {6, 4}}) {
            auto a = kernels::dn_search(M, d);
            auto b = kernels::serial::dn_search(M, d);
            CHECK(a.value == b.value);
            CHECK(a.k == b.k);
        }
    }
    SUBCASE("Parseval sum") {
        auto s = symbol_data(shear);
        std::vector<DVector> spec;
        for (int i = -30; i <= 30; ++i)
            for (int j = -30; j <= 30; ++j)
                spec.push_back({double(i), double(j)});
        double a = kernels::parseval_sum(s, spec, {0.3, 0.1}, {});
        double b = kernels::serial::parseval_sum(s, spec, {0.3, 0.1}, {});
        CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
    SUBCASE("pairwise relation") {
        auto rel = [](std::size_t i, std::size_t j) { return (i * 7 + j * 3) % 5 == 0; };
        CHECK(kernels::pairwise_relation(300, rel) == kernels::serial::pairwise_relation(300, rel));
    }
}

TEST_CASE("zero refinement") {
    AffineSystem d1(th::scalar(1, 2), th::scalars({0, 1}));
    auto r = kernels::refine_zero(symbol_data(d1), {0.45});
    REQUIRE(r);
    CHECK((*r)[0] == doctest::Approx(0.5).epsilon(1e-10));
    AffineSystem w(th::scalar(1, 2), th::scalars({0, 1}), {Rational(1, 3), Rational(2, 3)});
    CHECK_FALSE(kernels::refine_zero(symbol_data(w), {0.5}));
}

TEST_CASE("D_n ties break lexicographically") {
    auto b = kernels::serial::dn_search(3, 1);
    CHECK(b.k == std::vector<long>{1});
    CHECK(b.value == doctest::Approx(1.0));
}
