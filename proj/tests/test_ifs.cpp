#include "doctest.h"

#include <algorithm>

#include "aifs/ifs.hpp"
#include "helpers.hpp"

using namespace aifs;

TEST_CASE("tau examples") {
    auto c4 = th::cantor4();
    CHECK(tau(c4, 0, th::vi({0})) == th::vi({0}));
    CHECK(tau(c4, 1, th::v({"2/3"})) == th::v({"2/3"}));
    AffineSystem sier3(th::scalar(3, 2), th::simplex(3));
    CHECK(tau(sier3, 1, th::vi({1, 1, 1})) == th::v({"1", "1/2", "1/2"}));
    CHECK_THROWS_AS(tau(c4, 2, th::vi({0})), Error);
}

TEST_CASE("system validation") {
    CHECK_THROWS_AS(AffineSystem(th::scalar(1, 4), th::scalars({0, 0})), Error);
    CHECK_THROWS_AS(AffineSystem(th::scalar(1, 4), th::scalars({0, 2}), {Rational(1, 3), Rational(1, 3)}),
                    Error);
    CHECK_THROWS_AS(AffineSystem(IntMatrix({{1, 0}, {0, 2}}), th::simplex(2)), Error);
    AffineSystem w(th::scalar(1, 2), th::scalars({0, 1}), {Rational(1, 3), Rational(2, 3)});
    CHECK_FALSE(w.uniform());
}

TEST_CASE("deterministic attractor") {
    auto c4 = th::cantor4();
    auto a0 = attractor(c4, 0);
    REQUIRE(a0.points.size() == 1);
    CHECK(a0.points[0][0] == doctest::Approx(0.0));
    auto a1 = attractor(c4, 1);
    REQUIRE(a1.points.size() == 2);
    CHECK(a1.points[0][0] == doctest::Approx(0.0));
    CHECK(a1.points[1][0] == doctest::Approx(0.5));

    AffineSystem sier(th::scalar(2, 2), th::simplex(2));
    auto a2 = attractor(sier, 2);
    CHECK(a2.points.size() == 9);
    for (const auto &p : a2.points)
        for (double c : p) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
        }
}

TEST_CASE("property: self-similarity of deterministic clouds, exact and float agree") {
    AffineSystem shear(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2));
    for (std::size_t n = 0; n < 5; ++n) {
        auto level = attractor_exact(shear, n);
        auto next = attractor_exact(shear, n + 1);
        std::vector<RationalVector> built;
        for (std::size_t b = 0; b < shear.size(); ++b)
            for (const auto &x : level)
                built.push_back(shear.tau(b, x));
        CHECK(built == next);
        auto cloud = attractor(shear, n + 1);
        REQUIRE(cloud.points.size() == next.size());
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(cloud.points[i][j] == doctest::Approx(next[i][j].to_double()).epsilon(1e-12));
    }
}

TEST_CASE("bounding box contains every generated point") {
    auto c4 = th::cantor4();
    Box box = bounding_box(c4);
    CHECK(box.lo[0] <= 0.0);
    CHECK(box.hi[0] >= 2.0 / 3.0);
    CHECK(box.hi[0] < 0.7);

    AffineSystem origin(th::scalar(1, 3), th::scalars({0}));
    Box o = bounding_box(origin);
    CHECK(o.lo[0] <= 0.0);
    CHECK(o.hi[0] >= 0.0);
    CHECK(o.hi[0] - o.lo[0] < 1e-6);

    std::vector<RationalVector> L{th::vi({0, 0, 0}), th::vi({1, 1, 0}), th::vi({0, 1, 1}), th::vi({1, 0, 1})};
    AffineSystem dual(th::scalar(3, 2), L);
    Box b3 = bounding_box(dual);
    for (int i = 0; i < 3; ++i) {
        CHECK(b3.lo[i] <= 0.0);
        CHECK(b3.hi[i] >= 1.0);
        CHECK(b3.hi[i] < 1.1);
    }
    for (const auto *sys : {&c4, &dual}) {
        Box b = bounding_box(*sys);
        for (const auto &p : attractor(*sys, 6).points)
            CHECK(b.contains(p));
        for (const auto &p : attractor(*sys, 0, AttractorMode::chaos_game, {2000, 5}).points)
            CHECK(b.contains(p));
    }
}

TEST_CASE("chaos game is reproducible per seed") {
    AffineSystem sier(th::scalar(2, 2), th::simplex(2));
    auto a = attractor(sier, 0, AttractorMode::chaos_game, {500, 42});
    auto b = attractor(sier, 0, AttractorMode::chaos_game, {500, 42});
    auto c = attractor(sier, 0, AttractorMode::chaos_game, {500, 43});
    CHECK(a.points.size() == 500);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
}
