#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "aifs/verify.hpp"
#include "helpers.hpp"

using namespace aifs;

TEST_CASE("zero-chain certificates") {
    auto c4 = th::cantor4();
    auto pc = orthogonal_pair(c4, th::vi({0}), th::vi({1}));
    REQUIRE(pc.certificate);
    CHECK(pc.status == PairStatus::certified_orthogonal);
    CHECK(pc.certificate->vanishing_index == 1);
    CHECK(pc.certificate->witness == th::v({"1/4"}));
    CHECK(orthogonal_pair(c4, th::vi({1}), th::vi({0})).certificate->witness == th::v({"1/4"}));

    auto same = orthogonal_pair(c4, th::vi({3}), th::vi({3}));
    CHECK_FALSE(same.certificate);
    CHECK(same.mu_hat_abs == doctest::Approx(1.0));

    AffineSystem d3(th::scalar(1, 3), th::scalars({0, 1}));
    auto h = orthogonal_pair(d3, th::vi({0}), th::v({"3/2"}));
    CHECK(h.status == PairStatus::certified_orthogonal);
    auto no = orthogonal_pair(d3, th::vi({0}), th::v({"1/3"}));
    CHECK(no.status == PairStatus::numerically_nonzero);
    CHECK(no.tail_nonvanishing);
}

TEST_CASE("property: certificates are sound") {
    AffineSystem shear(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2));
    ZeroChainOracle oracle(shear);
    CandidateGrid grid{th::vi({-2, -2}), th::vi({2, 2}), 3};
    auto pts = grid.points();
    int certified = 0;
    for (std::size_t i = 0; i < pts.size(); i += 7)
        for (std::size_t j = i + 1; j < pts.size(); j += 5) {
            auto r = oracle.check(pts[i], pts[j]);
            if (r.status != PairStatus::certified_orthogonal)
                continue;
            ++certified;
            CHECK(std::abs(eval_mu_hat(shear, to_double(pts[i] - pts[j])).value) < 1e-10);
            auto y = r.certificate->witness;
            CHECK(eval_mB_exact(shear, y).exact_zero);
        }
    CHECK(certified > 0);
}

TEST_CASE("candidate grids") {
    CandidateGrid g{th::vi({0}), th::vi({1}), 3};
    CHECK(g.points() == std::vector<RationalVector>{th::v({"0"}), th::v({"1/3"}), th::v({"1/2"}),
                                                    th::v({"2/3"}), th::v({"1"})});
    CandidateGrid big{th::vi({-1000, -1000}), th::vi({1000, 1000}), 10};
    CHECK_THROWS_AS(big.points(), Error);
}

TEST_CASE("maximal orthogonal families") {
    auto c4 = th::cantor4();
    auto fam = max_orthogonal_family(c4, th::scalars({0, 1, 4, 5, 16, 17, 20, 21}));
    CHECK(fam.family.size() == 8);

    AffineSystem w(th::scalar(1, 2), th::scalars({0, 1}), {Rational(1, 3), Rational(2, 3)});
    auto wf = max_orthogonal_family(w, CandidateGrid{th::vi({-8}), th::vi({8}), 4});
    CHECK(wf.family.size() == 1);
    CHECK(wf.edges == 0);

    AffineSystem shear(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2));
    auto sf = max_orthogonal_family(shear, CandidateGrid{th::vi({-3, -3}), th::vi({3, 3}), 3});
    CHECK(sf.strategy == "difference set");
    CHECK(sf.family.size() <= 7);
    CHECK(sf.family.size() >= 2);
}

TEST_CASE("difference-set and pairwise strategies agree") {
    AffineSystem shear(IntMatrix({{2, 1}, {0, 2}}), th::simplex(2));
    auto pts = CandidateGrid{th::vi({-2, -2}), th::vi({2, 2}), 3}.points();
    auto fast = max_orthogonal_family(shear, pts);
    ZeroChainOracle oracle(shear);
    std::size_t edges = 0;
    std::vector<std::vector<std::uint32_t>> upper(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (oracle.certified(pts[i], pts[j])) {
                ++edges;
                upper[i].push_back(static_cast<std::uint32_t>(j));
            }
    CHECK(fast.edges == edges);
    CHECK(fast.family.size() == max_clique(upper).size());

    AffineSystem d3(th::scalar(1, 3), th::scalars({0, 1}));
    auto g = CandidateGrid{th::vi({-9}), th::vi({9}), 6}.points();
    auto f3 = max_orthogonal_family(d3, g);
    std::size_t e3 = 0;
    ZeroChainOracle o3(d3);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            e3 += o3.certified(g[i], g[j]);
    CHECK(f3.edges == e3);
    CHECK(f3.family.size() == 2);
}

TEST_CASE("max clique") {
    // 5-cycle plus a triangle {5,6,7}
    std::vector<std::vector<std::uint32_t>> upper{{1, 4}, {2}, {3}, {4}, {}, {6, 7}, {7}, {}};
    auto c = max_clique(upper);
    CHECK(c == std::vector<std::size_t>{5, 6, 7});
    CHECK(max_clique({{}, {}, {}}).size() == 1);
}

TEST_CASE("Parseval sums") {
    auto c4 = th::cantor4();
    CHECK(completeness_Q(c4, th::scalars({0, 1, 4, 5}), {0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    double single = completeness_Q(c4, th::scalars({0}), {1.0 / 3});
    CHECK(single < 1.0);
    CHECK(single == doctest::Approx(std::norm(eval_mu_hat(c4, {1.0 / 3}).value)));

    auto t = check_hadamard(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1}));
    auto pair = make_dual_pair(t);
    auto cyc = analyze_cycles(pair).wb_cycles;
    auto s8 = spectrum_from_cycles(pair, cyc, 8);
    double q = completeness_Q(c4, s8.elements, {1.0 / 3});
    CHECK(q >= 0.99);
    CHECK(q <= 1 + 1e-8);
    double prev = 0;
    for (std::size_t level = 1; level <= 6; ++level) {
        double cur = completeness_Q(c4, spectrum_from_cycles(pair, cyc, level).elements, {0.37});
        CHECK(cur >= prev - 1e-15);
        prev = cur;
    }
}

TEST_CASE("quasi-random points") {
    auto p = quasi_random_points(2, 32);
    CHECK(p.size() == 32);
    for (const auto &x : p)
        for (double c : x) {
            CHECK(c >= 0.0);
            CHECK(c < 1.0);
        }
    CHECK(quasi_random_points(1, 1)[0][0] == doctest::Approx(0.6180339887));
}
