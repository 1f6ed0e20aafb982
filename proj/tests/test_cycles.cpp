#include "doctest.h"

#include <algorithm>

#include "aifs/cycles.hpp"
#include "helpers.hpp"

using namespace aifs;

namespace {

DualPair pair_of(const IntMatrix &R, std::vector<RationalVector> B, std::vector<RationalVector> L) {
    auto t = check_hadamard(R, B, L);
    REQUIRE(t.certified);
    return make_dual_pair(t);
}

std::vector<RationalVector> sier3_L(long p) {
    long h = p / 2;
    return {th::vi({0, 0, 0}), th::vi({h, h, 0}), th::vi({0, h, h}), th::vi({h, 0, h})};
}

std::vector<RationalVector> sier2_L(long p) {
    long a = 2 * p / 3;
    return {th::vi({0, 0}), th::vi({a, -a}), th::vi({-a, a})};
}

std::vector<std::vector<RationalVector>> point_sets(const std::vector<CycleRecord> &cs) {
    std::vector<std::vector<RationalVector>> out;
    for (const auto &c : cs)
        out.push_back(c.points);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("Gamma and its dual") {
    AffineSystem d1(th::scalar(1, 2), th::scalars({0, 1}));
    auto g = build_gamma(d1);
    CHECK(g.basis(0, 0) == Rational(1));
    auto g2 = build_gamma(AffineSystem(th::scalar(2, 2), th::simplex(2)));
    CHECK(g2.basis == RationalMatrix::identity(2));
    try {
        build_gamma(AffineSystem(th::scalar(1, 2), th::scalars({0})));
        FAIL("expected rank failure");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::inapplicable);
        CHECK(std::string(e.what()).find("rank 0") != std::string::npos);
    }
    LatticeBasis twoZ{RationalMatrix::from_columns({{Rational(2)}})};
    CHECK(dual_lattice(twoZ).basis(0, 0) == Rational(1, 2));
    auto d23 = dual_lattice(build_gamma(AffineSystem(th::scalar(2, 3), th::simplex(2))));
    CHECK(d23.basis == RationalMatrix::identity(2));
    CHECK(contains_integer_lattice(d23));
    CHECK(is_invariant(d23, th::scalar(2, 3)));
    auto basis = lattice_basis({th::vi({4, 6}), th::vi({6, 9}), th::vi({2, 2})});
    CHECK(basis.size() == 2);
}

TEST_CASE("candidates") {
    LatticeBasis Z1{RationalMatrix::identity(1)};
    CHECK(enumerate_candidates(Z1, AffineSystem(th::scalar(1, 2), th::scalars({0, 1}))) ==
          th::scalars({0, 1}));
    CHECK(enumerate_candidates(Z1, AffineSystem(th::scalar(1, 4), th::scalars({0, 2}))) ==
          th::scalars({0}));
    LatticeBasis Z3{RationalMatrix::identity(3)};
    auto corners = enumerate_candidates(Z3, AffineSystem(th::scalar(3, 2), sier3_L(2)));
    CHECK(corners.size() == 8);
}

TEST_CASE("W_B-cycles of the Sierpinski systems") {
    auto p1 = pair_of(th::scalar(1, 2), th::scalars({0, 1}), th::scalars({0, 1}));
    auto a1 = analyze_cycles(p1);
    CHECK(point_sets(a1.wb_cycles) == std::vector<std::vector<RationalVector>>{{th::vi({0})}, {th::vi({1})}});

    auto p3 = pair_of(th::scalar(3, 2), th::simplex(3), sier3_L(2));
    auto a3 = analyze_cycles(p3);
    CHECK(a3.wb_cycles.size() == 4);
    for (const auto &c : a3.wb_cycles)
        CHECK(c.period() == 1);
    CHECK(point_sets(a3.wb_cycles) ==
          std::vector<std::vector<RationalVector>>{{th::vi({0, 0, 0})}, {th::vi({0, 1, 1})},
                                                   {th::vi({1, 0, 1})}, {th::vi({1, 1, 0})}});

    auto p6 = pair_of(th::scalar(2, 6), th::simplex(2), sier2_L(6));
    auto a6 = analyze_cycles(p6);
    CHECK(point_sets(a6.wb_cycles) == std::vector<std::vector<RationalVector>>{{th::vi({0, 0})}});
}

TEST_CASE("d = 2, p = 3: the dual attractor reaches (1,-1) and (-1,1)") {
    auto p = pair_of(th::scalar(2, 3), th::simplex(2), sier2_L(3));
    auto a = analyze_cycles(p);
    CHECK(point_sets(a.wb_cycles) ==
          std::vector<std::vector<RationalVector>>{{th::vi({-1, 1})}, {th::vi({0, 0})}, {th::vi({1, -1})}});
}

TEST_CASE("cycle classification") {
    AffineSystem B3(th::scalar(3, 2), th::simplex(3));
    std::vector<CycleRecord> cs(3);
    cs[0].points = {th::vi({1, 1, 0})};
    cs[1].points = {th::vi({0, 0, 0})};
    cs[2].points = {th::v({"1/2", "0", "0"})};
    classify_WB(B3, cs);
    CHECK(cs[0].is_WB_cycle);
    CHECK(cs[1].is_WB_cycle);
    CHECK_FALSE(cs[2].is_WB_cycle);
}

TEST_CASE("property: cycle records satisfy their defining equation; graph and word routes agree") {
    struct Case {
        IntMatrix R;
        std::vector<RationalVector> B, L;
    };
    std::vector<Case> cases{
        {th::scalar(1, 2), th::scalars({0, 1}), th::scalars({0, 1})},
        {th::scalar(1, 4), th::scalars({0, 1}), th::scalars({0, 2})},
        {th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1})},
        {th::scalar(2, 3), th::simplex(2), sier2_L(3)},
        {th::scalar(2, 6), th::simplex(2), sier2_L(6)},
        {th::scalar(3, 2), th::simplex(3), sier3_L(2)},
        {th::scalar(3, 4), th::simplex(3), sier3_L(4)},
        {th::scalar(2, 3), th::simplex(2), {th::vi({0, 0}), th::vi({1, 2}), th::vi({2, 4})}},
    };
    for (const auto &c : cases) {
        auto pair = pair_of(c.R, c.B, c.L);
        auto a = analyze_cycles(pair);
        REQUIRE(a.lattice_route);
        CHECK(a.all_cycles_WB);
        CHECK(a.search.on_cycles + a.search.transient + a.search.discarded == a.candidates.size());
        for (const auto &cyc : a.search.cycles) {
            const std::size_t m = cyc.period();
            for (std::size_t i = 0; i < m; ++i)
                CHECK(pair.dual.tau(cyc.word[i], cyc.points[(i + m - 1) % m]) == cyc.points[i]);
        }
        std::size_t P = affordable_word_period(pair.dual.size(), 6);
        auto words = find_cycles_by_words(pair.dual, P);
        classify_WB(pair.primal, words);
        std::vector<CycleRecord> wb;
        for (auto &w : words)
            if (w.is_WB_cycle)
                wb.push_back(w);
        CHECK(point_sets(wb) == point_sets(a.wb_cycles));
    }
}

TEST_CASE("spectra from cycles") {
    auto p1 = pair_of(th::scalar(1, 2), th::scalars({0, 1}), th::scalars({0, 1}));
    auto s1 = spectrum_from_cycles(p1, analyze_cycles(p1).wb_cycles, 5);
    REQUIRE(s1.elements.size() == 64);
    for (long k = -32; k < 32; ++k)
        CHECK(s1.elements[k + 32] == th::vi({k}));

    auto p4 = pair_of(th::scalar(1, 4), th::scalars({0, 1}), th::scalars({0, 2}));
    auto s4 = spectrum_from_cycles(p4, analyze_cycles(p4).wb_cycles, 3);
    CHECK(s4.elements == th::scalars({0, 2, 8, 10, 32, 34, 40, 42}));

    auto pc = pair_of(th::scalar(1, 4), th::scalars({0, 2}), th::scalars({0, 1}));
    auto sc = spectrum_from_cycles(pc, analyze_cycles(pc).wb_cycles, 3);
    CHECK(sc.elements == th::scalars({0, 1, 4, 5, 16, 17, 20, 21}));

    std::vector<CycleRecord> bad(1);
    bad[0].points = {th::vi({0})};
    CHECK_THROWS_AS(spectrum_from_cycles(pc, bad, 2), Error);
}

TEST_CASE("property: spectrum levels are nested") {
    auto p3 = pair_of(th::scalar(3, 2), th::simplex(3), sier3_L(2));
    auto cyc = analyze_cycles(p3).wb_cycles;
    auto prev = spectrum_from_cycles(p3, cyc, 1).elements;
    for (std::size_t n = 2; n <= 4; ++n) {
        auto cur = spectrum_from_cycles(p3, cyc, n).elements;
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        prev = cur;
    }
}

TEST_CASE("divisor family") {
    auto f = propdiv_family(6, 4, {{1, 2}, {1, 3}});
    CHECK(f.z0 == th::v({"1/2", "0", "1/3", "2/3"}));
    CHECK(f.certified);
    CHECK(f.members(2)[0] == th::vi({3, 0, 2, 4}));
    auto g = propdiv_family(6, 3, {{2, 2}});
    CHECK(g.z0 == th::v({"1/2", "0", "1/2"}));
    CHECK(g.certified);
    CHECK_THROWS_AS(propdiv_family(6, 4, {{1, 2}, {2, 3}}), Error);
    CHECK_THROWS_AS(propdiv_family(6, 4, {{1, 5}}), Error);
}

TEST_CASE("divisible-p spectra") {
    auto a = thpmuld_spectrum(3, 2, 2);
    CHECK(a.triple.certified);
    CHECK(a.cycles.wb_cycles.size() == 2);
    for (long k = -5; k <= 5; ++k)
        CHECK(std::binary_search(a.spectrum.elements.begin(), a.spectrum.elements.end(), th::vi({k, 2 * k})));
    for (const auto &e : a.spectrum.elements)
        CHECK(e[1] == Rational(2) * e[0]);

    auto b = thpmuld_spectrum(2, 1, 4);
    for (long k = -16; k < 16; ++k)
        CHECK(std::binary_search(b.spectrum.elements.begin(), b.spectrum.elements.end(), th::vi({k})));

    auto c = thpmuld_spectrum(6, 2, 2);
    std::vector<RationalVector> want;
    for (long a0 = 0; a0 < 3; ++a0)
        for (long a1 = 0; a1 < 3; ++a1)
            want.push_back(th::vi({2 * (a0 + 6 * a1), 4 * (a0 + 6 * a1)}));
    std::sort(want.begin(), want.end());
    CHECK(c.spectrum.elements == want);
    CHECK_THROWS_AS(thpmuld_spectrum(4, 2, 2), Error);
}
