#include "doctest.h"

#include "aifs/catalog.hpp"
#include "aifs/error.hpp"
#include "aifs/pipeline.hpp"
#include "helpers.hpp"

using namespace aifs;

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == "cbf29ce484222325");
    CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("system file parsing") {
    auto f = parse_system(json::parse(R"({"R": 4, "B": [0, "2"], "L": [0, "1/1"]})"));
    CHECK(f.R == IntMatrix::scalar(1, 4));
    CHECK(f.B == std::vector<RationalVector>{th::v({"0"}), th::v({"2"})});
    REQUIRE(f.L);
    CHECK(f.L->at(1) == th::v({"1"}));

    auto g = parse_system(json::parse(
        R"({"R": [[2, 1], [0, 2]], "B": [[0, 0], ["1/3", "-2/3"]], "weights": ["1/4", "0.75"]})"));
    CHECK(g.R.dim() == 2);
    CHECK(g.B[1] == th::v({"1/3", "-2/3"}));
    CHECK(g.weights[1] == Rational(3, 4));
    CHECK_THROWS_AS(g.require_L(), Error);

    auto kind = [](const char *text) {
        try {
            parse_system(json::parse(text));
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::index;  // no error
    };
    CHECK(kind(R"({"R": 2, "B": [0, 0.5]})") == ErrorKind::parse);
    CHECK(kind(R"({"R": 2, "B": [0, "x"]})") == ErrorKind::parse);
    CHECK(kind(R"({"R": 2})") == ErrorKind::parse);
    CHECK(kind(R"({"R": 2, "B": [0, 1], "extra": 1})") == ErrorKind::parse);
    CHECK(kind(R"({"R": [[2, 1]], "B": [[0, 0]]})") == ErrorKind::shape);
    CHECK(kind(R"({"R": [[2, 0], [0, 2]], "B": [0, 1]})") == ErrorKind::parse);
}

TEST_CASE("rationals round-trip through json") {
    for (const char *s : {"0", "-3", "7/2", "-1/3"}) {
        Rational r = Rational::parse(s);
        CHECK(rational_from_json(to_json(r)) == r);
    }
}

TEST_CASE("csv export has one row per point") {
    auto csv = points_csv({{0.5, 1.0}, {0.25, 2.0}}, 6);
    CHECK(csv == "0.5,1\n0.25,2\n");
}

TEST_CASE("verify-onb report for cantor4") {
    OnbOptions o;
    o.level = 6;
    auto r = analyze_triple(th::scalar(1, 4), {th::v({"0"}), th::v({"2"})},
                            {th::v({"0"}), th::v({"1"})}, o);
    CHECK(r.verdict == kVerdictSpectral);
    CHECK(r.census.uncertified == 0);
    CHECK(r.census.pairs == 28);
    CHECK(r.spectrum_size == 64);
    auto j = to_json(r);
    CHECK(j["cycles"]["cycles_complete"] == "unverified assumption");

    // uncertified triples are refused
    CHECK_THROWS_AS(analyze_triple(th::scalar(1, 4), {th::v({"0"}), th::v({"2"})},
                                   {th::v({"0"}), th::v({"2"})}, o),
                    Error);
}

TEST_CASE("catalog entries load and carry anchors") {
    auto entries = list_catalog(catalog_dir());
    CHECK(entries.size() == 16);
    for (const auto &e : entries) {
        CHECK_MESSAGE(!e.anchor.empty(), e.name);
        CHECK_MESSAGE(e.doc.contains("source"), e.name);
        CHECK_NOTHROW(parse_system(e.doc.at("system")));
    }
    CHECK_THROWS_AS(find_entry(catalog_dir(), "missing"), Error);
}

TEST_CASE("catalog runner reports mismatches") {
    auto e = find_entry(catalog_dir(), "shear-2-1");
    CHECK(run_catalog(e).ok);
    e.doc["expected"]["bound_finite"] = 8;
    auto r = run_catalog(e);
    CHECK_FALSE(r.ok);
    int failed = 0;
    for (const auto &c : r.checks)
        failed += !c.ok;
    CHECK(failed == 1);
}
