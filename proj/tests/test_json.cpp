#include <doctest.h>

#include <map>

#include "realog/catalog.hpp"
#include "realog/json_io.hpp"

using realog::CochainComplex;
using realog::Coefficient;
using realog::IntegerMatrix;
using realog::InputKind;

namespace {

void check_parse_error(const std::string& text) {
    CAPTURE(text);
    try {
        realog::classify_json(text);
        FAIL("expected a parse error");
    } catch (const realog::error& e) {
        CHECK(e.code() == realog::errc::parse_error);
    }
}

}  // namespace

TEST_CASE("matrix json round trip") {
    IntegerMatrix m(2, 3, {1, -2, 3, 0, 5, -6});
    const std::string text = realog::matrix_to_json(m);
    CHECK(realog::matrix_from_json(text) == m);
    CHECK(realog::matrix_to_json(realog::matrix_from_json(text)) == text);

    SUBCASE("empty shapes survive") {
        IntegerMatrix zero(0, 4);
        CHECK(realog::matrix_from_json(realog::matrix_to_json(zero)) == zero);
    }
    SUBCASE("entries beyond 64 bits travel as strings") {
        IntegerMatrix big(1, 1);
        big.at(0, 0) = mpz_class("123456789012345678901234567890");
        const std::string out = realog::matrix_to_json(big);
        CHECK(out.find("\"123456789012345678901234567890\"") != std::string::npos);
        CHECK(realog::matrix_from_json(out) == big);
    }
}

TEST_CASE("malformed documents raise ParseError") {
    check_parse_error("not json at all");
    check_parse_error("[1, 2, 3]");
    check_parse_error("{\"rows\": 1}");
    CHECK_THROWS_AS(realog::matrix_from_json("{\"rows\": 1, \"cols\": 2, \"entries\": [[1]]}"),
                    realog::error);
    CHECK_THROWS_AS(realog::matrix_from_json(
                        "{\"rows\": 1, \"cols\": 1, \"entries\": [[\"x\"]]}"),
                    realog::error);
    CHECK_THROWS_AS(realog::sdd_from_json("{\"fiber_dim\": 1}"), realog::error);
    CHECK_THROWS_AS(realog::complex_from_json(
                        "{\"coefficient\": \"Q\", \"degrees\": [0, 0], \"ranks\": {}}"),
                    realog::error);
}

TEST_CASE("document kinds are sniffed from their fields") {
    CHECK(realog::classify_json("{\"fiber_dim\": 0, \"strata\": []}") ==
          InputKind::Degeneration);
    CHECK(realog::classify_json("{\"polygon\": []}") == InputKind::Patchwork);
    CHECK(realog::classify_json("{\"coefficient\": \"Z\"}") == InputKind::Complex);
    CHECK(realog::classify_json("{\"rows\": 0, \"cols\": 0, \"entries\": []}") ==
          InputKind::Matrix);
    check_parse_error("{\"something\": 1}");
}

TEST_CASE("complex json round trip") {
    CochainComplex c(Coefficient::Integers, -1, {2, 2, 1},
                     {{-1, IntegerMatrix(2, 2, {1, 0, 0, 2})},
                      {0, IntegerMatrix(1, 2, {0, 0})}},
                     {{-1, {"a", "b"}}});
    const std::string text = realog::complex_to_json(c);
    CochainComplex back = realog::complex_from_json(text);
    CHECK(realog::complex_to_json(back) == text);
    CHECK(back.coefficient() == Coefficient::Integers);
    CHECK(back.p_min() == -1);
    CHECK(back.rank_at(1) == 1);
    CHECK(back.labels() == c.labels());
    CHECK(back.cohomology() == c.cohomology());

    SUBCASE("zero differentials are dropped from the document") {
        CHECK(back.stored_differentials().size() == 1);
        CHECK(back.stored_differentials().count(-1) == 1);
    }
    SUBCASE("mod-2 coefficient tag survives") {
        const std::string f2 = realog::complex_to_json(c.reduce_mod2());
        CHECK(f2.find("\"F2\"") != std::string::npos);
        CHECK(realog::complex_from_json(f2).coefficient() == Coefficient::ModTwo);
    }
}

TEST_CASE("degeneration json round trips byte for byte on the catalog") {
    for (const auto& entry : realog::catalog_entries()) {
        CAPTURE(entry.name);
        auto sdd = realog::catalog_sdd(entry.name);
        const std::string text = realog::sdd_to_json(sdd);
        auto back = realog::sdd_from_json(text);
        CHECK(realog::sdd_to_json(back) == text);

        auto want = realog::verdict(sdd);
        auto got = realog::verdict(back);
        CHECK(got.betti_real == want.betti_real);
        CHECK(got.hodge == want.hodge);
        CHECK(got.maximal == want.maximal);
    }
}

TEST_CASE("patchwork json round trips byte for byte on the catalog") {
    for (const auto& entry : realog::catalog_entries()) {
        if (!entry.patchwork) continue;
        CAPTURE(entry.name);
        auto pi = realog::catalog_patchwork(entry.name);
        const std::string text = realog::patchwork_to_json(pi);
        auto back = realog::patchwork_from_json(text);
        CHECK(realog::patchwork_to_json(back) == text);
        CHECK(back.polygon == pi.polygon);
        CHECK(back.triangles == pi.triangles);
        CHECK(back.heights == pi.heights);
        CHECK(back.signs == pi.signs);
    }
}

TEST_CASE("reports render to json and markdown") {
    auto report = realog::verdict(realog::catalog_sdd("harnack-d3"));
    realog::ViroSummary viro{27, 27, 2};

    const std::string js = realog::report_to_json(report, {}, &viro);
    CHECK(js.find("\"maximal\": true") != std::string::npos);
    CHECK(js.find("\"betti_real\": [\n    2,\n    2\n  ]") != std::string::npos);
    CHECK(js.find("\"components\": 2") != std::string::npos);
    CHECK(js.find("\"torsion\"") != std::string::npos);

    realog::ReportOptions f2_only{false, true};
    const std::string f2 = realog::report_to_json(report, f2_only);
    CHECK(f2.find("\"torsion\"") == std::string::npos);
    CHECK(f2.find("\"mod2\"") != std::string::npos);

    realog::ReportOptions z_only{true, false};
    const std::string z = realog::report_to_json(report, z_only);
    CHECK(z.find("\"inequality\"") == std::string::npos);

    const std::string md = realog::report_to_markdown(report, {}, &viro);
    CHECK(md.find("- betti_real: 2 2") != std::string::npos);
    CHECK(md.find("- maximal: yes") != std::string::npos);
    CHECK(md.find("| p | b_p | bound | slack |") != std::string::npos);
    CHECK(md.find("27 segments") != std::string::npos);
}
