// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "bochner/errors.hpp"
#include "bochner/io.hpp"
#include "doctest.h"

using namespace bochner;

TEST_CASE("chart spec: catalog charts") {
    std::istringstream in("# a comment\nname fubini-study\nn 2\n");
    const ChartSpec spec = parse_chart_spec(in);
    CHECK(spec.name == "fubini-study");
    CHECK(spec.n == 2);
    const KaehlerChart chart = chart_from_spec(spec);
    CHECK(chart.complex_dim() == 2);
}

TEST_CASE("chart spec: random-poly with seed and degree") {
    std::istringstream in("name random-poly\nn 2\nseed 42\ndegree 3\n");
    const ChartSpec spec = parse_chart_spec(in);
    CHECK(spec.seed == 42);
    CHECK(spec.degree == 3);
    CHECK_NOTHROW(chart_from_spec(spec));
}

TEST_CASE("chart spec: inline polynomial") {
    // K = |z1|^2 + |z2|^2 written out as monomial lines.
    std::istringstream in(
        "name poly\n"
        "n 2\n"
        "1 0 1 0  1.0 0.0\n"
        "0 1 0 1  1.0 0.0\n");
    const ChartSpec spec = parse_chart_spec(in);
    REQUIRE(spec.inline_potential.has_value());
    const KaehlerChart chart = chart_from_spec(spec);
    const HermitianFrame f = metric_at(chart, Eigen::VectorXd::Zero(4));
    CHECK((f.g - 2.0 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("chart spec parse errors carry line numbers") {
    SUBCASE("bad key") {
        std::istringstream in("name flat\nn 2\nfoo bar\n");
        try {
            parse_chart_spec(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("monomial line before n") {
        std::istringstream in("1 0 1 0 1.0 0.0\n");
        try {
            parse_chart_spec(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
        }
    }
    SUBCASE("wrong monomial arity") {
        std::istringstream in("name poly\nn 2\n1 0 1 1.0 0.0\n");
        CHECK_THROWS_AS(parse_chart_spec(in), ParseError);
    }
    SUBCASE("non-real inline polynomial") {
        std::istringstream in("name poly\nn 1\n2 0 0.5 0.0\n");
        CHECK_THROWS_AS(parse_chart_spec(in), ParseError);
    }
    SUBCASE("missing name") {
        std::istringstream in("n 2\n");
        CHECK_THROWS_AS(parse_chart_spec(in), ParseError);
    }
}

TEST_CASE("map file: one block round-trips into certificate inputs") {
    std::istringstream in(
        "# fixture\n"
        "chart product-cp1-cp1\n"
        "point-p 0 0 0 0\n"
        "point-q 0 0 0 0\n"
        "F\n"
        "1 0 0 0\n"
        "0 1 0 0\n"
        "0 0 1 0\n"
        "0 0 0 1\n");
    const auto blocks = parse_map_file(in);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].chart == "product-cp1-cp1");
    CHECK(blocks[0].F.isIdentity(1e-15));
    const auto [p, q, map] = realize_block(blocks[0]);
    CHECK(p.B.max_abs() > 0.01);
    CHECK(map.j_linearity_residual() <= 1e-12);
}

TEST_CASE("map file: multiple blocks separated by blank lines") {
    std::istringstream in(
        "chart flat\npoint-p 0 0 0 0\npoint-q 0 0 0 0\nF\n"
        "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"
        "\n"
        "chart flat\npoint-p 0 0 0 0\npoint-q 0 0 0 0\nF\n"
        "0 0 -1 0\n0 0 0 -1\n1 0 0 0\n0 1 0 0\n");
    CHECK(parse_map_file(in).size() == 2);
}

TEST_CASE("map file errors") {
    SUBCASE("missing field") {
        std::istringstream in("chart flat\npoint-p 0 0 0 0\nF\n1 0 0 0\n");
        CHECK_THROWS_AS(parse_map_file(in), ParseError);
    }
    SUBCASE("wrong row count") {
        std::istringstream in(
            "chart flat\npoint-p 0 0 0 0\npoint-q 0 0 0 0\nF\n1 0 0 0\n0 1 0 0\n");
        CHECK_THROWS_AS(parse_map_file(in), ParseError);
    }
    SUBCASE("empty file") {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(parse_map_file(in), ParseError);
    }
    SUBCASE("bad number reports its line") {
        std::istringstream in("chart flat\npoint-p 0 x 0 0\n");
        try {
            parse_map_file(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
}
