#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "noether/ideal_file.hpp"
#include "noether/parse.hpp"
#include "test_util.hpp"

using namespace noether;
using test_util::P;

TEST_CASE("grammar accepts the documented forms") {
    auto R = test_util::ring_xy();
    CHECK(P(R, "(y-1)*x^2*y") == P(R, "x^2*y^2 - x^2*y"));
    CHECK(P(R, "x^3 + 2/3*y").terms().size() == 2);
    CHECK(P(R, "2x") == P(R, "2*x"));
    CHECK(P(R, "(x+1)(x-1)") == P(R, "x^2 - 1"));
    CHECK(P(R, "x^2y") == P(R, "x^2*y"));
    CHECK(P(R, "-x^2") == Polynomial::zero(R) - P(R, "x^2"));
    CHECK(P(R, "0").is_zero());
    CHECK(P(R, "7/14") == Polynomial::constant(R, Rat(1, 2)));
}

TEST_CASE("parse errors carry positions") {
    auto R = test_util::ring_xy();
    CHECK_THROWS_AS(P(R, "x + q"), parse_error);
    CHECK_THROWS_AS(P(R, "x +"), parse_error);
    CHECK_THROWS_AS(P(R, "x ^ y"), parse_error);
    CHECK_THROWS_AS(P(R, "x / y"), parse_error);
    CHECK_THROWS_AS(P(R, "x y z!"), parse_error);
    try {
        parse_polynomial("x +\n q", R);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
}

TEST_CASE("printing round-trips exactly") {
    auto R = test_util::ring_xyz();
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        Polynomial p = test_util::random_polynomial(rng, R, 6, 4, 12);
        CHECK(parse_polynomial(p.str(), R) == p);
    }
    CHECK(Polynomial::zero(R).str() == "0");
    CHECK(P(R, "-x - 1").str() == "-x - 1");
    CHECK(P(R, "2/3*y").str() == "2/3*y");
}

TEST_CASE("ideal files parse ring, ideals and claims") {
    IdealFile file = parse_ideal_file(
        "ring x, y;\n"
        "ideal M = x^2, x*y;\n"
        "ideal A = x;\n"
        "ideal B = x^2, y;\n"
        "ideal Z = 0;\n"
        "claim c : M = [A, B] kind=irreducible;\n");
    CHECK(file.ring->arity() == 2);
    CHECK(file.ideal("M").generators.size() == 2);
    CHECK(file.ideal("Z").is_zero_ideal());
    REQUIRE(file.find_claim("c"));
    CHECK(file.find_claim("c")->kind == DecompKind::Irreducible);
    CHECK(file.find_claim("c")->components.size() == 2);
}

TEST_CASE("ideal file errors") {
    // Empty generator list must be written '0'.
    CHECK_THROWS_AS(parse_ideal_file("ring x; ideal Z = ;"), parse_error);
    CHECK_THROWS_AS(parse_ideal_file("ring x; ideal A = x; ideal A = x;"), parse_error);
    CHECK_THROWS_AS(parse_ideal_file("ring x; ideal A = y;"), parse_error);
    CHECK_THROWS_AS(parse_ideal_file("ideal A = x;"), parse_error);
    CHECK_THROWS_AS(parse_ideal_file("ring x, x; ideal A = x;"), parse_error);
    CHECK_THROWS_AS(parse_ideal_file("ring x; claim c : B = [A] kind=primary;"),
                    parse_error);
    CHECK_THROWS_AS(
        parse_ideal_file("ring x; ideal A = x; claim c : A = [A] kind=banana;"),
        parse_error);
    // 17 variables exceed the cap.
    CHECK_THROWS_AS(
        parse_ideal_file("ring a,b,c,d,e,f,g,h,i,j,k,l,m,n,o,p,q; ideal A = a;"),
        parse_error);
}

TEST_CASE("variable collection for inline input") {
    auto names = collect_variable_names({"x^2 + z", "y - x"});
    CHECK(names == std::vector<std::string>{"x", "z", "y"});
}
