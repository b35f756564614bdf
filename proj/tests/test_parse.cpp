#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kxy/parse.hpp"
#include "test_util.hpp"

using namespace kxy;
using testutil::pp;

TEST_CASE("grammar basics") {
    Poly p = pp("x + x^2*y");
    CHECK(p.coeff(Mono{{1, 0, 0, 0}}) == 1);
    CHECK(p.coeff(Mono{{2, 1, 0, 0}}) == 1);
    CHECK(pp("0").is_zero());
    CHECK(pp("1/2*x") == pp("x") * make_rat(1, 2));
    CHECK(pp("-x^2") == -pp("x^2"));
    CHECK(pp("(x+y)^2") == pp("x^2 + 2*x*y + y^2"));
    CHECK(pp("2 - -3") == pp("5"));
    CHECK(pp(" x +  y ") == pp("x+y"));
}

TEST_CASE("parse errors carry positions") {
    try {
        pp("x + ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos() == 4);
    }
    CHECK_THROWS_AS(pp("x y"), ParseError);          // implicit multiplication
    CHECK_THROWS_AS(pp("x^-2"), ParseError);         // negative exponent
    CHECK_THROWS_AS(pp("z + 1"), ParseError);        // unknown variable
    CHECK_THROWS_AS(pp("(x + y"), ParseError);       // unbalanced
    CHECK_THROWS_AS(pp("x^1/2"), ParseError);        // fractional exponent shape
    CHECK_THROWS_AS(pp("1/0"), ParseError);          // zero denominator
    CHECK_THROWS_AS(parse_poly("x", Ring::PQ()), ParseError);
}

TEST_CASE("print canonical forms") {
    CHECK(print_poly(pp("x^2 - y^2")) == "x^2 - y^2");
    CHECK(print_poly(pp("1/2*x")) == "1/2*x");
    CHECK(print_poly(Poly(Ring::xy())) == "0");
    CHECK(print_poly(pp("-x + 3")) == "-x + 3");
    CHECK(print_poly(pp("y + x + x^2*y")) == "x^2*y + x + y");
}

TEST_CASE("parse of print is identity on random polys") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        Poly f = testutil::random_poly(rng, Ring::xy(), 12, 7);
        if (rng.below(3) == 0) f = f * make_rat(1, rng.in(2, 9));
        CHECK(pp(print_poly(f)) == f);
    }
}

TEST_CASE("print of parse is idempotent") {
    for (const char* src : {"x+y", "-(x - y)*3", "2*(x + 1/3)^2", "0", "y^4 - x"}) {
        std::string once = print_poly(pp(src));
        CHECK(print_poly(pp(once)) == once);
    }
}

TEST_CASE("unbalanced parentheses always rejected") {
    testutil::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = testutil::random_poly(rng, Ring::xy(), 6, 4);
        std::string s = print_poly(f);
        // Corrupt with one unmatched parenthesis at a random spot.
        std::size_t at = static_cast<std::size_t>(rng.below(static_cast<long>(s.size() + 1)));
        s.insert(at, rng.below(2) == 0 ? "(" : ")");
        CHECK_THROWS_AS(pp(s), ParseError);
    }
}
