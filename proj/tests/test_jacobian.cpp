#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kxy/jacobian.hpp"
#include "kxy/unipoly.hpp"
#include "test_util.hpp"

using namespace kxy;
using testutil::pp;

TEST_CASE("jac_det") {
    CHECK(jac_det(Endo{pp("x + y^2"), pp("y")}) == pp("1"));
    CHECK(jac_det(Endo{pp("x^2"), pp("y^2")}) == pp("4*x*y"));

    testutil::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Endo phi = to_endo(random_tame(rng.next(), static_cast<int>(rng.in(0, 4)), 2, 2));
        Poly d = jac_det(phi);
        CHECK(!d.is_zero());
        CHECK(d.is_constant());
    }
}

TEST_CASE("is_keller") {
    CHECK(is_keller(Endo{pp("x + y^2"), pp("y")}));
    CHECK(!is_keller(Endo{pp("x^2"), pp("y^2")}));
    CHECK(!is_keller(Endo{pp("x + x^2*y"), pp("x^2")}));
    CHECK(!is_keller(Endo{pp("x"), pp("x")}));  // det = 0
}

TEST_CASE("is_keller invariant under tame composition") {
    testutil::Rng rng(23);
    Endo keller{pp("x + y^3"), pp("y")};
    Endo non_keller{pp("x^2"), pp("y^2")};
    for (int trial = 0; trial < 20; ++trial) {
        Endo w = to_endo(random_tame(rng.next(), 3, 2, 2));
        CHECK(is_keller(compose(w, keller)));
        CHECK(is_keller(compose(keller, w)));
        CHECK(!is_keller(compose(w, non_keller)));
        CHECK(!is_keller(compose(non_keller, w)));
    }
}

TEST_CASE("alg_dependent") {
    CHECK(alg_dependent(pp("x + y"), pp("x^2 + 2*x*y + y^2")));
    CHECK(!alg_dependent(pp("x"), pp("y")));

    testutil::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = testutil::random_poly(rng, Ring::xy(), 6, 3);
        CHECK(alg_dependent(p, p));
        std::vector<Rat> hc;
        for (int i = 0, n = static_cast<int>(rng.in(1, 4)); i <= n; ++i)
            hc.push_back(Rat(rng.in(-5, 5)));
        UniPoly h(std::move(hc));
        CHECK(alg_dependent(p, h.eval(p)));
    }
}
