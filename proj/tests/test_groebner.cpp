#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kxy/groebner.hpp"
#include "test_util.hpp"

using namespace kxy;
using testutil::pp;

namespace {

bool scalar_multiple(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Rat r = a.leading_coeff() / b.leading_coeff();
    return a == b * r;
}

bool contains_scalar_multiple(const std::vector<Poly>& basis, const Poly& f) {
    for (const Poly& g : basis)
        if (scalar_multiple(g, f)) return true;
    return false;
}

Poly expand(const std::vector<Poly>& cof, const std::vector<Poly>& gens) {
    Poly s(gens[0].ring());
    for (std::size_t i = 0; i < gens.size(); ++i) s = s + cof[i] * gens[i];
    return s;
}

}  // namespace

TEST_CASE("buchberger basics") {
    std::vector<Poly> gens{pp("1 + 2*x*y"), pp("x^2")};
    GroebnerBasis gb = buchberger(gens, MonomialOrder::grlex());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == pp("1"));
    CHECK(expand(gb.cofactors[0], gens) == pp("1"));

    std::vector<Poly> circle{pp("x^2 + y^2 - 1"), pp("x - y")};
    GroebnerBasis lexgb = buchberger(circle, MonomialOrder::lex());
    CHECK(contains_scalar_multiple(lexgb.basis, pp("2*y^2 - 1")));
    for (std::size_t i = 0; i < lexgb.basis.size(); ++i)
        CHECK(expand(lexgb.cofactors[i], circle) == lexgb.basis[i]);

    std::vector<Poly> none;
    CHECK_THROWS_AS(buchberger(none, MonomialOrder::grlex()), PrecondError);
    std::vector<Poly> zeros{Poly(Ring::xy())};
    CHECK_THROWS_AS(buchberger(zeros, MonomialOrder::grlex()), PrecondError);
}

TEST_CASE("reduced basis is strategy independent") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Poly> gens;
        int n = static_cast<int>(rng.in(1, 3));
        for (int i = 0; i < n; ++i) gens.push_back(testutil::random_poly(rng, Ring::xy(), 4, 3));
        MonomialOrder order = rng.below(2) == 0 ? MonomialOrder::grlex() : MonomialOrder::lex();
        GroebnerBasis a = buchberger(gens, order, {}, PairStrategy::normal);
        GroebnerBasis b = buchberger(gens, order, {}, PairStrategy::first);
        CHECK(a.basis == b.basis);
        for (std::size_t i = 0; i < a.basis.size(); ++i)
            CHECK(expand(a.cofactors[i], gens) == a.basis[i]);
    }
}

TEST_CASE("ideal membership with cofactors") {
    std::vector<Poly> gens{pp("1 + 2*x*y"), pp("x^2")};
    auto cof = ideal_member(pp("1"), gens);
    REQUIRE(cof);
    CHECK(expand(*cof, gens) == pp("1"));

    std::vector<Poly> just_x{pp("x")};
    auto cx = ideal_member(pp("x"), just_x);
    REQUIRE(cx);
    CHECK((*cx)[0] == pp("1"));

    std::vector<Poly> xy{pp("x"), pp("y")};
    CHECK(!ideal_member(pp("1"), xy));
    CHECK(!ideal_member(pp("x*y + 3"), xy));
    auto cxy = ideal_member(pp("x^2*y + y"), xy);
    REQUIRE(cxy);
    CHECK(expand(*cxy, xy) == pp("x^2*y + y"));
}

TEST_CASE("unimodular gradient certificates") {
    Poly p = pp("x + x^2*y");
    auto cert = unimodular_cert(p);
    REQUIRE(cert);
    CHECK(partial(p, Var::x) * cert->u + partial(p, Var::y) * cert->v ==
          pp("1"));

    auto cx = unimodular_cert(pp("x"));
    REQUIRE(cx);
    CHECK(cx->u == pp("1"));
    CHECK(cx->v.is_zero());

    CHECK(!unimodular_cert(pp("x^2 + y^2")));
    CHECK(!unimodular_cert(pp("x*y")));
    CHECK_THROWS_AS(unimodular_cert(pp("7")), PrecondError);
}

TEST_CASE("subalgebra membership") {
    auto cert = subalg_member(pp("x"), pp("x + y^2"), pp("y"));
    REQUIRE(cert);
    CHECK(cert->expression == parse_poly("P - Q^2", Ring::PQ()));

    CHECK(!subalg_member(pp("x"), pp("x^2"), pp("y^2")));

    Poly p = pp("x + x^2*y");
    auto self = subalg_member(p, p, pp("y"));
    REQUIRE(self);
    CHECK(self->expression == parse_poly("P", Ring::PQ()));

    // K[x,y] contains everything.
    testutil::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = testutil::random_poly(rng, Ring::xy(), 6, 4);
        auto m = subalg_member(f, pp("x"), pp("y"));
        REQUIRE(m);
        std::array<Poly, 2> imgs{pp("x"), pp("y")};
        CHECK(substitute(m->expression, imgs) == f);
    }
}

TEST_CASE("automorphism recognition") {
    CHECK(is_automorphism(Endo::identity()).is_auto);

    AutoCheck bad = is_automorphism(Endo{pp("x^2"), pp("y^2")});
    CHECK(!bad.is_auto);
    CHECK(!bad.inverse);

    AutoCheck shear = is_automorphism(Endo{pp("x + y^2"), pp("y")});
    REQUIRE(shear.is_auto);
    CHECK(shear.inverse->img_x == pp("x - y^2"));

    // (p, x^2) with p = x + x^2*y is not an automorphism: the Jacobian
    // determinant vanishes on a curve.
    CHECK(!is_automorphism(Endo{pp("x + x^2*y"), pp("x^2")}).is_auto);

    testutil::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        TameWord w = random_tame(rng.next(), static_cast<int>(rng.in(0, 3)), 2, 2);
        Endo phi = to_endo(w);
        AutoCheck ac = is_automorphism(phi);
        REQUIRE(ac.is_auto);
        CHECK(compose(phi, *ac.inverse) == Endo::identity());
        CHECK(*ac.inverse == to_endo(invert(w)));
    }
}

TEST_CASE("budget errors surface as such") {
    Budget tight;
    tight.reduction_steps = 3;
    std::vector<Poly> gens{pp("x^2 + y^2 - 1"), pp("x^3 - y"), pp("x*y - 2")};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex(), tight), BudgetError);
}
