#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kxy/retract.hpp"
#include "test_util.hpp"

using namespace kxy;
using testutil::pp;

namespace {

// Re-verify a certificate from scratch: the oracle for every constructor.
void check_cert(const RetractionCert& cert) {
    const Endo& rho = cert.retraction;
    CHECK(apply(rho, rho.img_x) == rho.img_x);
    CHECK(apply(rho, rho.img_y) == rho.img_y);
    CHECK(apply(rho, cert.generator) == cert.generator);
    CHECK(cert.witness_x.eval(cert.generator) == rho.img_x);
    CHECK(cert.witness_y.eval(cert.generator) == rho.img_y);
}

}  // namespace

TEST_CASE("subduce") {
    Poly p = pp("x + x^2*y");
    Poly f = p * p + p * Rat(3);
    auto h = subduce(f, p);
    REQUIRE(h);
    CHECK(h->coeffs() == std::vector<Rat>{Rat(0), Rat(3), Rat(1)});
    CHECK(h->eval(p) == f);

    auto hx = subduce(pp("x"), pp("x"));
    REQUIRE(hx);
    CHECK(hx->coeffs() == std::vector<Rat>{Rat(0), Rat(1)});

    CHECK(!subduce(pp("y"), pp("x")));
    CHECK(!subduce(pp("x + y"), pp("x + x^2*y")));

    auto hc = subduce(pp("5"), pp("x"));
    REQUIRE(hc);
    CHECK(hc->eval(pp("x")) == pp("5"));

    CHECK_THROWS_AS(subduce(pp("x"), pp("2")), PrecondError);

    SUBCASE("random membership round trip") {
        testutil::Rng rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            Poly base = testutil::random_poly(rng, Ring::xy(), 4, 2);
            if (base.is_constant()) continue;
            Poly val(Ring::xy());
            Poly power = pp("1");
            for (int k = 0; k <= 3; ++k) {
                val = val + power * Rat(rng.in(-5, 5));
                power = power * base;
            }
            auto w = subduce(val, base);
            REQUIRE(w);
            CHECK(w->eval(base) == val);
        }
    }
}

TEST_CASE("am_reduce") {
    Poly p = pp("x + x^2*y");

    SUBCASE("the univariate shadow (t^2 + t, t^2)") {
        AmResult r = am_reduce(p * p + p, p * p);
        REQUIRE(r.ok);
        CHECK(r.h == p);
        CHECK(r.h_is_first);
        REQUIRE(r.steps.size() == 2);
        CHECK(r.steps[0].reduce_first);
        CHECK(r.steps[0].c == Rat(1));
        CHECK(r.steps[0].k == 1);
        CHECK(!r.steps[1].reduce_first);
        CHECK(r.steps[1].k == 2);
    }

    SUBCASE("one side zero") {
        AmResult r = am_reduce(p, Poly(Ring::xy()));
        REQUIRE(r.ok);
        CHECK(r.h == p);
        CHECK(r.steps.empty());
        CHECK_THROWS_AS(am_reduce(Poly(Ring::xy()), Poly(Ring::xy())), PrecondError);
    }

    SUBCASE("degree divisibility failure") {
        AmResult r = am_reduce(pp("x^2"), pp("x^3"));
        CHECK(!r.ok);
        CHECK(r.error.find("not an AM-reducible pair") != std::string::npos);
    }

    SUBCASE("leading terms that no scalar cancels") {
        AmResult r = am_reduce(pp("y^4"), pp("x^2"));
        CHECK(!r.ok);
        CHECK(r.error.find("no scalar cancels") != std::string::npos);
    }

    SUBCASE("replayed step log reaches (h, 0)") {
        testutil::Rng rng(29);
        for (int trial = 0; trial < 40; ++trial) {
            Poly base = testutil::random_poly(rng, Ring::xy(), 3, 2);
            if (base.is_constant()) continue;
            // Genuine K[base] pairs so reduction succeeds.
            Poly f = base * base + base * Rat(rng.in(-3, 3));
            Poly g = base * Rat(rng.in(1, 3));
            AmResult r = am_reduce(f, g);
            REQUIRE(r.ok);
            Poly a = f, b = g;
            for (const AmStep& s : r.steps) {
                Poly& big = s.reduce_first ? a : b;
                const Poly& small = s.reduce_first ? b : a;
                big = big - pow(small, s.k) * s.c;
            }
            CHECK((r.h_is_first ? b : a).is_zero());
            CHECK((r.h_is_first ? a : b) == r.h);
            // K[f,g] = K[h]: both inputs subduce against the survivor.
            CHECK(subduce(f, r.h));
            CHECK(subduce(g, r.h));
        }
    }
}

TEST_CASE("verify_retraction") {
    Poly p = pp("x + x^2*y");

    RetractionCheck good = verify_retraction(Endo{p, Poly(Ring::xy())});
    REQUIRE(good.proper());
    CHECK(good.cert->generator == p);
    check_cert(*good.cert);

    CHECK(verify_retraction(Endo::identity()).status ==
          RetractionCheck::Status::identity_image);
    CHECK(verify_retraction(Endo{pp("1"), pp("2")}).status ==
          RetractionCheck::Status::constants_image);
    CHECK(verify_retraction(Endo{pp("x^2"), Poly(Ring::xy())}).status ==
          RetractionCheck::Status::not_idempotent);

    // A constant second image still retracts onto K[x].
    RetractionCheck proj = verify_retraction(Endo{pp("x"), pp("3")});
    REQUIRE(proj.proper());
    CHECK(proj.cert->generator == pp("x"));
    check_cert(*proj.cert);
    RetractionCheck axis = verify_retraction(Endo{pp("x"), Poly(Ring::xy())});
    REQUIRE(axis.proper());
    CHECK(axis.cert->generator == pp("x"));
}

TEST_CASE("normalize_retract") {
    SUBCASE("already in normal form") {
        NormalizeResult r = normalize_retract(Endo{pp("x + x^2*y"), Poly(Ring::xy())});
        REQUIRE(r.ok);
        CHECK(r.p_normal == pp("x + x^2*y"));
        CHECK(r.q == pp("x^2"));
        CHECK(to_endo(r.psi) == Endo::identity());
        CHECK(apply(to_endo(r.psi), r.generator) == r.p_normal);
    }

    SUBCASE("swapped coordinates") {
        NormalizeResult r = normalize_retract(Endo{Poly(Ring::xy()), pp("y + y^2*x")});
        REQUIRE(r.ok);
        CHECK(r.generator == pp("y + y^2*x"));
        CHECK(r.p_normal == pp("x + x^2*y"));
        CHECK(r.q == pp("x^2"));
        CHECK(apply(to_endo(r.psi), r.generator) == r.p_normal);
    }

    SUBCASE("coordinate retract") {
        NormalizeResult r = normalize_retract(Endo{pp("x"), Poly(Ring::xy())});
        REQUIRE(r.ok);
        CHECK(r.p_normal == pp("x"));
        CHECK(r.q.is_zero());
    }

    SUBCASE("failure propagates") {
        NormalizeResult r = normalize_retract(Endo::identity());
        CHECK(!r.ok);
        CHECK(!r.error.empty());
    }

    SUBCASE("conjugated round trip") {
        testutil::Rng rng(37);
        int budget_failures = 0;
        for (int trial = 0; trial < 25; ++trial) {
            // q one-variable of small degree, psi a short tame word.
            Poly q(Ring::xy());
            int dq = static_cast<int>(rng.in(0, 2));
            for (int i = 0; i <= dq; ++i) {
                Mono m;
                m.e[0] = static_cast<std::uint16_t>(i);
                q.add_term(m, Rat(rng.in(-3, 3)));
            }
            TameWord w = random_tame(rng.next(), static_cast<int>(rng.in(0, 2)), 2, 2);
            Endo base{pp("x") + pp("y") * q, Poly(Ring::xy())};
            try {
                Endo conj = compose(compose(to_endo(invert(w)), base), to_endo(w));
                RetractionCheck chk = verify_retraction(conj);
                REQUIRE(chk.proper());
                check_cert(*chk.cert);
                // The recovered generator generates the same subalgebra.
                Poly expect = apply(to_endo(invert(w)), base.img_x);
                auto rel = subduce(chk.cert->generator, expect);
                REQUIRE(rel);
                CHECK(rel->degree() == 1);
                NormalizeResult nr = normalize_retract(conj);
                REQUIRE(nr.ok);
                CHECK(nr.p_normal == pp("x") + pp("y") * nr.q);
            } catch (const BudgetError&) {
                ++budget_failures;
            }
        }
        CHECK(budget_failures <= 2);
    }
}

TEST_CASE("cor12_retraction") {
    Poly p = pp("x + x^2*y");
    Cor12Result r = cor12_retraction(p, Endo{pp("x"), Poly(Ring::xy())});
    REQUIRE(r.ok);
    CHECK(r.cert->retraction.img_x == p);
    CHECK(r.cert->retraction.img_y.is_zero());
    check_cert(*r.cert);

    Cor12Result trivial = cor12_retraction(pp("x"), Endo::identity());
    REQUIRE(trivial.ok);
    CHECK(trivial.cert->retraction.img_x == pp("x"));

    Cor12Result bad = cor12_retraction(p, Endo::identity());
    CHECK(!bad.ok);
    CHECK(bad.error == "phi(p) != x");
}

TEST_CASE("cor31_retraction") {
    SUBCASE("y divides the homogeneous gcd") {
        Cor31Result r = cor31_retraction(pp("x + x^2*y"));
        REQUIRE(r.status == Cor31Result::Status::retract);
        CHECK(r.divisor == pp("x^2*y"));
        CHECK(*r.c == Rat(0));
        CHECK(r.cert->retraction.img_y.is_zero());
        check_cert(*r.cert);
    }

    SUBCASE("rational root c = 1") {
        Poly p = pp("x + x^2 - y^2");
        Cor31Result r = cor31_retraction(p);
        REQUIRE(r.status == Cor31Result::Status::retract);
        CHECK(r.divisor == pp("x^2 - y^2"));
        CHECK(*r.c == Rat(1));
        CHECK(r.cert->retraction.img_y == p);
        CHECK(apply(r.cert->retraction, p) == p);
        check_cert(*r.cert);
    }

    SUBCASE("no rational root") {
        Cor31Result r = cor31_retraction(pp("x + x^2 + y^2"));
        CHECK(r.status == Cor31Result::Status::extension_required);
        CHECK(r.divisor == pp("x^2 + y^2"));
    }

    SUBCASE("no homogeneous divisor") {
        Cor31Result r = cor31_retraction(pp("x + x^2 + y^3"));
        CHECK(r.status == Cor31Result::Status::no_homogeneous_divisor);
    }

    SUBCASE("coordinate case") {
        Cor31Result r = cor31_retraction(pp("x"));
        REQUIRE(r.status == Cor31Result::Status::retract);
        CHECK(*r.c == Rat(0));
        check_cert(*r.cert);
    }

    SUBCASE("form preconditions") {
        CHECK_THROWS_AS(cor31_retraction(pp("2*x + y^2")), PrecondError);
        CHECK_THROWS_AS(cor31_retraction(pp("x + 1")), PrecondError);
        CHECK_THROWS_AS(cor31_retraction(pp("y^2")), PrecondError);
    }
}

TEST_CASE("cor14_lemmas") {
    Cor14Report a = cor14_lemmas(pp("x + x^2*y"));
    CHECK(a.divisible_by_x);
    CHECK(!a.y_axis_edge);
    CHECK(!a.consistent_with_jacobian_mate);

    Cor14Report b = cor14_lemmas(pp("y"));
    CHECK(!b.divisible_by_x);
    CHECK(b.y_axis_edge);
    CHECK(b.consistent_with_jacobian_mate);

    Cor14Report c = cor14_lemmas(pp("x"));
    CHECK(c.divisible_by_x);
    CHECK(!c.y_axis_edge);

    CHECK_THROWS_AS(cor14_lemmas(Poly(Ring::xy())), PrecondError);
}
