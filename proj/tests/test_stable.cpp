#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kxy/groebner.hpp"
#include "kxy/stable.hpp"
#include "test_util.hpp"

using namespace kxy;
using testutil::pp;

TEST_CASE("degree_trace") {
    DegreeTrace sq = degree_trace(Endo{pp("x^2"), pp("y^2")}, 3);
    CHECK(sq.degrees == std::vector<std::pair<int, int>>{{2, 2}, {4, 4}, {8, 8}});
    CHECK(!sq.truncated);

    DegreeTrace shear = degree_trace(Endo{pp("x + y^2"), pp("y")}, 3);
    CHECK(shear.degrees == std::vector<std::pair<int, int>>{{2, 1}, {2, 1}, {2, 1}});

    DegreeTrace id = degree_trace(Endo::identity(), 2);
    CHECK(id.degrees == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});

    DegreeTrace zero = degree_trace(Endo{Poly(Ring::xy()), Poly(Ring::xy())}, 1);
    CHECK(zero.degrees ==
          std::vector<std::pair<int, int>>{{kNegInfDegree, kNegInfDegree}});

    CHECK_THROWS_AS(degree_trace(Endo::identity(), 0), PrecondError);

    SUBCASE("degree cap truncates instead of failing") {
        DegreeTrace t = degree_trace(Endo{pp("x^2"), pp("y^2")}, 12);
        CHECK(t.truncated);
        REQUIRE(t.degrees.size() == 9);  // 2^9 = 512 fits the default cap
        CHECK(t.degrees.back() == std::pair<int, int>{512, 512});
    }

    SUBCASE("conjugated shear stabilizes") {
        TameWord word = random_tame(19, 2, 2, 2);
        DegreeTrace t = degree_trace(
            compose(compose(to_endo(word), Endo{pp("x + y^2"), pp("y")}),
                    to_endo(invert(word))),
            6);
        REQUIRE(t.degrees.size() >= 3);
        for (std::size_t k = 2; k < t.degrees.size(); ++k)
            CHECK(t.degrees[k] == t.degrees[1]);
    }
}

TEST_CASE("fixed_polys") {
    FixedSpace shear = fixed_polys(Endo{pp("x + y^2"), pp("y")}, 1);
    REQUIRE(shear.basis.size() == 2);
    CHECK(shear.basis[0] == pp("1"));
    CHECK(shear.basis[1] == pp("y"));

    FixedSpace id = fixed_polys(Endo::identity(), 2);
    CHECK(id.basis.size() == 6);

    FixedSpace sq = fixed_polys(Endo{pp("x^2"), pp("y^2")}, 1);
    REQUIRE(sq.basis.size() == 1);
    CHECK(sq.basis[0].is_constant());

    CHECK_THROWS_AS(fixed_polys(Endo::identity(), -1), PrecondError);

    SUBCASE("identity dimension formula") {
        for (int d = 0; d <= 4; ++d)
            CHECK(static_cast<int>(fixed_polys(Endo::identity(), d).basis.size()) ==
                  (d + 1) * (d + 2) / 2);
    }

    SUBCASE("every basis element is fixed, for random tame maps") {
        testutil::Rng rng(43);
        for (int trial = 0; trial < 15; ++trial) {
            Endo phi = to_endo(random_tame(rng.next(), 2, 2, 2));
            FixedSpace space = fixed_polys(phi, 3);
            REQUIRE(!space.basis.empty());
            for (const Poly& f : space.basis) CHECK(apply(phi, f) == f);
        }
    }
}

TEST_CASE("cor17_consistency") {
    Cor17Report good = cor17_consistency(Endo{pp("x + y^2"), pp("y")}, 2);
    CHECK(good.status == Cor17Report::Status::consistent);
    CHECK(good.keller);
    CHECK(good.has_fixed);

    Cor17Report bad = cor17_consistency(Endo{pp("x^2"), pp("y^2")}, 2);
    CHECK(bad.status == Cor17Report::Status::premise_not_met);
    CHECK(!bad.keller);

    SUBCASE("no violation across a tame corpus") {
        testutil::Rng rng(47);
        for (int trial = 0; trial < 15; ++trial) {
            Endo phi = to_endo(random_tame(rng.next(), 2, 2, 2));
            Cor17Report rep = cor17_consistency(phi, 2);
            CHECK(rep.status != Cor17Report::Status::theorem_violation);
            CHECK(rep.detail.find("THEOREM VIOLATION") == std::string::npos);
        }
    }
}
