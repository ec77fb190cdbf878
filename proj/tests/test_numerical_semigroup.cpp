#include <doctest.h>

#include <stdexcept>

#include "skab/numerical_semigroup.hpp"

using namespace skab;

TEST_CASE("trivial and smallest semigroups")
{
    const auto n = NumericalSemigroup::from_generators({1});
    CHECK(n.genus() == 0);
    CHECK(n.conductor() == 0);
    CHECK(n.gaps().empty());
    CHECK(n.contains(0));
    CHECK(n.contains(17));

    const auto s23 = NumericalSemigroup::from_generators({3, 2});
    CHECK(s23.genus() == 1);
    CHECK(s23.conductor() == 2);
    CHECK(std::vector<Int>(s23.gaps().begin(), s23.gaps().end()) == std::vector<Int>{1});
    CHECK(s23.elements_up_to(5) == std::vector<Int>{0, 2, 3, 4, 5});
}

TEST_CASE("rejects non-semigroups")
{
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), std::domain_error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), std::domain_error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), std::domain_error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), std::domain_error);
}

TEST_CASE("Weierstrass semigroup for s = 1")
{
    const auto h = weierstrass_semigroup(make_params(1));
    CHECK(h.genus() == 196);
    CHECK(h.contains(0));
    CHECK(h.contains(90));
    CHECK_FALSE(h.contains(-3));
    CHECK_FALSE(h.contains(1));
    CHECK(h.elements_up_to(0) == std::vector<Int>{0});
    CHECK(h.elements_up_to(41) == std::vector<Int>{0, 40});
    CHECK_FALSE(h.contains(h.conductor() - 1));
    for (Int n = h.conductor(); n < h.conductor() + 200; ++n)
        CHECK(h.contains(n));
    // at most 2g - 1
    CHECK(h.conductor() <= 2 * h.genus());
}

TEST_CASE("additive closure on the table range")
{
    const auto h = weierstrass_semigroup(make_params(1));
    const Int top = h.table_limit();
    for (Int x = 0; x <= top; ++x) {
        if (!h.contains(x))
            continue;
        for (Int y = 0; x + y <= top; ++y)
            if (h.contains(y))
                REQUIRE(h.contains(x + y));
    }
    CHECK(h.table_limit() >= h.conductor() + 65);
}

TEST_CASE("genus matches the curve for s = 1, 2")
{
    for (Int s : {1, 2}) {
        const CurveParams p = make_params(s);
        const auto h = weierstrass_semigroup(p);
        CHECK(h.genus() == p.genus);
        CHECK(Int(h.gaps().size()) == h.genus());
    }
}
