#include "test_support.hpp"

#include "sfknot/error.hpp"
#include "sfknot/hfk.hpp"

#include <doctest.h>

using namespace sfknot;

TEST_SUITE("hfk")
{
    TEST_CASE("figure-eight table")
    {
        HfkTable h = hfk_alternating(normalize_alexander(support::symmetric({3, -1})), 0);
        CHECK(h.ranks.size() == 3);
        CHECK(h.ranks.at({1, 2}) == 1);
        CHECK(h.ranks.at({0, 0}) == 3);
        CHECK(h.ranks.at({-1, -2}) == 1);
        CHECK(euler_characteristic(h) == support::symmetric({3, -1}));
        CHECK(genus_from_table(h) == 1);
        CHECK(top_group_parity(h).parity() == Parity::Odd);
        CHECK(is_thin(h, 0));
    }

    TEST_CASE("unknot table")
    {
        HfkTable h = hfk_alternating(normalize_alexander(LaurentPoly(1)), 0);
        CHECK(h.ranks.size() == 1);
        CHECK(h.ranks.at({0, 0}) == 1);
        CHECK(euler_characteristic(h) == LaurentPoly(1));
        CHECK(genus_from_table(h) == 0);
    }

    TEST_CASE("right-handed trefoil table")
    {
        KnotInvariants t = support::knot(Format::Dt, "4 6 2");
        HfkTable h = hfk_alternating(t);
        for (long i : {1, 0, -1}) CHECK(h.ranks.at({i, 2 * (i + 1)}) == 1);
        CHECK(euler_characteristic(h) == support::symmetric({-1, 1}));
        TopGroupParity p = top_group_parity(h);
        CHECK(p.top == 1);
        CHECK(p.parity() == Parity::Even);
    }

    TEST_CASE("hfk_alternating refuses non-alternating knots")
    {
        KnotInvariants inv = support::knot(Format::Dt, "4 6 2");
        inv.alternating = false;
        try {
            hfk_alternating(inv);
            FAIL("expected NotAlternating");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAlternating);
        }
    }

    TEST_CASE("mixed parity at the top grading")
    {
        HfkTable h;
        h.add(2, 0, 1);
        h.add(2, 2 * 1, 1);
        CHECK(top_group_parity(h).has_even);
        CHECK(top_group_parity(h).has_odd);
        CHECK_THROWS_AS(top_group_parity(h).parity(), Error);
    }

    TEST_CASE("euler characteristic roundtrip and genus on the census")
    {
        for (auto& r : support::census()) {
            if (!r.alternating) continue;
            KnotInvariants inv = assemble(r.name, realize_dt(parse_dt(r.dt)));
            HfkTable h = hfk_alternating(inv);
            REQUIRE(euler_characteristic(h) == inv.alexander.poly);
            REQUIRE(genus_from_table(h) == inv.alexander.degree);
            REQUIRE(is_thin(h, inv.signature));
            REQUIRE_NOTHROW(top_group_parity(h).parity());
        }
    }

    TEST_CASE("table text format")
    {
        HfkTable h = hfk_alternating(normalize_alexander(support::symmetric({-1, 1})), -2);
        std::string text = format_hfk(h);
        CHECK(text == "1 2 1\n0 1 1\n-1 0 1\n");
        CHECK(parse_hfk(text) == h);
        HfkTable half = parse_hfk("# comment\n2 3/2 4\n1 1.5 2\n0 -1/2 1\n");
        CHECK(half.ranks.at({2, 3}) == 4);
        CHECK(half.ranks.at({1, 3}) == 2);
        CHECK(half.ranks.at({0, -1}) == 1);
        CHECK(parse_hfk(format_hfk(half)) == half);
        CHECK_THROWS_AS(parse_hfk("1 1"), Error);
        CHECK_THROWS_AS(parse_hfk("1 0.3 1"), Error);
        CHECK_THROWS_AS(parse_hfk("1 0 -2"), Error);
    }
}
