#include "oracles.hpp"
#include "test_support.hpp"

#include "sfknot/codec.hpp"
#include "sfknot/diagram.hpp"
#include "sfknot/error.hpp"
#include "sfknot/invariants.hpp"

#include <doctest.h>

using namespace sfknot;

namespace {

// Seifert circles by following the oriented smoothing edge by edge: entering a
// crossing along the under strand leaves along the over strand and vice versa.
int smoothing_cycles(const PlanarDiagram& d)
{
    const int m = d.edge_count();
    if (m == 0) return 1;
    std::vector<char> seen(m, 0);
    int cycles = 0;
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ++cycles;
        int e = start;
        while (!seen[e]) {
            seen[e] = 1;
            auto [c, slot] = d.head(e);
            const Crossing& x = d.crossing(c);
            e = slot == 0 ? x.edge[x.out_over_slot()] : x.edge[2];
        }
    }
    return cycles;
}

PlanarDiagram dt(const char* s) { return realize_dt(parse_dt(s)); }

}  // namespace

TEST_SUITE("diagram")
{
    TEST_CASE("Seifert circle counts")
    {
        CHECK(seifert_circles(dt("4 6 2")) == 2);
        CHECK(seifert_circles(dt("")) == 1);
        CHECK(seifert_circles(dt("4 6 8 2")) == 3);
        CHECK(seifert_circles(realize_braid(parse_braid("3: 1 -2 1 -2"))) == 3);
    }

    TEST_CASE("Seifert circles agree with smoothing traversal on the census")
    {
        for (auto& r : support::census()) {
            PlanarDiagram d = dt(r.dt.c_str());
            REQUIRE(seifert_circles(d) == smoothing_cycles(d));
            REQUIRE((int)seifert_circle_list(d).size() == smoothing_cycles(d));
        }
    }

    TEST_CASE("trefoil Seifert matrix")
    {
        SeifertData sd = seifert_matrix(dt("4 6 2"));
        REQUIRE(sd.V.size() == 2);
        LaurentPoly det = det_laurent(alexander_matrix(sd.V));
        CHECK(normalize_alexander(det).poly == support::symmetric({-1, 1}));
        CHECK(symmetric_signature(mat_add(sd.V, transpose(sd.V))) == -2);
        CHECK(sd.basis.size() == 2);
        CHECK(!sd.basis_description.empty());
    }

    TEST_CASE("unknot and figure-eight Seifert matrices")
    {
        SeifertData u = seifert_matrix(dt(""));
        CHECK(u.V.empty());
        CHECK(alexander(u).poly == LaurentPoly(1));
        SeifertData f = seifert_matrix(dt("4 6 8 2"));
        CHECK(f.V.size() == 2);
        CHECK(alexander(f).poly == support::symmetric({3, -1}));
        CHECK(signature(f) == 0);
    }

    TEST_CASE("census: rank parity, unimodularity, Fox and Goeritz oracles")
    {
        for (auto& r : support::census()) {
            CAPTURE(r.name);
            PlanarDiagram d = dt(r.dt.c_str());
            SeifertData sd = seifert_matrix(d);
            int b = d.crossing_count() - sd.seifert_circle_count + 1;
            REQUIRE((int)sd.V.size() == b);
            REQUIRE(b % 2 == 0);
            IntMatrix skew = sd.V;
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < b; ++j) skew[i][j] = sd.V[i][j] - sd.V[j][i];
            Int det = det_int(skew);
            REQUIRE((det == 1 || det == -1));

            AlexanderPolynomial a = alexander(sd);
            for (int tv : {2, 3, -1, 7}) {
                Rational t = tv;
                REQUIRE(oracle::equal_up_to_unit(oracle::fox_minor_det(d, t), a.poly.eval(t), t));
            }
            int sigma = signature(sd);
            REQUIRE(sigma == oracle::goeritz_signature(d, 0));
            REQUIRE(sigma == oracle::goeritz_signature(d, 1));
            REQUIRE(sigma == *r.signature);
        }
    }

    TEST_CASE("mirror negates the signature and keeps the Alexander polynomial")
    {
        for (auto& r : support::census()) {
            PlanarDiagram d = dt(r.dt.c_str());
            PlanarDiagram m = d.mirror();
            REQUIRE(m.writhe() == -d.writhe());
            SeifertData a = seifert_matrix(d), b = seifert_matrix(m);
            REQUIRE(signature(b) == -signature(a));
            REQUIRE(alexander(b) == alexander(a));
        }
    }

    TEST_CASE("alternation")
    {
        CHECK(is_alternating(dt("4 6 2")));
        CHECK(is_alternating(dt("")));
        CHECK_FALSE(is_alternating(dt("4 -6 2")));
        int mismatches = 0;
        for (auto& r : support::census())
            if (is_alternating(dt(r.dt.c_str())) != r.alternating) ++mismatches;
        CHECK(mismatches == 0);
    }

    TEST_CASE("faces of a planar knot diagram")
    {
        for (auto& r : support::census()) {
            PlanarDiagram d = dt(r.dt.c_str());
            REQUIRE(d.face_count() == d.crossing_count() + 2);
            for (int e = 0; e < d.edge_count(); ++e) REQUIRE(d.left_face(e) != d.right_face(e));
        }
    }

    TEST_CASE("structural validation of crossing data")
    {
        // in-under and out-under must be consecutive edges
        std::vector<Crossing> kink(1);
        kink[0].edge = {0, 0, 1, 1};
        kink[0].sign = 1;
        CHECK_NOTHROW(PlanarDiagram{kink});
        std::vector<Crossing> bad = kink;
        bad[0].edge = {0, 1, 0, 1};
        CHECK_THROWS_AS(PlanarDiagram{bad}, Error);
        // two crossings whose edges close up into two separate loops
        std::vector<Crossing> link(2);
        link[0].edge = {0, 3, 1, 2};
        link[0].sign = 1;
        link[1].edge = {2, 1, 3, 0};
        link[1].sign = 1;
        CHECK_THROWS_AS(PlanarDiagram{link}, Error);
    }
}
