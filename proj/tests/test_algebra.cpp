#include "oracles.hpp"
#include "test_support.hpp"

#include "sfknot/algebra.hpp"
#include "sfknot/error.hpp"

#include <doctest.h>

using namespace sfknot;
using support::poly;
using support::uniform;

TEST_SUITE("algebra")
{
    TEST_CASE("Laurent arithmetic keeps no zero coefficients")
    {
        LaurentPoly a = poly({{1, 1}, {0, -1}});
        LaurentPoly b = poly({{1, -1}, {0, 1}});
        CHECK((a + b).is_zero());
        CHECK((a * b) == poly({{2, -1}, {1, 2}, {0, -1}}));
        CHECK(a.shifted(-1) == poly({{0, 1}, {-1, -1}}));
        CHECK(poly({{2, 3}, {-1, 1}}).mirrored() == poly({{-2, 3}, {1, 1}}));
    }

    TEST_CASE("printing")
    {
        CHECK(poly({{1, 1}, {0, -1}, {-1, 1}}).str() == "T - 1 + T^-1");
        CHECK(poly({{1, -1}, {0, 3}, {-1, -1}}).str() == "-T + 3 - T^-1");
        CHECK(LaurentPoly(1).str() == "1");
        CHECK(LaurentPoly().str() == "0");
    }

    TEST_CASE("evaluation")
    {
        LaurentPoly p = poly({{1, 1}, {0, -1}, {-1, 1}});
        CHECK(p.eval(Int(1)) == 1);
        CHECK(p.eval(Int(-1)) == -3);
        CHECK(p.eval(Rational(2)) == Rational(3, 2));
        CHECK_THROWS_AS(p.eval(Int(2)), Error);
    }

    TEST_CASE("exact division")
    {
        LaurentPoly a = poly({{1, 1}, {0, -1}});
        LaurentPoly b = poly({{3, 2}, {-2, 5}, {0, 1}});
        CHECK(exact_divide(a * b, a) == b);
        CHECK_THROWS_AS(exact_divide(b, poly({{1, 2}, {0, 2}})), Error);
    }

    TEST_CASE("determinant examples")
    {
        CHECK(det_laurent({}) == LaurentPoly(1));
        PolyMatrix diag = {{LaurentPoly::T(), LaurentPoly()}, {LaurentPoly(), LaurentPoly::monomial(1, -1)}};
        CHECK(det_laurent(diag) == LaurentPoly(1));
        IntMatrix v = {{-1, 1}, {0, -1}};
        LaurentPoly d = det_laurent(alexander_matrix(v));
        CHECK(d == poly({{2, 1}, {1, -1}, {0, 1}}));
    }

    TEST_CASE("det_laurent agrees with cofactor expansion on random matrices")
    {
        for (int trial = 0; trial < 400; ++trial) {
            int n = (int)uniform(1, 4);
            PolyMatrix m(n, std::vector<LaurentPoly>(n));
            for (auto& row : m)
                for (auto& e : row)
                    for (int k = 0; k < 2; ++k) e += LaurentPoly::monomial(Int(uniform(-3, 3)), uniform(-2, 2));
            REQUIRE(det_laurent(m) == oracle::cofactor_det(m));
        }
    }

    TEST_CASE("symmetric signature examples")
    {
        CHECK(symmetric_signature({{1, 0}, {0, 1}}) == 2);
        CHECK(symmetric_signature({{1, 0}, {0, -1}}) == 0);
        CHECK(symmetric_signature({{-2, 1}, {1, -2}}) == -2);
        CHECK(symmetric_signature({{0, 1}, {1, 0}}) == 0);
        CHECK(symmetric_signature({}) == 0);
        CHECK_THROWS_AS(symmetric_signature({{1, 1}, {1, 1}}), Error);
        Inertia in = inertia({{0, 0, 0}, {0, 0, 2}, {0, 2, 0}});
        CHECK(in.positive == 1);
        CHECK(in.negative == 1);
        CHECK(in.zero == 1);
    }

    TEST_CASE("signature matches the characteristic polynomial oracle")
    {
        for (int trial = 0; trial < 200; ++trial) {
            int n = (int)uniform(1, 5);
            IntMatrix s(n, std::vector<Int>(n));
            std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    long v = uniform(-4, 4);
                    s[i][j] = s[j][i] = v;
                    r[i][j] = r[j][i] = v;
                }
            Inertia in = inertia(s);
            REQUIRE(in.positive - in.negative == oracle::symmetric_signature_descartes(r));
        }
    }

    TEST_CASE("second derivative at one")
    {
        CHECK(second_derivative_at_one(poly({{1, 1}, {0, -1}, {-1, 1}})) == 2);
        CHECK(second_derivative_at_one(LaurentPoly(1)) == 0);
        CHECK(second_derivative_at_one(poly({{1, -1}, {0, 3}, {-1, -1}})) == -2);
    }

    TEST_CASE("second derivative of a normalized symmetric polynomial is even")
    {
        for (int trial = 0; trial < 200; ++trial) {
            int d = (int)uniform(0, 5);
            std::vector<long> a(d + 1);
            long rest = 0;
            for (int i = 1; i <= d; ++i) rest += 2 * (a[i] = uniform(-6, 6));
            a[0] = 1 - rest;
            LaurentPoly p;
            for (int i = 0; i <= d; ++i) {
                p.set(i, Int(a[i]));
                if (i) p.set(-i, Int(a[i]));
            }
            REQUIRE(p.eval(Int(1)) == 1);
            REQUIRE(second_derivative_at_one(p) % 2 == 0);
        }
    }

    TEST_CASE("integer matrix helpers")
    {
        IntMatrix a = {{1, 2}, {3, 4}};
        CHECK(transpose(a) == IntMatrix{{1, 3}, {2, 4}});
        CHECK(mat_mul(a, a) == IntMatrix{{7, 10}, {15, 22}});
        CHECK(mat_add(a, transpose(a)) == IntMatrix{{2, 5}, {5, 8}});
        CHECK(is_symmetric(mat_add(a, transpose(a))));
        CHECK(det_int(a) == -2);
        CHECK(det_int({}) == 1);
    }
}
