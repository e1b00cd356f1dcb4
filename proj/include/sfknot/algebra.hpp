#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace sfknot {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer Laurent polynomial in T, stored sparsely. Zero coefficients are never kept.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { set(0, Int(c)); }
    LaurentPoly(const Int& c) { set(0, c); }
    static LaurentPoly monomial(const Int& c, long e);
    static LaurentPoly T() { return monomial(1, 1); }

    const std::map<long, Int>& terms() const { return c_; }
    Int coeff(long e) const;
    void set(long e, const Int& v);

    bool is_zero() const { return c_.empty(); }
    long min_exp() const;  // undefined on zero
    long max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(long k) const;       // multiply by T^k
    LaurentPoly mirrored() const;            // T -> T^-1
    Int eval(const Int& t) const;            // t must be invertible where negative powers occur (|t| = 1)
    Rational eval(const Rational& t) const;
    LaurentPoly derivative() const;

    // Human readable, highest power first, e.g. "T - 1 + T^-1".
    std::string str() const;

private:
    std::map<long, Int> c_;
};

// Exact quotient a / b in the Laurent ring; throws Internal if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

using IntMatrix = std::vector<std::vector<Int>>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

IntMatrix transpose(const IntMatrix& m);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
bool is_symmetric(const IntMatrix& m);

// Fraction-free (Bareiss) determinant over Z[T, T^-1].
LaurentPoly det_laurent(const PolyMatrix& m);
Int det_int(const IntMatrix& m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Exact Sylvester inertia by symmetric rational pivoting.
// Pivot order: first non-zero diagonal entry (symmetric swap to the front);
// if the whole diagonal vanishes, the first non-zero off-diagonal entry (row-major)
// is used as a 2x2 block. Remaining all-zero block counts as kernel.
Inertia inertia(const IntMatrix& s);

// positive - negative; throws SingularForm when the form is degenerate.
int symmetric_signature(const IntMatrix& s);

// V - T * V^T as a polynomial matrix.
PolyMatrix alexander_matrix(const IntMatrix& v);

Int second_derivative_at_one(const LaurentPoly& p);

std::string int_str(const Int& v);

}  // namespace sfknot
