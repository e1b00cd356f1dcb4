#include "sfknot/algebra.hpp"
#include "sfknot/error.hpp"

#include <sstream>
#include <utility>

namespace sfknot {

LaurentPoly LaurentPoly::monomial(const Int& c, long e)
{
    LaurentPoly p;
    p.set(e, c);
    return p;
}

Int LaurentPoly::coeff(long e) const
{
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::set(long e, const Int& v)
{
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = v;
}

long LaurentPoly::min_exp() const { return c_.begin()->first; }
long LaurentPoly::max_exp() const { return c_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (auto& [e, v] : o.c_) set(e, coeff(e) + v);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (auto& [e, v] : o.c_) set(e, coeff(e) - v);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    std::map<long, Int> acc;
    for (auto& [ea, va] : a.c_)
        for (auto& [eb, vb] : b.c_) acc[ea + eb] += va * vb;
    LaurentPoly r;
    for (auto& [e, v] : acc) r.set(e, v);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const
{
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const
{
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

Int LaurentPoly::eval(const Int& t) const
{
    Int s = 0;
    for (auto& [e, v] : c_) {
        if (e < 0 && t != 1 && t != -1)
            throw Error(ErrorKind::Internal, "integer evaluation with negative exponent");
        Int p = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= t;
        s += v * p;
    }
    return s;
}

Rational LaurentPoly::eval(const Rational& t) const
{
    Rational s = 0;
    for (auto& [e, v] : c_) {
        Rational p = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= t;
        if (e < 0) p = 1 / p;
        s += Rational(v) * p;
    }
    return s;
}

LaurentPoly LaurentPoly::derivative() const
{
    LaurentPoly r;
    for (auto& [e, v] : c_)
        if (e != 0) r.set(e - 1, v * e);
    return r;
}

std::string LaurentPoly::str() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long e = it->first;
        Int v = it->second;
        bool neg = v < 0;
        Int a = neg ? Int(-v) : v;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "T";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
    if (a.is_zero()) return {};
    long lb = b.min_exp();
    LaurentPoly rem = a.shifted(-a.min_exp());
    LaurentPoly den = b.shifted(-lb);
    long dd = den.max_exp();
    Int lead = den.coeff(dd);
    LaurentPoly q;
    while (!rem.is_zero()) {
        long dr = rem.max_exp();
        if (dr < dd) throw Error(ErrorKind::Internal, "inexact polynomial division");
        Int lr = rem.coeff(dr);
        if (lr % lead != 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
        LaurentPoly term = LaurentPoly::monomial(lr / lead, dr - dd);
        q += term;
        rem -= term * den;
    }
    return q.shifted(a.min_exp() - lb);
}

IntMatrix transpose(const IntMatrix& m)
{
    size_t n = m.size(), k = n ? m[0].size() : 0;
    IntMatrix t(k, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) t[j][i] = m[i][j];
    return t;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IntMatrix r(n, std::vector<Int>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

bool is_symmetric(const IntMatrix& m)
{
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

LaurentPoly det_laurent(const PolyMatrix& m0)
{
    size_t n = m0.size();
    for (auto& row : m0)
        if (row.size() != n) throw Error(ErrorKind::Malformed, "determinant of a non-square matrix");
    if (n == 0) return LaurentPoly(1);
    PolyMatrix m = m0;
    LaurentPoly prev(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Int det_int(const IntMatrix& m)
{
    PolyMatrix p(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (auto& v : m[i]) p[i].emplace_back(v);
    return det_laurent(p).coeff(0);
}

Inertia inertia(const IntMatrix& s)
{
    if (!is_symmetric(s)) throw Error(ErrorKind::Malformed, "inertia of a non-symmetric matrix");
    std::vector<std::vector<Rational>> a(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        for (auto& v : s[i]) a[i].emplace_back(v);
    Inertia res;

    auto sym_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    // drop leading rows/columns [0, k)
    auto drop = [&](size_t k) {
        a.erase(a.begin(), a.begin() + k);
        for (auto& row : a) row.erase(row.begin(), row.begin() + k);
    };

    while (!a.empty()) {
        size_t n = a.size();
        size_t d = n;
        for (size_t i = 0; i < n; ++i)
            if (a[i][i] != 0) { d = i; break; }
        if (d < n) {
            sym_swap(0, d);
            Rational p = a[0][0];
            (p > 0 ? res.positive : res.negative)++;
            for (size_t i = 1; i < n; ++i) {
                if (a[i][0] == 0) continue;
                Rational f = a[i][0] / p;
                for (size_t j = 1; j < n; ++j) a[i][j] -= f * a[0][j];
            }
            drop(1);
            continue;
        }
        size_t bi = n, bj = n;
        for (size_t i = 0; i < n && bi == n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (a[i][j] != 0) { bi = i; bj = j; break; }
        if (bi == n) {
            res.zero += (int)n;
            break;
        }
        sym_swap(0, bi);
        sym_swap(1, bj);
        // block [[0, b], [b, 0]] has one positive and one negative direction
        Rational b = a[0][1];
        res.positive++;
        res.negative++;
        for (size_t i = 2; i < n; ++i) {
            // block inverse is [[0, 1/b], [1/b, 0]]
            Rational u = a[i][0], w = a[i][1];
            if (u == 0 && w == 0) continue;
            for (size_t j = 2; j < n; ++j) a[i][j] -= (u * a[1][j] + w * a[0][j]) / b;
        }
        drop(2);
    }
    return res;
}

int symmetric_signature(const IntMatrix& s)
{
    Inertia in = inertia(s);
    if (in.zero > 0) throw Error(ErrorKind::SingularForm, "form has a kernel of dimension " + std::to_string(in.zero));
    return in.positive - in.negative;
}

PolyMatrix alexander_matrix(const IntMatrix& v)
{
    size_t n = v.size();
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentPoly e(v[i][j]);
            e -= LaurentPoly::monomial(v[j][i], 1);
            m[i][j] = e;
        }
    return m;
}

Int second_derivative_at_one(const LaurentPoly& p)
{
    return p.derivative().derivative().eval(Int(1));
}

std::string int_str(const Int& v) { return v.str(); }

}  // namespace sfknot
