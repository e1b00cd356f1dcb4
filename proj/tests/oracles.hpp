#pragma once

// Independent reference computations used only by the tests. Each one takes a
// different route from the library code it is compared against.

#include "sfknot/algebra.hpp"
#include "sfknot/codec.hpp"
#include "sfknot/diagram.hpp"
#include "sfknot/error.hpp"

#include <cstdlib>
#include <vector>

namespace oracle {

using sfknot::Int;
using sfknot::Rational;

// Determinant by fraction-carrying Gaussian elimination over the rationals.
inline Rational rational_det(std::vector<std::vector<Rational>> a)
{
    const int n = (int)a.size();
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Wirtinger presentation: one generator per arc, one relation per crossing.
// Arcs break at every under-passage.
inline std::vector<int> arcs_of_edges(const sfknot::PlanarDiagram& d)
{
    const int m = d.edge_count();
    std::vector<int> arc(m);
    int current = 0;
    for (int e = 0; e < m; ++e) {
        arc[e] = current;
        // edge e ends at visit e+1
        if (!d.visit_is_over((e + 1) % m)) ++current;
    }
    // the last arc wraps around to the first one
    for (int e = 0; e < m; ++e)
        if (arc[e] == current) arc[e] = 0;
    return arc;
}

// Fox-calculus Alexander matrix evaluated at t, with the last row and column
// removed; its determinant is +-t^k Delta(t).
inline Rational fox_minor_det(const sfknot::PlanarDiagram& d, const Rational& t)
{
    const int n = d.crossing_count();
    if (n == 0) return 1;
    auto arc = arcs_of_edges(d);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
    for (int c = 0; c < n; ++c) {
        const auto& x = d.crossing(c);
        int k = arc[x.edge[x.in_over_slot()]];
        int i = arc[x.edge[0]];
        int j = arc[x.edge[2]];
        if (x.sign > 0) {
            a[c][k] += 1 - t;
            a[c][i] += t;
            a[c][j] += -1;
        } else {
            a[c][k] += t - 1;
            a[c][i] += 1;
            a[c][j] += -t;
        }
    }
    std::vector<std::vector<Rational>> minor(n - 1, std::vector<Rational>(n - 1));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < n - 1; ++c) minor[r][c] = a[r][c];
    return rational_det(minor);
}

// True when x / y = +-t^k for some integer k.
inline bool equal_up_to_unit(const Rational& x, const Rational& y, const Rational& t)
{
    if (x == 0 || y == 0) return x == y;
    Rational q = x / y;
    if (q < 0) q = -q;
    Rational tt = t < 0 ? Rational(-t) : t;
    for (int k = 0; k < 64 && q > 1; ++k) q /= tt;
    for (int k = 0; k < 64 && q < 1; ++k) q *= tt;
    return q == 1;
}

// Characteristic polynomial coefficients c[0..n] of x^n + c[1] x^(n-1) + ...
// by the Faddeev-LeVerrier recursion.
inline std::vector<Rational> characteristic_poly(const std::vector<std::vector<Rational>>& a)
{
    const int n = (int)a.size();
    std::vector<Rational> c(n + 1, 0);
    c[0] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s + (i == j ? c[k - 1] : Rational(0));
            }
        m = next;
        Rational tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[k] = -tr / k;
    }
    return c;
}

// For a symmetric matrix every eigenvalue is real, so Descartes' rule of signs
// counts positive and negative eigenvalues exactly.
inline int symmetric_signature_descartes(const std::vector<std::vector<Rational>>& a)
{
    auto c = characteristic_poly(a);
    auto changes = [](const std::vector<Rational>& v) {
        int count = 0, last = 0;
        for (auto& x : v) {
            int s = x > 0 ? 1 : x < 0 ? -1 : 0;
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    std::vector<Rational> neg = c;
    const int n = (int)c.size() - 1;
    for (int k = 0; k <= n; ++k)
        if ((n - k) % 2 == 1) neg[k] = -neg[k];
    return changes(c) - changes(neg);
}

// Signature through a checkerboard surface: sigma = sign(G) - mu, where G is
// the Goeritz matrix over the unshaded regions and mu sums the incidence
// numbers of crossings whose band is orientation-incompatible. Either color
// class may be shaded.
inline int goeritz_signature(const sfknot::PlanarDiagram& d, int shaded_color = 1)
{
    const int SH = shaded_color;
    const int n = d.crossing_count();
    if (n == 0) return 0;
    const int f = d.face_count();
    std::vector<int> color(f, -1);
    color[d.left_face(0)] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < d.edge_count(); ++e) {
            int l = d.left_face(e), r = d.right_face(e);
            if (color[l] >= 0 && color[r] < 0) color[r] = 1 - color[l], changed = true;
            if (color[r] >= 0 && color[l] < 0) color[l] = 1 - color[r], changed = true;
        }
    }
    std::vector<int> index(f, -1);
    int u = 0;
    for (int i = 0; i < f; ++i)
        if (color[i] != SH) index[i] = u++;
    std::vector<std::vector<Rational>> g(u, std::vector<Rational>(u, 0));
    int mu = 0;
    for (int c = 0; c < n; ++c) {
        const auto& x = d.crossing(c);
        // sectors 1 and 3 touch the counterclockwise side of the over strand
        bool shaded13 = color[d.sector_face(c, 1)] == SH;
        int eta = shaded13 ? 1 : -1;
        int a = index[d.sector_face(c, shaded13 ? 0 : 1)];
        int b = index[d.sector_face(c, shaded13 ? 2 : 3)];
        if (a != b) {
            g[a][b] -= eta;
            g[b][a] -= eta;
            g[a][a] += eta;
            g[b][b] += eta;
        }
        // the shaded band is twisted against the orientation when it contains
        // the sector between the two incoming strands
        int m_sector = x.sign > 0 ? 3 : 0;
        if (color[d.sector_face(c, m_sector)] == SH) mu += eta;
    }
    std::vector<std::vector<Rational>> reduced(u - 1, std::vector<Rational>(u - 1));
    for (int i = 0; i + 1 < u; ++i)
        for (int j = 0; j + 1 < u; ++j) reduced[i][j] = g[i][j];
    return symmetric_signature_descartes(reduced) - mu;
}

// Expansion along the first row; only for small matrices.
inline sfknot::LaurentPoly cofactor_det(const sfknot::PolyMatrix& m)
{
    const int n = (int)m.size();
    if (n == 0) return sfknot::LaurentPoly::monomial(1, 0);
    if (n == 1) return m[0][0];
    sfknot::LaurentPoly sum;
    for (int c = 0; c < n; ++c) {
        sfknot::PolyMatrix minor;
        for (int r = 1; r < n; ++r) {
            std::vector<sfknot::LaurentPoly> row;
            for (int k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        sfknot::LaurentPoly term = m[0][c] * cofactor_det(minor);
        sum = (c % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

inline Int cofactor_det_int(const sfknot::IntMatrix& m)
{
    const int n = (int)m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int sum = 0;
    for (int c = 0; c < n; ++c) {
        sfknot::IntMatrix minor;
        for (int r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (int k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Int term = m[0][c] * cofactor_det_int(minor);
        sum += (c % 2 == 0) ? term : Int(-term);
    }
    return sum;
}

enum class Definiteness { PositiveDefinite, PositiveSemiDefinite, Other };

// Sylvester: definite iff all leading principal minors are positive,
// semi-definite iff every principal minor is non-negative.
inline Definiteness principal_minor_class(const sfknot::IntMatrix& q)
{
    const int n = (int)q.size();
    bool definite = true;
    for (int k = 1; k <= n && definite; ++k) {
        sfknot::IntMatrix lead(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead[i][j] = q[i][j];
        if (cofactor_det_int(lead) <= 0) definite = false;
    }
    if (definite) return Definiteness::PositiveDefinite;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        sfknot::IntMatrix sub(idx.size(), std::vector<Int>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = q[idx[i]][idx[j]];
        if (cofactor_det_int(sub) < 0) return Definiteness::Other;
    }
    return Definiteness::PositiveSemiDefinite;
}

// Every planar rotation system compatible with a DT code, found by trying all
// turn assignments.
inline std::vector<sfknot::PlanarDiagram> all_dt_embeddings(const sfknot::DtCode& code)
{
    const int n = (int)code.labels.size();
    const int m = 2 * n;
    std::vector<int> seq(m);
    std::vector<char> over(m);
    for (int i = 0; i < n; ++i) {
        long long v = code.labels[i];
        int even = (int)std::llabs(v) - 1;
        seq[2 * i] = i;
        seq[even] = i;
        over[even] = v < 0;
        over[2 * i] = v > 0;
    }
    std::vector<sfknot::PlanarDiagram> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> turn(n);
        for (int i = 0; i < n; ++i) turn[i] = (mask >> i & 1) ? 1 : -1;
        try {
            out.push_back(sfknot::embed_gauss_sequence(seq, over, turn));
        } catch (const sfknot::Error&) {
        }
    }
    return out;
}

}  // namespace oracle
