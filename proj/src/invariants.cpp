#include "sfknot/invariants.hpp"
#include "sfknot/error.hpp"

#include <cstdlib>

namespace sfknot {

const char* coherence_name(Coherence c)
{
    switch (c) {
    case Coherence::AllZero: return "AllZero";
    case Coherence::NonNegative: return "NonNegative";
    case Coherence::NonPositive: return "NonPositive";
    case Coherence::Mixed: return "Mixed";
    }
    return "?";
}

const char* genus_source_name(GenusSource g)
{
    switch (g) {
    case GenusSource::ComputedAlternating: return "computed-alternating";
    case GenusSource::UserSupplied: return "user-supplied";
    case GenusSource::Unknown: return "unknown";
    }
    return "?";
}

Int TorsionProfile::at(long i) const
{
    long a = i < 0 ? -i : i;
    return a < (long)values.size() ? values[a] : Int(0);
}

Int TorsionProfile::total() const
{
    Int s = 0;
    for (size_t i = 0; i < values.size(); ++i) s += i == 0 ? values[i] : 2 * values[i];
    return s;
}

bool same_invariants(const KnotInvariants& a, const KnotInvariants& b)
{
    return a.alexander == b.alexander && a.signature == b.signature && a.torsion == b.torsion &&
           a.alternating == b.alternating && a.genus == b.genus && a.genus_source == b.genus_source &&
           a.genus_provenance == b.genus_provenance;
}

AlexanderPolynomial normalize_alexander(const LaurentPoly& p)
{
    if (p.is_zero()) throw Error(ErrorKind::NotUnimodular, "Alexander polynomial vanishes");
    long lo = p.min_exp(), hi = p.max_exp();
    if ((lo + hi) % 2 != 0) throw Error(ErrorKind::Internal, "Alexander polynomial has odd span");
    LaurentPoly q = p.shifted(-(lo + hi) / 2);
    Int at1 = q.eval(Int(1));
    if (at1 == -1)
        q = -q;
    else if (at1 != 1)
        throw Error(ErrorKind::NotUnimodular, "Alexander polynomial evaluates to " + at1.str() + " at 1");
    if (q.mirrored() != q) throw Error(ErrorKind::Internal, "Alexander polynomial is not symmetric: " + q.str());
    return {q, (int)q.max_exp()};
}

AlexanderPolynomial alexander(const SeifertData& sd)
{
    const IntMatrix& v = sd.V;
    IntMatrix skew = v;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) skew[i][j] = v[i][j] - v[j][i];
    Int u = det_int(skew);
    if (u != 1 && u != -1) throw Error(ErrorKind::NotUnimodular, "det(V - V^T) = " + u.str());
    return normalize_alexander(det_laurent(alexander_matrix(v)));
}

int signature(const SeifertData& sd) { return symmetric_signature(mat_add(sd.V, transpose(sd.V))); }

TorsionProfile torsion_profile(const AlexanderPolynomial& a)
{
    TorsionProfile t;
    t.alexander_degree = a.degree;
    for (int i = 0; i < a.degree; ++i) {
        Int s = 0;
        for (int j = 1; i + j <= a.degree; ++j) s += j * a.coeff(i + j);
        t.values.push_back(s);
    }
    return t;
}

SignCoherence sign_coherence(const TorsionProfile& t)
{
    SignCoherence sc;
    for (int i = 0; i < (int)t.values.size(); ++i) {
        if (t.values[i] > 0 && !sc.positive_witness) sc.positive_witness = i;
        if (t.values[i] < 0 && !sc.negative_witness) sc.negative_witness = i;
    }
    if (sc.positive_witness && sc.negative_witness)
        sc.cls = Coherence::Mixed;
    else if (sc.positive_witness)
        sc.cls = Coherence::NonNegative;
    else if (sc.negative_witness)
        sc.cls = Coherence::NonPositive;
    return sc;
}

long delta(long m, long i)
{
    long num = std::labs(m) - 2 * std::labs(i);
    if (num <= 0) return 0;
    return (num + 3) / 4;
}

Int casson_surgery(long q, const TorsionProfile& t)
{
    if (q == 0) throw Error(ErrorKind::Malformed, "surgery coefficient 1/q needs q != 0");
    return Int(q) * t.total();
}

KnotInvariants assemble(const std::string& name, const PlanarDiagram& d, std::optional<GenusInput> genus,
                        std::optional<bool> alternating)
{
    KnotInvariants inv;
    inv.name = name;
    SeifertData sd = seifert_matrix(d);
    inv.alexander = alexander(sd);
    inv.signature = signature(sd);
    inv.torsion = torsion_profile(inv.alexander);
    inv.alternating = alternating.value_or(is_alternating(d));
    int deg = inv.alexander.degree;
    if (inv.alternating) {
        if (genus && genus->value != deg)
            throw Error(ErrorKind::GenusInconsistent, "alternating knot has genus deg(Delta) = " + std::to_string(deg) +
                                                          ", not " + std::to_string(genus->value));
        inv.genus = deg;
        inv.genus_source = GenusSource::ComputedAlternating;
        inv.genus_provenance = "degree of the Alexander polynomial";
    } else if (genus) {
        if (genus->value < deg)
            throw Error(ErrorKind::GenusInconsistent, "genus " + std::to_string(genus->value) + " below deg(Delta) = " +
                                                          std::to_string(deg));
        if (std::abs(inv.signature) > 2 * genus->value)
            throw Error(ErrorKind::GenusInconsistent, "|signature| " + std::to_string(std::abs(inv.signature)) +
                                                          " exceeds twice the genus " + std::to_string(genus->value));
        inv.genus = genus->value;
        inv.genus_source = GenusSource::UserSupplied;
        inv.genus_provenance = genus->provenance;
    }
    return inv;
}

}  // namespace sfknot
