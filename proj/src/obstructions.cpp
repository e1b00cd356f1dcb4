#include "sfknot/obstructions.hpp"
#include "sfknot/error.hpp"

#include <cstdlib>

namespace sfknot {

const char* applicability_name(Applicability a)
{
    switch (a) {
    case Applicability::Applied: return "applied";
    case Applicability::HypothesesNotMet: return "hypotheses-not-met";
    case Applicability::InsufficientData: return "insufficient-data";
    }
    return "?";
}

const char* conclusion_name(Conclusion c)
{
    switch (c) {
    case Conclusion::NoSF: return "no-SF-1/q-surgery";
    case Conclusion::NoPositive: return "no-positively-oriented-SF-1/q";
    case Conclusion::NoNegative: return "no-negatively-oriented-SF-1/q";
    case Conclusion::NoConclusion: return "no-conclusion";
    }
    return "?";
}

const std::vector<std::pair<std::string, std::string>>& rule_table()
{
    static const std::vector<std::pair<std::string, std::string>> t = {
        {rules::torsion_sign,
         "the non-zero torsion coefficients of a knot "
         "with a Seifert fibered 1/q surgery all have the same sign; they are >= 0 when S^3_{1/q}, q>0, is positively "
         "oriented and <= 0 when it is negatively oriented"},
        {rules::alternating_parity,
         "an alternating knot with g + sigma/2 odd and sigma != 0 has no Seifert fibered 1/q surgery"},
        {rules::alternating_bound,
         "for alternating knots (-1)^(i+sigma/2) (t_i - delta(sigma,i)) <= 0 with "
         "delta(m,i) = max(0, ceil((|m|-2|i|)/4)); pipeline consistency check"},
        {rules::hfk_positive,
         "if S^3_{1/q}(K), q>0, is a positively oriented Seifert fibered space, the top knot Floer "
         "group HFK(K,g) is trivial in odd degrees and non-trivial in even degrees"},
        {rules::hfk_negative,
         "if S^3_{1/q}(K), q>0, is a negatively oriented Seifert fibered space and g>1, the top knot "
         "Floer group HFK(K,g) is trivial in even degrees and non-trivial in odd degrees"},
        {rules::degree_defect,
         "if deg Delta < g then S^3_{1/q}(K), q>=0, is never positively oriented Seifert fibered; if "
         "also g>1 no 1/q surgery is Seifert fibered"},
        {rules::poincare,
         "if S^3_{1/q}(K) is the Poincare sphere then Delta = T - 1 + T^-1, K has genus one and 1/q = -1"},
        {rules::brieskorn237,
         "if S^3_{1/q}(K) is Sigma(2,3,7) then K has genus one and either Delta = T - 1 + T^-1 with "
         "1/q = -1 or Delta = -T + 3 - T^-1 with 1/q = +1"},
    };
    return t;
}

std::string citation_for(const std::string& rule)
{
    for (auto& [id, c] : rule_table())
        if (id == rule) return c;
    throw Error(ErrorKind::Internal, "unknown rule " + rule);
}

namespace {

Verdict make(const std::string& rule)
{
    Verdict v;
    v.rule = rule;
    v.citation = citation_for(rule);
    return v;
}

std::string profile_str(const TorsionProfile& t)
{
    std::string s;
    for (size_t i = 0; i < t.values.size(); ++i) s += (i ? "," : "") + t.values[i].str();
    return "[" + s + "]";
}

}  // namespace

Verdict torsion_sign_rule(const TorsionProfile& t)
{
    Verdict v = make(rules::torsion_sign);
    SignCoherence sc = sign_coherence(t);
    v.witness.push_back({"torsion", profile_str(t)});
    v.witness.push_back({"coherence", coherence_name(sc.cls)});
    if (sc.positive_witness) v.witness.push_back({"positive_index", std::to_string(*sc.positive_witness)});
    if (sc.negative_witness) v.witness.push_back({"negative_index", std::to_string(*sc.negative_witness)});
    switch (sc.cls) {
    case Coherence::AllZero:
        v.applicability = Applicability::HypothesesNotMet;
        break;
    case Coherence::Mixed:
        v.applicability = Applicability::Applied;
        v.conclusion = Conclusion::NoSF;
        break;
    case Coherence::NonNegative:
        v.applicability = Applicability::Applied;
        v.conclusion = Conclusion::NoNegative;
        v.witness.push_back({"scope", "q>0; for q<0 positively oriented surgeries are excluded instead"});
        break;
    case Coherence::NonPositive:
        v.applicability = Applicability::Applied;
        v.conclusion = Conclusion::NoPositive;
        v.witness.push_back({"scope", "q>0; for q<0 negatively oriented surgeries are excluded instead"});
        break;
    }
    return v;
}

Verdict alternating_parity_rule(const KnotInvariants& inv)
{
    Verdict v = make(rules::alternating_parity);
    if (!inv.alternating) {
        v.witness.push_back({"alternating", "false"});
        return v;
    }
    if (!inv.genus) {
        v.applicability = Applicability::InsufficientData;
        return v;
    }
    int g = *inv.genus, s = inv.signature;
    v.witness.push_back({"genus", std::to_string(g)});
    v.witness.push_back({"signature", std::to_string(s)});
    bool odd = ((g + s / 2) % 2 + 2) % 2 == 1;
    if (odd && s != 0) {
        v.applicability = Applicability::Applied;
        v.conclusion = Conclusion::NoSF;
    }
    return v;
}

std::vector<Violation> verify_alternating_bound(const TorsionProfile& t, int sigma)
{
    std::vector<Violation> out;
    int half = sigma / 2;
    // beyond |sigma|/2 and the Alexander degree every term is zero
    long range = std::max<long>(t.values.size(), std::labs(sigma) / 2 + 1);
    for (long i = 0; i < range; ++i) {
        Int lhs = t.at(i) - delta(sigma, i);
        if (((i + half) % 2 + 2) % 2 == 1) lhs = -lhs;
        if (lhs > 0) out.push_back({(int)i, lhs});
    }
    return out;
}

Verdict alternating_bound_rule(const KnotInvariants& inv)
{
    Verdict v = make(rules::alternating_bound);
    if (!inv.alternating) {
        v.witness.push_back({"alternating", "false"});
        return v;
    }
    auto viol = verify_alternating_bound(inv.torsion, inv.signature);
    v.applicability = Applicability::Applied;
    v.witness.push_back({"violations", std::to_string(viol.size())});
    for (auto& x : viol) v.witness.push_back({"violation_at", std::to_string(x.index)});
    return v;
}

Verdict degree_defect_rule(int alexander_degree, std::optional<int> genus)
{
    Verdict v = make(rules::degree_defect);
    v.witness.push_back({"alexander_degree", std::to_string(alexander_degree)});
    if (!genus) {
        v.applicability = Applicability::InsufficientData;
        return v;
    }
    v.witness.push_back({"genus", std::to_string(*genus)});
    if (alexander_degree < *genus) {
        v.applicability = Applicability::Applied;
        v.conclusion = *genus > 1 ? Conclusion::NoSF : Conclusion::NoPositive;
    }
    return v;
}

std::pair<Verdict, Verdict> top_parity_rules(const std::optional<TopGroupParity>& parity, std::optional<int> genus)
{
    Verdict pos = make(rules::hfk_positive), neg = make(rules::hfk_negative);
    if (!parity || !genus) {
        pos.applicability = neg.applicability = Applicability::InsufficientData;
        return {pos, neg};
    }
    if (parity->top != *genus) {
        pos.applicability = neg.applicability = Applicability::InsufficientData;
        pos.witness.push_back({"table_top_grading", std::to_string(parity->top)});
        pos.witness.push_back({"genus", std::to_string(*genus)});
        neg.witness = pos.witness;
        return {pos, neg};
    }
    std::string par = parity->has_even && parity->has_odd ? "mixed" : parity->has_odd ? "odd" : "even";
    for (Verdict* v : {&pos, &neg}) {
        v->witness.push_back({"genus", std::to_string(*genus)});
        v->witness.push_back({"top_group_parity", par});
    }
    if (parity->has_odd || !parity->has_even) {
        pos.applicability = Applicability::Applied;
        pos.conclusion = Conclusion::NoPositive;
        pos.witness.push_back({"scope", "q>0; the mirror statement excludes negatively oriented surgeries for q<0"});
    }
    if (*genus > 1 && (parity->has_even || !parity->has_odd)) {
        neg.applicability = Applicability::Applied;
        neg.conclusion = Conclusion::NoNegative;
        neg.witness.push_back({"scope", "q>0; the mirror statement excludes positively oriented surgeries for q<0"});
    }
    return {pos, neg};
}

BrieskornFilter brieskorn_filter(const KnotInvariants& inv)
{
    BrieskornFilter f;
    LaurentPoly trefoil = LaurentPoly::monomial(1, 1) - LaurentPoly(1) + LaurentPoly::monomial(1, -1);
    LaurentPoly eight = LaurentPoly::monomial(-1, 1) + LaurentPoly(3) - LaurentPoly::monomial(1, -1);
    // an unknown genus cannot exclude anything
    bool genus_one = !inv.genus || *inv.genus == 1;
    if (genus_one && inv.alexander.poly == trefoil) {
        f.poincare_possible = true;
        f.poincare_r = -1;
        f.b237_possible = true;
        f.b237_r.insert(-1);
    }
    if (genus_one && inv.alexander.poly == eight) {
        f.b237_possible = true;
        f.b237_r.insert(1);
    }
    return f;
}

Conclusion meet(const std::vector<Verdict>& vs)
{
    bool pos = false, neg = false;
    for (auto& v : vs) {
        if (v.applicability != Applicability::Applied) continue;
        if (v.conclusion == Conclusion::NoSF) return Conclusion::NoSF;
        pos |= v.conclusion == Conclusion::NoPositive;
        neg |= v.conclusion == Conclusion::NoNegative;
    }
    if (pos && neg) return Conclusion::NoSF;
    if (pos) return Conclusion::NoPositive;
    if (neg) return Conclusion::NoNegative;
    return Conclusion::NoConclusion;
}

ObstructionReport full_report(const KnotInvariants& inv, const std::optional<HfkTable>& table)
{
    ObstructionReport r;
    r.name = inv.name;
    r.verdicts.push_back(torsion_sign_rule(inv.torsion));
    r.verdicts.push_back(alternating_parity_rule(inv));
    r.verdicts.push_back(alternating_bound_rule(inv));
    std::optional<TopGroupParity> parity;
    std::optional<int> genus = inv.genus;
    if (table) {
        parity = top_group_parity(*table);
        if (!genus) genus = (int)parity->top;
    }
    auto [pos, neg] = top_parity_rules(parity, genus);
    r.verdicts.push_back(pos);
    r.verdicts.push_back(neg);
    r.verdicts.push_back(degree_defect_rule(inv.alexander.degree, inv.genus));

    r.brieskorn = brieskorn_filter(inv);
    Verdict p = make(rules::poincare), b = make(rules::brieskorn237);
    p.applicability = b.applicability = Applicability::Applied;
    p.witness.push_back({"possible", r.brieskorn.poincare_possible ? "true" : "false"});
    if (r.brieskorn.poincare_r) p.witness.push_back({"r", std::to_string(*r.brieskorn.poincare_r)});
    b.witness.push_back({"possible", r.brieskorn.b237_possible ? "true" : "false"});
    for (int x : r.brieskorn.b237_r) b.witness.push_back({"r", std::to_string(x)});
    r.verdicts.push_back(p);
    r.verdicts.push_back(b);

    for (auto& v : r.verdicts)
        if (v.conclusion != Conclusion::NoConclusion && v.applicability != Applicability::Applied)
            throw Error(ErrorKind::Internal, "verdict with a conclusion that was not applied");
    r.summary = meet(r.verdicts);
    return r;
}

}  // namespace sfknot
