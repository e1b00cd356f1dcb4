#include "sfknot/report.hpp"

#include <json.hpp>

#include <sstream>

namespace sfknot {

using nlohmann::ordered_json;

namespace {

ordered_json torsion_json(const TorsionProfile& t)
{
    ordered_json a = ordered_json::array();
    for (auto& v : t.values) a.push_back(v.str());
    return a;
}

std::string torsion_text(const TorsionProfile& t)
{
    std::string s;
    for (size_t i = 0; i < t.values.size(); ++i) s += (i ? " " : "") + t.values[i].str();
    return s.empty() ? "(none)" : s;
}

ordered_json verdict_json(const std::string& name, const Verdict& v)
{
    ordered_json j;
    j["record"] = "verdict";
    j["knot"] = name;
    j["rule"] = v.rule;
    j["applicability"] = applicability_name(v.applicability);
    j["conclusion"] = conclusion_name(v.conclusion);
    ordered_json w = ordered_json::array();
    for (auto& [k, val] : v.witness) w.push_back({{"key", k}, {"value", val}});
    j["witnesses"] = w;
    j["citation"] = v.citation;
    return j;
}

ordered_json brieskorn_json(const std::string& name, const BrieskornFilter& f)
{
    ordered_json j;
    j["record"] = "brieskorn";
    j["knot"] = name;
    j["sigma_2_3_5_possible"] = f.poincare_possible;
    j["sigma_2_3_5_r"] = f.poincare_r ? ordered_json(*f.poincare_r) : ordered_json(nullptr);
    j["sigma_2_3_7_possible"] = f.b237_possible;
    ordered_json rs = ordered_json::array();
    for (int r : f.b237_r) rs.push_back(r);
    j["sigma_2_3_7_r"] = rs;
    return j;
}

std::string r_list(const std::set<int>& rs)
{
    std::string s;
    for (int r : rs) s += (s.empty() ? "" : ", ") + std::string(r > 0 ? "+" : "") + std::to_string(r);
    return s;
}

}  // namespace

std::string format_invariants(const KnotInvariants& inv)
{
    std::ostringstream os;
    os << "knot: " << (inv.name.empty() ? "(unnamed)" : inv.name) << "\n";
    os << "alexander: " << inv.alexander.poly.str() << "\n";
    os << "alexander_degree: " << inv.alexander.degree << "\n";
    os << "signature: " << inv.signature << "\n";
    os << "torsion: " << torsion_text(inv.torsion) << "\n";
    os << "coherence: " << coherence_name(sign_coherence(inv.torsion).cls) << "\n";
    os << "alternating: " << (inv.alternating ? "true" : "false") << "\n";
    os << "genus: " << (inv.genus ? std::to_string(*inv.genus) : std::string("unknown")) << " ("
       << genus_source_name(inv.genus_source);
    if (!inv.genus_provenance.empty()) os << "; " << inv.genus_provenance;
    os << ")\n";
    return os.str();
}

std::string format_report(const ObstructionReport& r)
{
    std::ostringstream os;
    os << "report: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
    for (auto& v : r.verdicts) {
        os << "  " << v.rule << ": " << applicability_name(v.applicability) << ", " << conclusion_name(v.conclusion)
           << "\n";
        for (auto& [k, val] : v.witness) os << "    " << k << " = " << val << "\n";
        os << "    citation: " << v.citation << "\n";
    }
    os << "summary: " << conclusion_name(r.summary) << "\n";
    return os.str();
}

std::string format_brieskorn(const std::string& name, const BrieskornFilter& f)
{
    std::ostringstream os;
    os << "brieskorn: " << (name.empty() ? "(unnamed)" : name) << "\n";
    os << "  Sigma(2,3,5): "
       << (f.poincare_possible ? "possible at r = " + std::to_string(*f.poincare_r) : std::string("impossible")) << "\n";
    os << "  Sigma(2,3,7): " << (f.b237_possible ? "possible at r = " + r_list(f.b237_r) : std::string("impossible"))
       << "\n";
    return os.str();
}

std::string format_form(const FormClass& fc, Orientation o)
{
    std::ostringstream os;
    os << "form: " << form_kind_name(fc.kind) << "\n";
    os << "bad_points: " << fc.bad_points << "\n";
    os << "orientation: " << orientation_name(o) << "\n";
    return os.str();
}

std::string format_scan(const ScanSummary& s)
{
    std::ostringstream os;
    os << "name        coherence     summary                          torsion\n";
    for (auto& r : s.rows) {
        std::string name = r.name;
        name.resize(std::max<size_t>(name.size(), 11), ' ');
        if (!r.error.empty()) {
            os << name << " ERROR " << r.error << "\n";
            continue;
        }
        std::string coh = coherence_name(r.coherence), sum = conclusion_name(r.summary);
        coh.resize(std::max<size_t>(coh.size(), 13), ' ');
        sum.resize(std::max<size_t>(sum.size(), 32), ' ');
        os << name << " " << coh << " " << sum << " " << torsion_text(r.invariants->torsion) << "\n";
        for (auto& w : r.warnings) os << "    warning: " << w << "\n";
    }
    os << "total: " << s.rows.size() << "\n";
    for (auto& [k, v] : s.coherence_counts) os << "coherence " << k << ": " << v << "\n";
    for (auto& [k, v] : s.summary_counts) os << "summary " << k << ": " << v << "\n";
    for (auto& [k, v] : s.applied_rule_counts) os << "rule " << k << ": " << v << "\n";
    os << "errors: " << s.errors << "\n";
    auto mixed = s.mixed_names();
    os << "mixed:";
    for (auto& n : mixed) os << " " << n;
    os << "\n";
    return os.str();
}

std::string records_invariants(const KnotInvariants& inv)
{
    ordered_json j;
    j["record"] = "invariants";
    j["knot"] = inv.name;
    j["alexander"] = inv.alexander.poly.str();
    j["alexander_degree"] = inv.alexander.degree;
    j["signature"] = inv.signature;
    j["torsion"] = torsion_json(inv.torsion);
    j["coherence"] = coherence_name(sign_coherence(inv.torsion).cls);
    j["alternating"] = inv.alternating;
    j["genus"] = inv.genus ? ordered_json(*inv.genus) : ordered_json(nullptr);
    j["genus_source"] = genus_source_name(inv.genus_source);
    j["genus_provenance"] = inv.genus_provenance;
    return j.dump() + "\n";
}

std::string records_report(const ObstructionReport& r)
{
    std::string out;
    for (auto& v : r.verdicts) out += verdict_json(r.name, v).dump() + "\n";
    ordered_json s;
    s["record"] = "summary";
    s["knot"] = r.name;
    s["conclusion"] = conclusion_name(r.summary);
    out += s.dump() + "\n";
    return out;
}

std::string records_brieskorn(const std::string& name, const BrieskornFilter& f)
{
    return brieskorn_json(name, f).dump() + "\n";
}

std::string records_hfk(const std::string& name, const HfkTable& h)
{
    std::string out;
    for (auto it = h.ranks.rbegin(); it != h.ranks.rend(); ++it) {
        ordered_json j;
        j["record"] = "hfk";
        j["knot"] = name;
        j["alexander_grading"] = it->first.first;
        j["twice_maslov_grading"] = it->first.second;
        j["rank"] = it->second.str();
        out += j.dump() + "\n";
    }
    return out;
}

std::string records_form(const FormClass& fc, Orientation o)
{
    ordered_json j;
    j["record"] = "plumbing";
    j["form"] = form_kind_name(fc.kind);
    j["bad_points"] = fc.bad_points;
    j["orientation"] = orientation_name(o);
    return j.dump() + "\n";
}

std::string records_scan(const ScanSummary& s)
{
    std::string out;
    for (auto& r : s.rows) {
        ordered_json j;
        j["record"] = "scan-row";
        j["knot"] = r.name;
        if (!r.error.empty()) {
            j["error"] = r.error;
        } else {
            j["coherence"] = coherence_name(r.coherence);
            j["summary"] = conclusion_name(r.summary);
            j["torsion"] = torsion_json(r.invariants->torsion);
            j["warnings"] = r.warnings;
        }
        out += j.dump() + "\n";
    }
    ordered_json t;
    t["record"] = "scan-summary";
    t["total"] = s.rows.size();
    t["coherence_counts"] = s.coherence_counts;
    t["summary_counts"] = s.summary_counts;
    t["applied_rule_counts"] = s.applied_rule_counts;
    t["errors"] = s.errors;
    t["mixed"] = s.mixed_names();
    out += t.dump() + "\n";
    return out;
}

}  // namespace sfknot
