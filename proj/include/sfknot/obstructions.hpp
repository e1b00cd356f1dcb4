#pragma once

#include "sfknot/hfk.hpp"
#include "sfknot/invariants.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sfknot {

enum class Applicability { Applied, HypothesesNotMet, InsufficientData };
enum class Conclusion { NoSF, NoPositive, NoNegative, NoConclusion };

const char* applicability_name(Applicability a);
const char* conclusion_name(Conclusion c);

struct Verdict {
    std::string rule;
    Applicability applicability = Applicability::HypothesesNotMet;
    Conclusion conclusion = Conclusion::NoConclusion;
    std::string citation;
    std::vector<std::pair<std::string, std::string>> witness;
};

// Rule ids with their fixed citation strings.
const std::vector<std::pair<std::string, std::string>>& rule_table();
std::string citation_for(const std::string& rule);

namespace rules {
inline const std::string torsion_sign = "torsion-sign-coherence";
inline const std::string alternating_parity = "alternating-genus-signature-parity";
inline const std::string alternating_bound = "alternating-torsion-bound";
inline const std::string hfk_positive = "hfk-top-parity-positive";
inline const std::string hfk_negative = "hfk-top-parity-negative";
inline const std::string degree_defect = "alexander-degree-defect";
inline const std::string poincare = "brieskorn-2-3-5";
inline const std::string brieskorn237 = "brieskorn-2-3-7";
}  // namespace rules

struct Violation {
    int index;
    Int value;  // the left-hand side, which should be <= 0
};

Verdict torsion_sign_rule(const TorsionProfile& t);
Verdict alternating_parity_rule(const KnotInvariants& inv);
std::vector<Violation> verify_alternating_bound(const TorsionProfile& t, int sigma);
Verdict alternating_bound_rule(const KnotInvariants& inv);
Verdict degree_defect_rule(int alexander_degree, std::optional<int> genus);
// First entry: positively oriented surgeries; second: negatively oriented ones.
std::pair<Verdict, Verdict> top_parity_rules(const std::optional<TopGroupParity>& parity, std::optional<int> genus);

struct BrieskornFilter {
    bool poincare_possible = false;  // Sigma(2,3,5)
    std::optional<int> poincare_r;
    bool b237_possible = false;  // Sigma(2,3,7)
    std::set<int> b237_r;
};

BrieskornFilter brieskorn_filter(const KnotInvariants& inv);

struct ObstructionReport {
    std::string name;
    std::vector<Verdict> verdicts;
    Conclusion summary = Conclusion::NoConclusion;
    BrieskornFilter brieskorn;
};

Conclusion meet(const std::vector<Verdict>& vs);
ObstructionReport full_report(const KnotInvariants& inv, const std::optional<HfkTable>& table = std::nullopt);

}  // namespace sfknot
