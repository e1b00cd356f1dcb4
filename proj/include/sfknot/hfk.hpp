#pragma once

#include "sfknot/invariants.hpp"

#include <map>
#include <string>
#include <utility>

namespace sfknot {

// Ranks keyed by (Alexander grading i, twice the homological grading).
struct HfkTable {
    std::map<std::pair<long, long>, Int> ranks;
    void add(long i, long twice_m, const Int& r);
    bool operator==(const HfkTable& o) const { return ranks == o.ranks; }
};

enum class Parity { Even, Odd };

struct TopGroupParity {
    long top = 0;  // highest Alexander grading with non-zero rank
    bool has_even = false;
    bool has_odd = false;
    Parity parity() const;  // throws MixedParity if both occur
};

HfkTable hfk_alternating(const AlexanderPolynomial& a, int sigma);
HfkTable hfk_alternating(const KnotInvariants& inv);  // throws NotAlternating

LaurentPoly euler_characteristic(const HfkTable& h);
long genus_from_table(const HfkTable& h);
TopGroupParity top_group_parity(const HfkTable& h);
bool is_thin(const HfkTable& h, int sigma);

// Rows "i m rank"; m is an integer or a half-integer written like 3/2 or 1.5.
std::string format_hfk(const HfkTable& h);
HfkTable parse_hfk(const std::string& text);

}  // namespace sfknot
