#include "sfknot/hfk.hpp"
#include "sfknot/error.hpp"

#include <sstream>

namespace sfknot {

void HfkTable::add(long i, long twice_m, const Int& r)
{
    if (r < 0) throw Error(ErrorKind::Malformed, "negative rank in knot Floer table");
    if (r == 0) return;
    ranks[{i, twice_m}] += r;
}

Parity TopGroupParity::parity() const
{
    if (has_even && has_odd) throw Error(ErrorKind::MixedParity, "top group has both gradings parities");
    return has_odd ? Parity::Odd : Parity::Even;
}

HfkTable hfk_alternating(const AlexanderPolynomial& a, int sigma)
{
    if (sigma % 2 != 0) throw Error(ErrorKind::Malformed, "signature of a knot is even");
    HfkTable h;
    for (auto& [i, c] : a.poly.terms()) h.add(i, 2 * (i - sigma / 2), c < 0 ? Int(-c) : c);
    return h;
}

HfkTable hfk_alternating(const KnotInvariants& inv)
{
    if (!inv.alternating) throw Error(ErrorKind::NotAlternating, "knot Floer table is only computed for alternating knots");
    return hfk_alternating(inv.alexander, inv.signature);
}

LaurentPoly euler_characteristic(const HfkTable& h)
{
    LaurentPoly p;
    for (auto& [k, r] : h.ranks) {
        if (k.second % 2 != 0) throw Error(ErrorKind::Malformed, "Euler characteristic needs integer gradings");
        long m = k.second / 2;
        p += LaurentPoly::monomial(m % 2 == 0 ? r : Int(-r), k.first);
    }
    return p;
}

long genus_from_table(const HfkTable& h)
{
    if (h.ranks.empty()) throw Error(ErrorKind::Malformed, "empty knot Floer table");
    long g = h.ranks.begin()->first.first;
    for (auto& [k, r] : h.ranks) g = std::max(g, k.first);
    return g;
}

TopGroupParity top_group_parity(const HfkTable& h)
{
    TopGroupParity tp;
    tp.top = genus_from_table(h);
    for (auto& [k, r] : h.ranks) {
        if (k.first != tp.top) continue;
        if (k.second % 2 != 0) throw Error(ErrorKind::Malformed, "parity needs integer gradings");
        ((k.second / 2) % 2 == 0 ? tp.has_even : tp.has_odd) = true;
    }
    return tp;
}

bool is_thin(const HfkTable& h, int sigma)
{
    for (auto& [k, r] : h.ranks)
        if (k.second != 2 * (k.first - sigma / 2)) return false;
    return true;
}

std::string format_hfk(const HfkTable& h)
{
    std::ostringstream os;
    for (auto it = h.ranks.rbegin(); it != h.ranks.rend(); ++it) {
        auto [i, m2] = it->first;
        os << i << " ";
        if (m2 % 2 == 0)
            os << m2 / 2;
        else
            os << m2 << "/2";
        os << " " << it->second << "\n";
    }
    return os.str();
}

namespace {

long parse_twice(const std::string& tok)
{
    auto slash = tok.find('/');
    auto dot = tok.find('.');
    try {
        if (slash != std::string::npos) {
            if (tok.substr(slash + 1) != "2") throw Error(ErrorKind::Malformed, "grading denominators must be 2");
            return std::stol(tok.substr(0, slash));
        }
        if (dot != std::string::npos) {
            bool neg = !tok.empty() && tok[0] == '-';
            std::string whole = tok.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
            std::string frac = tok.substr(dot + 1);
            if (whole.empty() || (frac != "5" && frac != "0")) throw Error(ErrorKind::Malformed, "bad grading: " + tok);
            long t = 2 * std::stol(whole) + (frac == "5" ? 1 : 0);
            return neg ? -t : t;
        }
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw Error(ErrorKind::Malformed, "bad grading: " + tok);
        return 2 * v;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Malformed, "bad grading: " + tok);
    }
}

}  // namespace

HfkTable parse_hfk(const std::string& text)
{
    HfkTable h;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, m, r, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> m >> r) || (ls >> extra))
            throw Error(ErrorKind::Malformed, "knot Floer row " + std::to_string(lineno) + " must be 'i m rank'");
        long i;
        try {
            size_t used = 0;
            i = std::stol(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Malformed, "bad Alexander grading on row " + std::to_string(lineno));
        }
        Int rank;
        try {
            rank = Int(r);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Malformed, "bad rank on row " + std::to_string(lineno));
        }
        h.add(i, parse_twice(m), rank);
    }
    return h;
}

}  // namespace sfknot
