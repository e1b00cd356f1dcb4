#include "sfknot/codec.hpp"
#include "sfknot/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sfknot {

namespace {

// Unicode minus (U+2212) is accepted and folded to '-'.
std::string fold_minus(const std::string& s)
{
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && (unsigned char)s[i] == 0xE2 && (unsigned char)s[i + 1] == 0x88 &&
            (unsigned char)s[i + 2] == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

long long to_ll(const std::string& tok)
{
    long long v = 0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (*b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw Error(ErrorKind::Malformed, "not an integer: '" + tok + "'");
    return v;
}

// Integers separated by whitespace and/or commas; enclosing brackets are ignored.
std::vector<long long> integer_list(const std::string& text)
{
    std::vector<long long> out;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) out.push_back(to_ll(tok));
        tok.clear();
    };
    for (char ch : fold_minus(text)) {
        if (std::isspace((unsigned char)ch) || ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')')
            flush();
        else if (std::isdigit((unsigned char)ch) || ch == '-' || ch == '+')
            tok += ch;
        else
            throw Error(ErrorKind::Malformed, std::string("unexpected character '") + ch + "'");
    }
    flush();
    return out;
}

std::string join(const std::vector<long long>& v)
{
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// Crossing slots built from roles; the incoming under-strand must come first.
enum Role { InFirst, InSecond, OutFirst, OutSecond };

struct Interlace {
    int n;
    std::vector<int> first, second;
    std::vector<std::vector<char>> adj;
};

Interlace interlacement(const std::vector<int>& seq, int n)
{
    Interlace il{n, std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
    for (int k = 0; k < (int)seq.size(); ++k) {
        int x = seq[k];
        (il.first[x] < 0 ? il.first[x] : il.second[x]) = k;
    }
    il.adj.assign(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool a = il.first[x] < il.first[y] && il.first[y] < il.second[x];
            bool b = il.first[x] < il.second[y] && il.second[y] < il.second[x];
            il.adj[x][y] = a != b;
        }
    return il;
}

}  // namespace

PlanarDiagram embed_gauss_sequence(const std::vector<int>& seq, const std::vector<char>& over,
                                   const std::vector<int>& turn)
{
    int m = (int)seq.size(), n = m / 2;
    Interlace il = interlacement(seq, n);
    std::vector<Crossing> xs(n);
    for (int x = 0; x < n; ++x) {
        int p = il.first[x], q = il.second[x];
        if (p < 0 || q < 0) throw Error(ErrorKind::Malformed, "crossing visited fewer than twice");
        if (over[p] == over[q]) throw Error(ErrorKind::Malformed, "crossing passed over (or under) on both visits");
        int edge[4] = {(p + m - 1) % m, (q + m - 1) % m, p, q};  // by role
        std::array<Role, 4> ring = turn[x] > 0 ? std::array<Role, 4>{InFirst, InSecond, OutFirst, OutSecond}
                                               : std::array<Role, 4>{InFirst, OutSecond, OutFirst, InSecond};
        Role in_under = over[p] ? InSecond : InFirst;
        Role in_over = over[p] ? InFirst : InSecond;
        int start = (int)(std::find(ring.begin(), ring.end(), in_under) - ring.begin());
        Crossing c;
        for (int k = 0; k < 4; ++k) {
            Role r = ring[(start + k) % 4];
            c.edge[k] = edge[r];
            if (r == in_over) c.sign = k == 3 ? 1 : -1;
        }
        xs[x] = c;
    }
    return PlanarDiagram(std::move(xs));
}

// ---------------------------------------------------------------- DT

std::string DtCode::str() const { return join(labels); }

DtCode parse_dt(const std::string& text)
{
    DtCode code;
    code.labels = integer_list(text);
    std::set<long long> seen;
    long long n = (long long)code.labels.size();
    for (long long v : code.labels) {
        if (v % 2 != 0) throw Error(ErrorKind::OddLabel, "odd label " + std::to_string(v));
        long long a = v < 0 ? -v : v;
        if (!seen.insert(a).second) throw Error(ErrorKind::DuplicateLabel, "label " + std::to_string(a) + " repeated");
    }
    for (long long a : seen)
        if (a < 2 || a > 2 * n)
            throw Error(ErrorKind::RangeGap, "labels must be exactly 2..." + std::to_string(2 * n));
    return code;
}

PlanarDiagram realize_dt(const DtCode& code)
{
    int n = (int)code.labels.size(), m = 2 * n;
    if (n == 0) return PlanarDiagram(std::vector<Crossing>{});
    std::vector<int> seq(m, -1);
    std::vector<char> over(m, 0);
    for (int i = 0; i < n; ++i) {
        long long v = code.labels[i];
        int even = (int)(v < 0 ? -v : v) - 1;  // visit index of the even label
        seq[2 * i] = i;
        seq[even] = i;
        over[even] = v < 0;
        over[2 * i] = v > 0;
    }
    Interlace il = interlacement(seq, n);

    // Two interlaced crossings turn the same way iff the number of crossings
    // interlaced with both, plus the distance between their first visits, is odd.
    // Each interlacement component is solved by propagation.
    std::vector<int> turn(n, 0), comp(n, -1);
    int ncomp = 0;
    for (int r = 0; r < n; ++r) {
        if (comp[r] >= 0) continue;
        std::deque<int> q{r};
        comp[r] = ncomp;
        turn[r] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < n; ++y) {
                if (!il.adj[x][y]) continue;
                int common = 0;
                for (int z = 0; z < n; ++z) common += il.adj[x][z] && il.adj[y][z];
                int gap = std::abs(il.first[x] - il.first[y]);
                int want = (common + gap) % 2 ? turn[x] : -turn[x];
                if (turn[y] == 0) {
                    turn[y] = want;
                    comp[y] = ncomp;
                    q.push_back(y);
                } else if (turn[y] != want) {
                    throw Error(ErrorKind::Unrealizable, "DT code " + code.str() + " has no planar realization");
                }
            }
        }
        ++ncomp;
    }
    // each component is reflected so that its lowest crossing is positive
    for (int c = 0; c < ncomp; ++c) {
        int low = (int)(std::find(comp.begin(), comp.end(), c) - comp.begin());
        int sign = over[il.first[low]] ? turn[low] : -turn[low];
        if (sign < 0)
            for (int x = 0; x < n; ++x)
                if (comp[x] == c) turn[x] = -turn[x];
    }
    try {
        return embed_gauss_sequence(seq, over, turn);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Unrealizable)
            throw Error(ErrorKind::Unrealizable, "DT code " + code.str() + " has no planar realization");
        throw;
    }
}

DtCode to_dt(const PlanarDiagram& d)
{
    int n = d.crossing_count(), m = 2 * n;
    std::vector<int> other(m, -1);
    std::vector<int> seen(n, -1);
    for (int k = 0; k < m; ++k) {
        int x = d.visit_crossing(k);
        if (seen[x] >= 0) {
            other[k] = seen[x];
            other[seen[x]] = k;
        } else {
            seen[x] = k;
        }
    }
    DtCode code;
    for (int k = 0; k < m; k += 2) {
        int e = other[k];
        if (e % 2 == 0) throw Error(ErrorKind::Internal, "crossing visited twice at odd positions");
        code.labels.push_back(d.visit_is_over(e) ? -(e + 1) : (e + 1));
    }
    return code;
}

// ---------------------------------------------------------------- Gauss

std::string GaussCode::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < entries.size(); ++i) {
        auto& e = entries[i];
        os << (i ? " " : "") << (e.passage == Passage::Over ? 'O' : 'U') << e.id << (e.sign > 0 ? '+' : '-');
    }
    return os.str();
}

GaussCode parse_gauss(const std::string& text)
{
    GaussCode g;
    std::string s = fold_minus(text);
    for (char& ch : s)
        if (ch == ',') ch = ' ';
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        GaussEntry e;
        char p = (char)std::toupper((unsigned char)tok[0]);
        if (p != 'O' && p != 'U') throw Error(ErrorKind::Malformed, "Gauss token must start with O or U: '" + tok + "'");
        e.passage = p == 'O' ? Passage::Over : Passage::Under;
        char h = tok.back();
        if (h != '+' && h != '-') throw Error(ErrorKind::Malformed, "Gauss token must end with + or -: '" + tok + "'");
        e.sign = h == '+' ? 1 : -1;
        std::string id = tok.substr(1, tok.size() - 2);
        if (id.empty() || !std::all_of(id.begin(), id.end(), [](char c) { return std::isdigit((unsigned char)c); }))
            throw Error(ErrorKind::Malformed, "bad crossing id in '" + tok + "'");
        e.id = to_ll(id);
        if (e.id <= 0) throw Error(ErrorKind::Malformed, "crossing ids are positive");
        g.entries.push_back(e);
    }
    std::map<long long, std::vector<GaussEntry>> by_id;
    for (auto& e : g.entries) by_id[e.id].push_back(e);
    for (auto& [id, v] : by_id) {
        if (v.size() != 2)
            throw Error(ErrorKind::Malformed, "crossing " + std::to_string(id) + " must appear exactly twice");
        if (v[0].passage == v[1].passage)
            throw Error(ErrorKind::Malformed, "crossing " + std::to_string(id) + " needs one over and one under passage");
        if (v[0].sign != v[1].sign)
            throw Error(ErrorKind::Malformed, "crossing " + std::to_string(id) + " has inconsistent handedness");
    }
    return g;
}

PlanarDiagram realize_gauss(const GaussCode& code)
{
    std::map<long long, int> ids;
    std::vector<int> seq;
    std::vector<char> over;
    for (auto& e : code.entries) {
        if (!ids.count(e.id)) {
            int k = (int)ids.size();
            ids[e.id] = k;
        }
        seq.push_back(ids[e.id]);
        over.push_back(e.passage == Passage::Over);
    }
    int n = (int)ids.size();
    std::vector<int> turn(n, 0), first_over(n, -1);
    for (size_t k = 0; k < code.entries.size(); ++k) {
        int x = seq[k];
        if (first_over[x] != -1) continue;
        first_over[x] = over[k];
        // sign = turn when the first visit is the over-passage, -turn otherwise
        turn[x] = over[k] ? code.entries[k].sign : -code.entries[k].sign;
    }
    return embed_gauss_sequence(seq, over, turn);
}

GaussCode to_gauss(const PlanarDiagram& d)
{
    GaussCode g;
    std::map<int, long long> ids;
    for (int k = 0; k < d.edge_count(); ++k) {
        int x = d.visit_crossing(k);
        if (!ids.count(x)) {
            long long next = (long long)ids.size() + 1;
            ids[x] = next;
        }
        g.entries.push_back({ids[x], d.visit_is_over(k) ? Passage::Over : Passage::Under, d.crossing(x).sign});
    }
    return g;
}

// ---------------------------------------------------------------- PD

std::string PdNotation::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < crossings.size(); ++i) {
        auto& c = crossings[i];
        os << (i ? " " : "") << "X[" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << "]";
    }
    return os.str();
}

PdNotation parse_pd(const std::string& text0)
{
    std::string text = fold_minus(text0);
    PdNotation pd;
    // every innermost [...] group is one crossing
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '[') {
            ++i;
            continue;
        }
        size_t j = i + 1;
        while (j < text.size() && text[j] != '[' && text[j] != ']') ++j;
        if (j >= text.size()) throw Error(ErrorKind::Malformed, "unbalanced brackets in PD text");
        if (text[j] == '[') {
            i = j;
            continue;
        }
        std::vector<long long> v = integer_list(text.substr(i + 1, j - i - 1));
        if (v.size() != 4) throw Error(ErrorKind::Malformed, "PD crossing needs exactly 4 labels");
        pd.crossings.push_back({v[0], v[1], v[2], v[3]});
        i = j + 1;
    }
    for (char ch : text)
        if (std::isdigit((unsigned char)ch) && pd.crossings.empty())
            throw Error(ErrorKind::Malformed, "PD text has labels outside X[...] groups");
    std::map<long long, int> count;
    for (auto& c : pd.crossings)
        for (long long v : c) count[v]++;
    for (auto& [v, k] : count)
        if (k != 2) throw Error(ErrorKind::Malformed, "PD label " + std::to_string(v) + " must appear exactly twice");
    if (!count.empty() && count.rbegin()->first - count.begin()->first + 1 != (long long)count.size())
        throw Error(ErrorKind::RangeGap, "PD labels must be consecutive integers");
    return pd;
}

PlanarDiagram realize_pd(const PdNotation& code)
{
    int n = (int)code.crossings.size(), m = 2 * n;
    if (n == 0) return PlanarDiagram(std::vector<Crossing>{});
    long long base = code.crossings[0][0];
    for (auto& c : code.crossings)
        for (long long v : c) base = std::min(base, v);
    std::vector<Crossing> xs;
    for (auto& t : code.crossings) {
        Crossing c;
        for (int k = 0; k < 4; ++k) c.edge[k] = (int)(t[k] - base);
        int a = c.edge[0], b = c.edge[1], cc = c.edge[2], d = c.edge[3];
        if (cc != (a + 1) % m) throw Error(ErrorKind::Malformed, "under-strand labels must be consecutive: " + code.str());
        bool pos = b == (d + 1) % m, neg = d == (b + 1) % m;
        if (pos && neg)
            pos = d == cc;  // single crossing: the over-strand enters on the edge leaving under
        else if (!pos && !neg)
            throw Error(ErrorKind::Malformed, "over-strand labels must be consecutive: " + code.str());
        c.sign = pos ? 1 : -1;
        xs.push_back(c);
    }
    return PlanarDiagram(std::move(xs));
}

PdNotation to_pd(const PlanarDiagram& d)
{
    PdNotation pd;
    for (auto& c : d.crossings()) pd.crossings.push_back({c.edge[0] + 1, c.edge[1] + 1, c.edge[2] + 1, c.edge[3] + 1});
    return pd;
}

// ---------------------------------------------------------------- braid

std::string BraidWord::str() const
{
    std::ostringstream os;
    os << strands << ":";
    for (int l : letters) os << " " << l;
    return os.str();
}

BraidWord parse_braid(const std::string& text)
{
    BraidWord w;
    std::string body = text;
    auto colon = text.find(':');
    long long declared_len = -1;
    bool has_strands = false;
    if (colon != std::string::npos) {
        std::vector<long long> head = integer_list(text.substr(0, colon));
        if (head.empty() || head.size() > 2) throw Error(ErrorKind::Malformed, "braid header is 's:' or 's,n:'");
        if (head[0] < 1 || head[0] > 1000000) throw Error(ErrorKind::Malformed, "strand count out of range");
        w.strands = (int)head[0];
        has_strands = true;
        if (head.size() == 2) declared_len = head[1];
        body = text.substr(colon + 1);
    }
    int top = 0;
    for (long long v : integer_list(body)) {
        if (v == 0) throw Error(ErrorKind::Malformed, "braid letters are non-zero");
        long long a = v < 0 ? -v : v;
        if (a > 1000000) throw Error(ErrorKind::Malformed, "braid generator out of range");
        w.letters.push_back((int)v);
        top = std::max(top, (int)a);
    }
    if (!has_strands) w.strands = top + 1;
    if (top >= w.strands) throw Error(ErrorKind::Malformed, "braid generator exceeds strand count");
    if (declared_len >= 0 && declared_len != (long long)w.letters.size())
        throw Error(ErrorKind::Malformed, "braid length does not match header");
    return w;
}

PlanarDiagram realize_braid(const BraidWord& w)
{
    int s = w.strands, len = (int)w.letters.size();
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : w.letters) {
        int k = (l < 0 ? -l : l);
        std::swap(perm[k - 1], perm[k]);
    }
    int cyc = 0;
    for (int p = perm[0];; p = perm[p]) {
        ++cyc;
        if (p == 0) break;
    }
    if (cyc != s) throw Error(ErrorKind::NotAKnot, "closure of braid " + w.str() + " has more than one component");
    if (len == 0) return PlanarDiagram(std::vector<Crossing>{});

    // nodes (level, position); a segment of a strand is a class of nodes
    auto node = [&](int level, int pos) { return level * s + pos; };
    std::vector<int> uf((len + 1) * s);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    for (int l = 0; l < len; ++l) {
        int k = std::abs(w.letters[l]);
        for (int p = 0; p < s; ++p)
            if (p != k - 1 && p != k) unite(node(l, p), node(l + 1, p));
    }
    for (int p = 0; p < s; ++p) unite(node(len, p), node(0, p));

    std::vector<std::array<int, 4>> raw(len);
    std::vector<int> sign(len);
    for (int l = 0; l < len; ++l) {
        int k = std::abs(w.letters[l]);
        int bl = find(node(l, k - 1)), br = find(node(l, k)), tl = find(node(l + 1, k - 1)), tr = find(node(l + 1, k));
        if (w.letters[l] > 0) {
            raw[l] = {br, tr, tl, bl};
            sign[l] = 1;
        } else {
            raw[l] = {bl, br, tr, tl};
            sign[l] = -1;
        }
    }
    // relabel segments in traversal order
    std::map<int, std::pair<int, int>> head;
    for (int l = 0; l < len; ++l) {
        head[raw[l][0]] = {l, 0};
        head[raw[l][sign[l] > 0 ? 3 : 1]] = {l, sign[l] > 0 ? 3 : 1};
    }
    std::map<int, int> label;
    int e = find(node(0, 0));
    while (!label.count(e)) {
        int k = (int)label.size();
        label[e] = k;
        auto [x, j] = head.at(e);
        e = raw[x][(j + 2) % 4];
    }
    if ((int)label.size() != 2 * len) throw Error(ErrorKind::NotAKnot, "braid closure is not a single strand");
    std::vector<Crossing> xs(len);
    for (int l = 0; l < len; ++l) {
        for (int k = 0; k < 4; ++k) xs[l].edge[k] = label.at(raw[l][k]);
        xs[l].sign = sign[l];
    }
    return PlanarDiagram(std::move(xs));
}

PlanarDiagram to_diagram(Format f, const std::string& text)
{
    switch (f) {
    case Format::Dt: return realize_dt(parse_dt(text));
    case Format::Gauss: return realize_gauss(parse_gauss(text));
    case Format::Pd: return realize_pd(parse_pd(text));
    case Format::Braid: return realize_braid(parse_braid(text));
    }
    throw Error(ErrorKind::Internal, "unknown format");
}

}  // namespace sfknot
