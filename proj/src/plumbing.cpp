#include "sfknot/plumbing.hpp"
#include "sfknot/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sfknot {

const char* form_kind_name(FormKind k)
{
    switch (k) {
    case FormKind::NegativeDefinite: return "NegativeDefinite";
    case FormKind::NegativeSemiDefinite: return "NegativeSemiDefinite";
    case FormKind::Other: return "Other";
    }
    return "?";
}

const char* orientation_name(Orientation o)
{
    return o == Orientation::PositiveSeifert ? "PositiveSeifert" : "NotCertified";
}

int WeightedTree::degree(int v) const
{
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

int WeightedTree::index_of(long long id) const
{
    auto it = std::find(ids.begin(), ids.end(), id);
    return it == ids.end() ? -1 : (int)(it - ids.begin());
}

void WeightedTree::validate() const
{
    if (ids.size() != weights.size()) throw Error(ErrorKind::Malformed, "tree ids and weights differ in length");
    std::set<long long> seen(ids.begin(), ids.end());
    if (seen.size() != ids.size()) throw Error(ErrorKind::Malformed, "duplicate vertex id");
    std::vector<int> p(size());
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= size() || b >= size()) throw Error(ErrorKind::Malformed, "edge to unknown vertex");
        if (a == b) throw Error(ErrorKind::Malformed, "self-loop in plumbing graph");
        if (!es.insert({std::min(a, b), std::max(a, b)}).second) throw Error(ErrorKind::Malformed, "repeated edge");
        int ra = find(a), rb = find(b);
        if (ra == rb) throw Error(ErrorKind::Malformed, "plumbing graph has a cycle");
        p[ra] = rb;
    }
}

IntMatrix intersection_form(const WeightedTree& t)
{
    t.validate();
    int n = t.size();
    IntMatrix q(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) q[i][i] = t.weights[i];
    for (auto [a, b] : t.edges) q[a][b] = q[b][a] = 1;
    return q;
}

int bad_point_count(const WeightedTree& t)
{
    int bad = 0;
    for (int v = 0; v < t.size(); ++v)
        if (t.weights[v] > -t.degree(v)) ++bad;
    return bad;
}

FormClass classify_form(const WeightedTree& t)
{
    IntMatrix q = intersection_form(t);
    for (auto& row : q)
        for (auto& x : row) x = -x;
    Inertia in = inertia(q);
    FormClass fc;
    fc.bad_points = bad_point_count(t);
    if (in.negative == 0 && in.zero == 0)
        fc.kind = FormKind::NegativeDefinite;
    else if (in.negative == 0)
        fc.kind = FormKind::NegativeSemiDefinite;
    return fc;
}

Orientation orientation_class(const WeightedTree& t)
{
    return classify_form(t).kind == FormKind::Other ? Orientation::NotCertified : Orientation::PositiveSeifert;
}

WeightedTree delete_vertex(const WeightedTree& t, long long id)
{
    int v = t.index_of(id);
    if (v < 0) throw Error(ErrorKind::Malformed, "no vertex " + std::to_string(id));
    WeightedTree r;
    for (int i = 0; i < t.size(); ++i)
        if (i != v) {
            r.ids.push_back(t.ids[i]);
            r.weights.push_back(t.weights[i]);
        }
    for (auto [a, b] : t.edges)
        if (a != v && b != v) r.edges.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    return r;
}

WeightedTree decrement_weight(const WeightedTree& t, long long id)
{
    int v = t.index_of(id);
    if (v < 0) throw Error(ErrorKind::Malformed, "no vertex " + std::to_string(id));
    WeightedTree r = t;
    r.weights[v] -= 1;
    return r;
}

WeightedTree parse_tree(const std::string& text)
{
    WeightedTree t;
    std::vector<std::pair<long long, long long>> raw_edges;
    std::istringstream is(text);
    std::string line;
    bool edge_section = false, seen_vertex = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string w;
        while (ls >> w) tok.push_back(w);
        if (tok.empty()) {
            if (seen_vertex) edge_section = true;
            continue;
        }
        bool is_edge = edge_section;
        if (tok[0] == "v" || tok[0] == "e") {
            is_edge = tok[0] == "e";
            tok.erase(tok.begin());
        }
        if (tok.size() != 2) throw Error(ErrorKind::Malformed, "tree line " + std::to_string(lineno) + " needs two integers");
        long long a, b;
        try {
            size_t ua = 0, ub = 0;
            a = std::stoll(tok[0], &ua);
            b = std::stoll(tok[1], &ub);
            if (ua != tok[0].size() || ub != tok[1].size()) throw std::invalid_argument("x");
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Malformed, "tree line " + std::to_string(lineno) + " needs two integers");
        }
        if (is_edge) {
            raw_edges.push_back({a, b});
        } else {
            t.ids.push_back(a);
            t.weights.push_back((long)b);
            seen_vertex = true;
        }
    }
    for (auto [a, b] : raw_edges) {
        int ia = t.index_of(a), ib = t.index_of(b);
        if (ia < 0 || ib < 0) throw Error(ErrorKind::Malformed, "edge refers to an undeclared vertex");
        t.edges.push_back({ia, ib});
    }
    t.validate();
    return t;
}

std::string format_tree(const WeightedTree& t)
{
    std::ostringstream os;
    for (int i = 0; i < t.size(); ++i) os << "v " << t.ids[i] << " " << t.weights[i] << "\n";
    for (auto [a, b] : t.edges) os << "e " << t.ids[a] << " " << t.ids[b] << "\n";
    return os.str();
}

WeightedTree e8_tree()
{
    // chain 1-2-3-4-5-6-7 with vertex 8 attached to 5
    WeightedTree t;
    for (int i = 1; i <= 8; ++i) {
        t.ids.push_back(i);
        t.weights.push_back(-2);
    }
    for (int i = 0; i < 6; ++i) t.edges.push_back({i, i + 1});
    t.edges.push_back({4, 7});
    return t;
}

WeightedTree star_tree(long center, const std::vector<long>& legs)
{
    WeightedTree t;
    t.ids.push_back(0);
    t.weights.push_back(center);
    for (size_t i = 0; i < legs.size(); ++i) {
        t.ids.push_back((long long)i + 1);
        t.weights.push_back(legs[i]);
        t.edges.push_back({0, (int)i + 1});
    }
    return t;
}

}  // namespace sfknot
