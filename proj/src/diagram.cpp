#include "sfknot/diagram.hpp"
#include "sfknot/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace sfknot {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, std::string name)
    : x_(std::move(crossings)), name_(std::move(name))
{
    build_incidence();
    trace_faces();
    if (face_count_ != crossing_count() + 2)
        throw Error(ErrorKind::Unrealizable, "crossing data does not describe a planar diagram (" +
                                                  std::to_string(face_count_) + " faces for " +
                                                  std::to_string(crossing_count()) + " crossings)");
}

void PlanarDiagram::build_incidence()
{
    int n = crossing_count(), m = 2 * n;
    head_.assign(m, {-1, -1});
    tail_.assign(m, {-1, -1});
    for (int i = 0; i < n; ++i) {
        const Crossing& c = x_[i];
        if (c.sign != 1 && c.sign != -1) throw Error(ErrorKind::Malformed, "crossing sign must be +1 or -1");
        for (int s = 0; s < 4; ++s) {
            int e = c.edge[s];
            if (e < 0 || e >= m) throw Error(ErrorKind::Malformed, "edge label out of range");
            auto& slot = c.is_incoming(s) ? head_[e] : tail_[e];
            if (slot.first != -1) throw Error(ErrorKind::Malformed, "edge " + std::to_string(e) + " used twice in one direction");
            slot = {i, s};
        }
        if (c.edge[2] != (c.edge[0] + 1) % m || c.edge[c.out_over_slot()] != (c.edge[c.in_over_slot()] + 1) % m)
            throw Error(ErrorKind::Malformed, "edge labels are not consecutive along the strands of crossing " +
                                                  std::to_string(i));
    }
    for (int e = 0; e < m; ++e)
        if (head_[e].first < 0 || tail_[e].first < 0)
            throw Error(ErrorKind::Malformed, "edge " + std::to_string(e) + " is not attached at both ends");
}

void PlanarDiagram::trace_faces()
{
    int n = crossing_count();
    sector_face_.assign(n, {-1, -1, -1, -1});
    if (n == 0) {
        face_count_ = 2;
        return;
    }
    auto other_end = [&](int x, int s) {
        int e = x_[x].edge[s];
        return x_[x].is_incoming(s) ? tail_[e] : head_[e];
    };
    int f = 0;
    for (int x0 = 0; x0 < n; ++x0)
        for (int j0 = 0; j0 < 4; ++j0) {
            // arriving through slot j means sector j-1 is traversed next
            int sec0 = (j0 + 3) % 4;
            if (sector_face_[x0][sec0] != -1) continue;
            int x = x0, j = j0;
            while (sector_face_[x][(j + 3) % 4] == -1) {
                int out = (j + 3) % 4;
                sector_face_[x][out] = f;
                auto [y, t] = other_end(x, out);
                x = y;
                j = t;
            }
            ++f;
        }
    face_count_ = f;
}

int PlanarDiagram::left_face(int e) const
{
    if (x_.empty()) return 0;
    auto [x, j] = head_[e];
    return sector_face_[x][(j + 3) % 4];
}

int PlanarDiagram::right_face(int e) const
{
    if (x_.empty()) return 1;
    auto [x, j] = head_[e];
    return sector_face_[x][j];
}

int PlanarDiagram::writhe() const
{
    int w = 0;
    for (auto& c : x_) w += c.sign;
    return w;
}

PlanarDiagram PlanarDiagram::mirror() const
{
    std::vector<Crossing> m;
    for (auto& c : x_) {
        Crossing r;
        int start = c.in_over_slot();
        for (int k = 0; k < 4; ++k) r.edge[k] = c.edge[(start + k) % 4];
        r.sign = -c.sign;
        m.push_back(r);
    }
    return PlanarDiagram(std::move(m), name_);
}

bool is_alternating(const PlanarDiagram& d)
{
    int m = d.edge_count();
    for (int k = 0; k < m; ++k)
        if (d.visit_is_over(k) == d.visit_is_over((k + 1) % m)) return false;
    return true;
}

namespace {

// Edge following edge e on its Seifert circle.
int smoothing_next(const PlanarDiagram& d, int e)
{
    auto [x, j] = d.head(e);
    const Crossing& c = d.crossing(x);
    return j == 0 ? c.edge[c.out_over_slot()] : c.edge[2];
}

}  // namespace

std::vector<SeifertCircle> seifert_circle_list(const PlanarDiagram& d)
{
    int m = d.edge_count();
    std::vector<SeifertCircle> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    std::vector<char> seen(m, 0);
    for (int e0 = 0; e0 < m; ++e0) {
        if (seen[e0]) continue;
        SeifertCircle c;
        int e = e0;
        while (!seen[e]) {
            seen[e] = 1;
            c.edges.push_back(e);
            c.crossings.push_back(d.head(e).first);
            e = smoothing_next(d, e);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int seifert_circles(const PlanarDiagram& d) { return (int)seifert_circle_list(d).size(); }

namespace {

enum class BandKind { Flat, WestFold, EastFold };

struct Band {
    int west = -1, east = -1;  // circles
    int sign = 1;
    BandKind kind = BandKind::Flat;
    int parent = -1;  // circle under the fold
    int key = 0;      // smallest incident edge label
};

struct Foot {
    int visit;
    int sub;
};

struct Chord {
    int circle;
    Foot from, to;
};

struct Curve {
    std::vector<std::pair<int, int>> bands;
    std::vector<Chord> chords;
};

class SeifertSurface {
public:
    explicit SeifertSurface(const PlanarDiagram& d) : d_(d)
    {
        circles_ = seifert_circle_list(d);
        int m = d.edge_count();
        circle_of_edge_.assign(m, -1);
        for (int c = 0; c < (int)circles_.size(); ++c)
            for (int e : circles_[c].edges) circle_of_edge_[e] = c;
        if (d.crossing_count() == 0) return;
        build_regions();
        build_bands();
    }

    SeifertData compute()
    {
        SeifertData sd;
        sd.seifert_circle_count = (int)circles_.size();
        if (d_.crossing_count() == 0) return sd;
        std::vector<Curve> curves = basis_curves();
        int b = (int)curves.size();
        sd.V.assign(b, std::vector<Int>(b));
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) sd.V[i][j] = linking(curves[i], curves[j]);
        std::ostringstream os;
        for (int i = 0; i < b; ++i) {
            SeifertBasisCycle cyc;
            cyc.bands = curves[i].bands;
            sd.basis.push_back(cyc);
            os << "cycle " << i << ":";
            for (auto [x, s] : cyc.bands) os << " X" << x << (s > 0 ? "+" : "-");
            os << "\n";
        }
        sd.basis_description = os.str();
        return sd;
    }

private:
    void build_regions()
    {
        int n = d_.crossing_count();
        UnionFind uf(d_.face_count());
        for (int x = 0; x < n; ++x) {
            const Crossing& c = d_.crossing(x);
            int in_sector = c.sign > 0 ? 3 : 0;
            uf.unite(d_.sector_face(x, in_sector), d_.sector_face(x, (in_sector + 2) % 4));
        }
        std::map<int, int> ids;
        region_of_face_.assign(d_.face_count(), -1);
        for (int f = 0; f < d_.face_count(); ++f) {
            int r = uf.find(f);
            if (!ids.count(r)) {
                int k = (int)ids.size();
                ids[r] = k;
            }
            region_of_face_[f] = ids[r];
        }
        int nreg = (int)ids.size();
        int s = (int)circles_.size();
        if (nreg != s + 1) throw Error(ErrorKind::Internal, "smoothing does not split the sphere into circles+1 regions");

        left_region_.assign(s, -1);
        right_region_.assign(s, -1);
        for (int c = 0; c < s; ++c)
            for (int e : circles_[c].edges) {
                int l = region_of_face_[d_.left_face(e)], r = region_of_face_[d_.right_face(e)];
                if ((left_region_[c] != -1 && left_region_[c] != l) || (right_region_[c] != -1 && right_region_[c] != r))
                    throw Error(ErrorKind::Internal, "inconsistent sides along a Seifert circle");
                left_region_[c] = l;
                right_region_[c] = r;
            }

        // region/circle tree rooted at the region left of edge 0
        std::vector<std::vector<int>> circles_at(nreg);
        for (int c = 0; c < s; ++c) {
            circles_at[left_region_[c]].push_back(c);
            circles_at[right_region_[c]].push_back(c);
        }
        std::vector<int> depth(nreg, -1);
        std::deque<int> q;
        int root = region_of_face_[d_.left_face(0)];
        depth[root] = 0;
        q.push_back(root);
        while (!q.empty()) {
            int r = q.front();
            q.pop_front();
            for (int c : circles_at[r]) {
                int o = left_region_[c] == r ? right_region_[c] : left_region_[c];
                if (depth[o] == -1) {
                    depth[o] = depth[r] + 1;
                    q.push_back(o);
                }
            }
        }
        interior_.assign(s, -1);
        ccw_.assign(s, false);
        for (int c = 0; c < s; ++c) {
            int l = left_region_[c], r = right_region_[c];
            if (depth[l] < 0 || depth[r] < 0 || depth[l] == depth[r])
                throw Error(ErrorKind::Internal, "disconnected smoothing graph");
            interior_[c] = depth[l] > depth[r] ? l : r;
            ccw_[c] = interior_[c] == l;
        }
    }

    void build_bands()
    {
        int n = d_.crossing_count();
        bands_.resize(n);
        visit_.assign(circles_.size(), std::map<int, int>());
        for (int c = 0; c < (int)circles_.size(); ++c)
            for (int k = 0; k < (int)circles_[c].crossings.size(); ++k) visit_[c][circles_[c].crossings[k]] = k;
        for (int x = 0; x < n; ++x) {
            const Crossing& c = d_.crossing(x);
            Band& b = bands_[x];
            b.sign = c.sign;
            // with both smoothed arcs pointing north the western arc carries the
            // in-over strand of a positive crossing and the in-under strand of a negative one
            int west_in = c.sign > 0 ? c.edge[c.in_over_slot()] : c.edge[0];
            int east_in = c.sign > 0 ? c.edge[0] : c.edge[c.in_over_slot()];
            b.west = circle_of_edge_[west_in];
            b.east = circle_of_edge_[east_in];
            if (b.west == b.east) throw Error(ErrorKind::Internal, "band joins a Seifert circle to itself");
            int mid = region_of_face_[d_.sector_face(x, c.sign > 0 ? 3 : 0)];
            if (interior_[b.west] == mid) {
                b.kind = BandKind::WestFold;
                b.parent = b.west;
            } else if (interior_[b.east] == mid) {
                b.kind = BandKind::EastFold;
                b.parent = b.east;
            }
            b.key = *std::min_element(c.edge.begin(), c.edge.end());
        }
    }

    std::vector<Curve> basis_curves()
    {
        int s = (int)circles_.size(), n = d_.crossing_count();
        std::vector<std::vector<int>> incident(s);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return bands_[a].key < bands_[b].key; });
        for (int x : order) {
            incident[bands_[x].west].push_back(x);
            incident[bands_[x].east].push_back(x);
        }
        std::vector<int> parent_band(s, -1), parent_circle(s, -1), depth(s, -1);
        std::vector<char> in_tree(n, 0);
        std::deque<int> q;
        depth[circle_of_edge_[0]] = 0;
        q.push_back(circle_of_edge_[0]);
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            for (int x : incident[c]) {
                int o = bands_[x].west == c ? bands_[x].east : bands_[x].west;
                if (depth[o] != -1) continue;
                depth[o] = depth[c] + 1;
                parent_band[o] = x;
                parent_circle[o] = c;
                in_tree[x] = 1;
                q.push_back(o);
            }
        }
        for (int c = 0; c < s; ++c)
            if (depth[c] < 0) throw Error(ErrorKind::Internal, "disconnected Seifert graph");

        auto step = [&](int x, int from) { return std::make_pair(x, bands_[x].west == from ? 1 : -1); };
        std::vector<Curve> curves;
        for (int x : order) {
            if (in_tree[x]) continue;
            Curve cv;
            cv.bands.push_back({x, 1});
            // tree path from the eastern circle back to the western one
            int a = bands_[x].east, b = bands_[x].west;
            std::vector<std::pair<int, int>> up, down;
            while (depth[a] > depth[b]) {
                up.push_back(step(parent_band[a], a));
                a = parent_circle[a];
            }
            while (depth[b] > depth[a]) {
                down.push_back(step(parent_band[b], parent_circle[b]));
                b = parent_circle[b];
            }
            while (a != b) {
                up.push_back(step(parent_band[a], a));
                a = parent_circle[a];
                down.push_back(step(parent_band[b], parent_circle[b]));
                b = parent_circle[b];
            }
            for (auto& u : up) cv.bands.push_back(u);
            for (auto it = down.rbegin(); it != down.rend(); ++it) cv.bands.push_back(*it);
            curves.push_back(std::move(cv));
        }
        return curves;
    }

    int arrival(std::pair<int, int> st) const { return st.second > 0 ? bands_[st.first].east : bands_[st.first].west; }
    int departure(std::pair<int, int> st) const { return st.second > 0 ? bands_[st.first].west : bands_[st.first].east; }

    Foot foot(int x, int circle, int lateral) const
    {
        int side = bands_[x].west == circle ? 1 : -1;
        return {visit_[circle].at(x), side * lateral};
    }

    std::vector<Chord> chords(const Curve& cv, int lateral) const
    {
        std::vector<Chord> out;
        size_t k = cv.bands.size();
        for (size_t i = 0; i < k; ++i) {
            auto cur = cv.bands[i], nxt = cv.bands[(i + 1) % k];
            int c = arrival(cur);
            if (departure(nxt) != c) throw Error(ErrorKind::Internal, "basis curve is not closed");
            out.push_back({c, foot(cur.first, c, lateral), foot(nxt.first, c, lateral)});
        }
        return out;
    }

    // strictly inside the forward arc from p to q on a circle with m visits
    static bool inside(const Foot& x, const Foot& p, const Foot& q, int m)
    {
        auto key = [&](const Foot& f) {
            int k = ((f.visit - p.visit) % m + m) % m * 4 + (f.sub - p.sub);
            return k < 0 ? k + 4 * m : k;
        };
        int kx = key(x);
        return kx > 0 && kx < key(q);
    }

    // linking number of a with the positive push-off of b
    Int linking(const Curve& a, const Curve& b) const
    {
        const int sa = -1, sb = 1;
        std::vector<Chord> ca = chords(a, sa), cb = chords(b, sb);
        long v = 0;
        for (auto& u : ca)
            for (auto& w : cb) {
                if (u.circle != w.circle || ccw_[u.circle]) continue;
                int m = (int)circles_[u.circle].crossings.size();
                bool end_in = inside(w.to, u.from, u.to, m);
                bool start_in = inside(w.from, u.from, u.to, m);
                if (end_in && !start_in) v += 1;
                if (start_in && !end_in) v -= 1;
            }
        for (auto& w : cb) {
            int m = (int)circles_[w.circle].crossings.size();
            for (auto [x, dir] : a.bands) {
                const Band& bd = bands_[x];
                if (bd.kind == BandKind::Flat || bd.parent != w.circle) continue;
                if (inside(foot(x, w.circle, sa), w.from, w.to, m)) v += dir;
            }
        }
        for (auto [x, da] : a.bands)
            for (auto [y, db] : b.bands)
                if (x == y && bands_[x].sign * (sa < sb ? -1 : 1) == -1) v -= bands_[x].sign * da * db;
        return Int(v);
    }

    const PlanarDiagram& d_;
    std::vector<SeifertCircle> circles_;
    std::vector<int> circle_of_edge_;
    std::vector<int> region_of_face_, left_region_, right_region_, interior_;
    std::vector<bool> ccw_;
    std::vector<Band> bands_;
    std::vector<std::map<int, int>> visit_;
};

}  // namespace

SeifertData seifert_matrix(const PlanarDiagram& d)
{
    SeifertSurface s(d);
    SeifertData sd = s.compute();
    int b = d.crossing_count() - sd.seifert_circle_count + 1;
    if ((int)sd.V.size() != b) throw Error(ErrorKind::Internal, "Seifert basis has the wrong rank");
    return sd;
}

}  // namespace sfknot
