#pragma once

#include "sfknot/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace sfknot {

// Slots of a crossing are listed counterclockwise starting at the incoming
// under-strand: 0 = in-under, 1, 2 = out-under, 3. For a positive crossing slot 3
// is the incoming over-strand, for a negative one slot 1 is.
struct Crossing {
    std::array<int, 4> edge{};
    int sign = 1;

    int in_over_slot() const { return sign > 0 ? 3 : 1; }
    int out_over_slot() const { return sign > 0 ? 1 : 3; }
    bool is_incoming(int slot) const { return slot == 0 || slot == in_over_slot(); }
};

// Oriented knot diagram on the sphere. Edges are numbered 0..2n-1 along the
// orientation, edge k running from visit k to visit k+1.
class PlanarDiagram {
public:
    PlanarDiagram() = default;
    // Validates structure: labels, single traversal cycle, planarity.
    PlanarDiagram(std::vector<Crossing> crossings, std::string name = {});

    int crossing_count() const { return (int)x_.size(); }
    int edge_count() const { return 2 * (int)x_.size(); }
    const std::vector<Crossing>& crossings() const { return x_; }
    const Crossing& crossing(int i) const { return x_[i]; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // (crossing, slot) where edge e ends / starts.
    std::pair<int, int> head(int e) const { return head_[e]; }
    std::pair<int, int> tail(int e) const { return tail_[e]; }

    // crossing met at visit k (the tail of edge k), and whether it is passed over there
    int visit_crossing(int k) const { return tail_[k].first; }
    bool visit_is_over(int k) const { return tail_[k].second != 2; }

    int writhe() const;
    PlanarDiagram mirror() const;  // every crossing switched

    // Faces of the 4-valent graph. Sector k of a crossing lies between slots k and k+1.
    int face_count() const { return face_count_; }
    int sector_face(int crossing, int sector) const { return sector_face_[crossing][sector]; }
    int left_face(int e) const;
    int right_face(int e) const;

private:
    void build_incidence();
    void trace_faces();

    std::vector<Crossing> x_;
    std::string name_;
    std::vector<std::pair<int, int>> head_, tail_;
    std::vector<std::array<int, 4>> sector_face_;
    int face_count_ = 1;
};

struct SeifertCircle {
    std::vector<int> edges;      // in traversal order along the circle
    std::vector<int> crossings;  // crossing passed after each edge, same order
};

struct SeifertBasisCycle {
    // (crossing, direction) with direction +1 when the band is crossed from its
    // western circle to its eastern one (both smoothed arcs pointing north).
    std::vector<std::pair<int, int>> bands;
};

struct SeifertData {
    int seifert_circle_count = 1;
    IntMatrix V;
    std::vector<SeifertBasisCycle> basis;
    std::string basis_description;
};

int seifert_circles(const PlanarDiagram& d);
std::vector<SeifertCircle> seifert_circle_list(const PlanarDiagram& d);
SeifertData seifert_matrix(const PlanarDiagram& d);
bool is_alternating(const PlanarDiagram& d);

}  // namespace sfknot
