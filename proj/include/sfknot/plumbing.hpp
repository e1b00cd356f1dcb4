#pragma once

#include "sfknot/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sfknot {

// Vertex-weighted forest. Vertices carry external ids; edges refer to positions.
struct WeightedTree {
    std::vector<long long> ids;
    std::vector<long> weights;
    std::vector<std::pair<int, int>> edges;

    int size() const { return (int)weights.size(); }
    int degree(int v) const;
    int index_of(long long id) const;  // -1 if absent
    void validate() const;             // simple graph without cycles
};

enum class FormKind { NegativeDefinite, NegativeSemiDefinite, Other };
enum class Orientation { PositiveSeifert, NotCertified };

const char* form_kind_name(FormKind k);
const char* orientation_name(Orientation o);

struct FormClass {
    FormKind kind = FormKind::Other;
    int bad_points = 0;
};

IntMatrix intersection_form(const WeightedTree& t);
int bad_point_count(const WeightedTree& t);
FormClass classify_form(const WeightedTree& t);
Orientation orientation_class(const WeightedTree& t);

WeightedTree delete_vertex(const WeightedTree& t, long long id);
WeightedTree decrement_weight(const WeightedTree& t, long long id);

// "v id weight" / "e id id" lines; unprefixed lines are vertices until the first
// blank line and edges after it. '#' starts a comment.
WeightedTree parse_tree(const std::string& text);
std::string format_tree(const WeightedTree& t);

WeightedTree e8_tree();
WeightedTree star_tree(long center, const std::vector<long>& legs);

}  // namespace sfknot
