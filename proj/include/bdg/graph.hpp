#pragma once

#include "bdg/matrix.hpp"
#include "bdg/numeric.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bdg {

// A vertex stands for a smooth rational curve; the weight is its
// self-intersection number.
struct CurveVertex {
    std::string id;
    long long weight = 0;
    std::string label;
};

// Simple undirected graph of curves meeting transversally: no self-loops, no
// repeated edges. Vertex ids are caller-chosen strings; all canonical orders
// are lexicographic by id.
class WeightedDualGraph {
public:
    WeightedDualGraph() = default;

    void add_vertex(const std::string& id, long long weight, const std::string& label = "");
    void add_edge(const std::string& a, const std::string& b);
    void remove_vertex(const std::string& id);
    void remove_edge(const std::string& a, const std::string& b);
    void set_weight(const std::string& id, long long weight);

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    const CurveVertex& vertex(const std::string& id) const;
    long long weight(const std::string& id) const;

    std::size_t vertex_count() const;
    std::size_t edge_count() const;
    bool empty() const;

    // Sorted lexicographically.
    std::vector<std::string> vertex_ids() const;
    // Each pair (a, b) with a < b; pairs sorted.
    std::vector<std::pair<std::string, std::string>> edge_list() const;
    // Sorted lexicographically.
    std::vector<std::string> neighbors(const std::string& id) const;
    std::size_t degree(const std::string& id) const;

    // Equality of vertex ids, weights, and edges; labels are display-only.
    bool operator==(const WeightedDualGraph& other) const;
    bool operator!=(const WeightedDualGraph& other) const { return !(*this == other); }

private:
    std::map<std::string, CurveVertex> vertices_;
    std::set<std::pair<std::string, std::string>> edges_;

    const CurveVertex& checked(const std::string& id) const;
    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
};

struct IntersectionMatrix {
    std::vector<std::string> ordering;
    IntMatrix entries;
};

// Symmetric matrix with the weights on the diagonal and 1 for each edge,
// rows/columns following the given ordering.
IntersectionMatrix intersection_matrix(const WeightedDualGraph& g,
                                       const std::vector<std::string>& ordering);
IntersectionMatrix intersection_matrix(const WeightedDualGraph& g);

// det(-I(D)); the empty graph yields 1.
Int determinant_d(const WeightedDualGraph& g);

// True iff -I(D) is positive definite; the empty graph counts as definite.
bool is_negative_definite(const WeightedDualGraph& g);

// Maximal connected subgraphs, ordered by their smallest vertex id.
std::vector<WeightedDualGraph> connected_components(const WeightedDualGraph& g);

// Vertices in ids plus all edges between them; throws on unknown ids.
WeightedDualGraph induced_subgraph(const WeightedDualGraph& g, const std::set<std::string>& ids);

bool is_connected(const WeightedDualGraph& g);
bool is_tree(const WeightedDualGraph& g);
// Connected with every degree <= 2 (single vertices count).
bool is_path_graph(const WeightedDualGraph& g);
// Some vertex has degree >= 3.
bool has_branch_vertex(const WeightedDualGraph& g);

} // namespace bdg
