#include "bdg/graph.hpp"

#include "bdg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace bdg {

namespace {

void check_id_text(const std::string& id) {
    if (id.empty()) {
        throw InputError("vertex id must be nonempty");
    }
    for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
            throw InputError("vertex id '" + id + "' contains whitespace or '#'");
        }
    }
}

} // namespace

std::pair<std::string, std::string> WeightedDualGraph::key(const std::string& a,
                                                           const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

const CurveVertex& WeightedDualGraph::checked(const std::string& id) const {
    const auto it = vertices_.find(id);
    if (it == vertices_.end()) {
        throw InputError("unknown vertex '" + id + "'");
    }
    return it->second;
}

void WeightedDualGraph::add_vertex(const std::string& id, long long weight,
                                   const std::string& label) {
    check_id_text(id);
    if (vertices_.count(id)) {
        throw InputError("duplicate vertex '" + id + "'");
    }
    vertices_[id] = CurveVertex{id, weight, label};
}

void WeightedDualGraph::add_edge(const std::string& a, const std::string& b) {
    if (a == b) {
        throw InputError("self-loop at '" + a + "'");
    }
    checked(a);
    checked(b);
    if (!edges_.insert(key(a, b)).second) {
        throw InputError("duplicate edge " + a + " -- " + b);
    }
}

void WeightedDualGraph::remove_vertex(const std::string& id) {
    checked(id);
    vertices_.erase(id);
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first == id || it->second == id) {
            it = edges_.erase(it);
        } else {
            ++it;
        }
    }
}

void WeightedDualGraph::remove_edge(const std::string& a, const std::string& b) {
    if (edges_.erase(key(a, b)) == 0) {
        throw InputError("no edge between '" + a + "' and '" + b + "'");
    }
}

void WeightedDualGraph::set_weight(const std::string& id, long long weight) {
    checked(id);
    vertices_[id].weight = weight;
}

bool WeightedDualGraph::has_vertex(const std::string& id) const {
    return vertices_.count(id) != 0;
}

bool WeightedDualGraph::has_edge(const std::string& a, const std::string& b) const {
    return edges_.count(key(a, b)) != 0;
}

const CurveVertex& WeightedDualGraph::vertex(const std::string& id) const {
    return checked(id);
}

long long WeightedDualGraph::weight(const std::string& id) const {
    return checked(id).weight;
}

std::size_t WeightedDualGraph::vertex_count() const {
    return vertices_.size();
}

std::size_t WeightedDualGraph::edge_count() const {
    return edges_.size();
}

bool WeightedDualGraph::empty() const {
    return vertices_.empty();
}

std::vector<std::string> WeightedDualGraph::vertex_ids() const {
    std::vector<std::string> ids;
    ids.reserve(vertices_.size());
    for (const auto& [id, v] : vertices_) {
        ids.push_back(id);
    }
    return ids;
}

std::vector<std::pair<std::string, std::string>> WeightedDualGraph::edge_list() const {
    return {edges_.begin(), edges_.end()};
}

std::vector<std::string> WeightedDualGraph::neighbors(const std::string& id) const {
    checked(id);
    std::vector<std::string> out;
    for (const auto& [a, b] : edges_) {
        if (a == id) {
            out.push_back(b);
        } else if (b == id) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t WeightedDualGraph::degree(const std::string& id) const {
    return neighbors(id).size();
}

bool WeightedDualGraph::operator==(const WeightedDualGraph& other) const {
    if (edges_ != other.edges_ || vertices_.size() != other.vertices_.size()) {
        return false;
    }
    for (const auto& [id, v] : vertices_) {
        const auto it = other.vertices_.find(id);
        if (it == other.vertices_.end() || it->second.weight != v.weight) {
            return false;
        }
    }
    return true;
}

IntersectionMatrix intersection_matrix(const WeightedDualGraph& g,
                                       const std::vector<std::string>& ordering) {
    std::set<std::string> seen;
    for (const auto& id : ordering) {
        if (!g.has_vertex(id)) {
            throw InputError("ordering names unknown vertex '" + id + "'");
        }
        if (!seen.insert(id).second) {
            throw InputError("ordering repeats vertex '" + id + "'");
        }
    }
    if (ordering.size() != g.vertex_count()) {
        throw InputError("ordering does not cover every vertex");
    }
    const std::size_t n = ordering.size();
    IntersectionMatrix m;
    m.ordering = ordering;
    m.entries.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m.entries[i][i] = g.weight(ordering[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.has_edge(ordering[i], ordering[j])) {
                m.entries[i][j] = 1;
                m.entries[j][i] = 1;
            }
        }
    }
    return m;
}

IntersectionMatrix intersection_matrix(const WeightedDualGraph& g) {
    return intersection_matrix(g, g.vertex_ids());
}

namespace {

IntMatrix negated_intersection_entries(const WeightedDualGraph& g) {
    IntMatrix m = intersection_matrix(g).entries;
    for (auto& row : m) {
        for (auto& x : row) {
            x = -x;
        }
    }
    return m;
}

} // namespace

Int determinant_d(const WeightedDualGraph& g) {
    return determinant(negated_intersection_entries(g));
}

bool is_negative_definite(const WeightedDualGraph& g) {
    return is_positive_definite(negated_intersection_entries(g));
}

std::vector<WeightedDualGraph> connected_components(const WeightedDualGraph& g) {
    const std::vector<std::string> ids = g.vertex_ids();
    std::set<std::string> unvisited(ids.begin(), ids.end());
    std::vector<WeightedDualGraph> out;
    while (!unvisited.empty()) {
        std::set<std::string> comp;
        std::deque<std::string> queue{*unvisited.begin()};
        unvisited.erase(unvisited.begin());
        while (!queue.empty()) {
            const std::string cur = queue.front();
            queue.pop_front();
            comp.insert(cur);
            for (const auto& nb : g.neighbors(cur)) {
                if (unvisited.erase(nb)) {
                    queue.push_back(nb);
                }
            }
        }
        out.push_back(induced_subgraph(g, comp));
    }
    // Component discovery already walks ids in increasing order, so the
    // result is ordered by smallest member id.
    return out;
}

WeightedDualGraph induced_subgraph(const WeightedDualGraph& g, const std::set<std::string>& ids) {
    WeightedDualGraph out;
    for (const auto& id : ids) {
        const CurveVertex& v = g.vertex(id);
        out.add_vertex(v.id, v.weight, v.label);
    }
    for (const auto& [a, b] : g.edge_list()) {
        if (ids.count(a) && ids.count(b)) {
            out.add_edge(a, b);
        }
    }
    return out;
}

bool is_connected(const WeightedDualGraph& g) {
    return g.empty() || connected_components(g).size() == 1;
}

bool is_tree(const WeightedDualGraph& g) {
    return is_connected(g) && !g.empty() && g.edge_count() == g.vertex_count() - 1;
}

bool is_path_graph(const WeightedDualGraph& g) {
    if (!is_tree(g)) {
        return false;
    }
    for (const auto& id : g.vertex_ids()) {
        if (g.degree(id) > 2) {
            return false;
        }
    }
    return true;
}

bool has_branch_vertex(const WeightedDualGraph& g) {
    for (const auto& id : g.vertex_ids()) {
        if (g.degree(id) >= 3) {
            return true;
        }
    }
    return false;
}

} // namespace bdg
