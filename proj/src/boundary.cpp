#include "bdg/boundary.hpp"

#include "bdg/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace bdg {

BoundaryConfig::BoundaryConfig(WeightedDualGraph g, std::string c)
    : graph(std::move(g)), c_id(std::move(c)) {
    if (!graph.has_vertex(c_id)) {
        throw InputError("marked vertex '" + c_id + "' is not in the graph");
    }
}

WeightedDualGraph BoundaryConfig::d_part() const {
    std::set<std::string> ids;
    for (const auto& id : graph.vertex_ids()) {
        if (id != c_id) {
            ids.insert(id);
        }
    }
    return induced_subgraph(graph, ids);
}

std::vector<std::string> BoundaryConfig::c_neighbors() const {
    return graph.neighbors(c_id);
}

bool BoundaryConfig::operator==(const BoundaryConfig& other) const {
    return c_id == other.c_id && graph == other.graph;
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.pass; });
}

const ValidationCheck& ValidationReport::check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw InputError("no check named '" + name + "'");
}

ValidationReport validate_boundary(const BoundaryConfig& b) {
    ValidationReport report;

    const bool tree = is_tree(b.graph);
    report.checks.push_back({"tree", tree,
                             tree ? "connected and acyclic"
                                  : "graph is not a tree"});

    const Int d = determinant_d(b.graph);
    report.checks.push_back({"determinant", d == -1, "d(whole graph) = " + d.str()});

    const auto comps = connected_components(b.d_part());
    report.checks.push_back({"components", comps.size() <= 2,
                             "D has " + std::to_string(comps.size()) + " component(s)"});

    const long long cw = b.graph.weight(b.c_id);
    const bool two_vertex = b.graph.vertex_count() == 2 && b.graph.edge_count() == 1;
    const bool c_ok = cw == -1 || two_vertex;
    std::ostringstream cd;
    cd << "marked curve has weight " << cw
       << (two_vertex ? " on the two-vertex ruled-surface boundary" : "");
    report.checks.push_back({"marked-curve", c_ok, cd.str()});

    std::vector<std::string> bad;
    for (const auto& id : b.graph.vertex_ids()) {
        if (id != b.c_id && b.graph.weight(id) > -2) {
            bad.push_back(id);
        }
    }
    std::string detail = "every D-weight <= -2";
    if (!bad.empty()) {
        detail = "weights above -2 at:";
        for (const auto& id : bad) {
            detail += " " + id;
        }
    }
    report.checks.push_back({"minimal-weights", bad.empty(), detail});

    return report;
}

namespace {

CombResult no_match(const std::string& violation) {
    return CombResult{std::nullopt, violation};
}

// Walks a chain away from `from`, starting at `first`, collecting vertices
// until a vertex of degree != 2 ends the walk (that vertex is not included
// unless it has degree 1).
std::vector<std::string> walk_chain(const WeightedDualGraph& g, const std::string& from,
                                    const std::string& first) {
    std::vector<std::string> out;
    std::string prev = from;
    std::string cur = first;
    for (;;) {
        out.push_back(cur);
        const auto nbs = g.neighbors(cur);
        if (nbs.size() == 1) {
            return out;
        }
        if (nbs.size() != 2) {
            out.pop_back();
            return out;
        }
        const std::string next = nbs[0] == prev ? nbs[1] : nbs[0];
        prev = cur;
        cur = next;
    }
}

// True when the subtree hanging off `first` (entered from `from`) contains a
// vertex of degree >= 3.
bool side_has_branch(const WeightedDualGraph& g, const std::string& from,
                     const std::string& first) {
    std::vector<std::pair<std::string, std::string>> stack{{from, first}};
    while (!stack.empty()) {
        const auto [prev, cur] = stack.back();
        stack.pop_back();
        if (g.degree(cur) >= 3) {
            return true;
        }
        for (const auto& nb : g.neighbors(cur)) {
            if (nb != prev) {
                stack.emplace_back(cur, nb);
            }
        }
    }
    return false;
}

// Orders two chains: the longer first; ties go to the chain whose first
// vertex id is smaller.
bool chain_before(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) {
        return a.size() > b.size();
    }
    if (a.empty()) {
        return true;
    }
    return a.front() < b.front();
}

} // namespace

CombResult comb_decompose(const BoundaryConfig& b) {
    if (!is_tree(b.graph)) {
        throw InputError("comb decomposition requires a tree");
    }
    if (b.graph.vertex_count() < 2) {
        return no_match("D is empty");
    }
    if (b.graph.degree(b.c_id) > 2) {
        return no_match("C adjacent to > 2 curves");
    }
    for (const auto& id : b.graph.vertex_ids()) {
        if (b.graph.degree(id) >= 4) {
            return no_match("component with more than 3 branches at " + id);
        }
    }

    std::vector<std::string> branch_ids;
    for (const auto& id : b.graph.vertex_ids()) {
        if (id != b.c_id && b.graph.degree(id) == 3) {
            branch_ids.push_back(id);
        }
    }

    CombDecomposition comb;
    const auto c_nbs = b.graph.neighbors(b.c_id);

    if (branch_ids.empty()) {
        std::vector<std::vector<std::string>> sides;
        for (const auto& nb : c_nbs) {
            sides.push_back(walk_chain(b.graph, b.c_id, nb));
        }
        if (sides.size() == 2 && !chain_before(sides[0], sides[1])) {
            std::swap(sides[0], sides[1]);
        }
        comb.r = 0;
        comb.chains.push_back(sides[0]);
        comb.twigs.push_back(sides.size() == 2 ? sides[1] : std::vector<std::string>{});
        return CombResult{comb, ""};
    }

    // Pick the C-side leading to the branch vertices; the other side is the
    // twig under C and must be branch-free.
    std::string horizontal;
    std::vector<std::string> c_twig;
    if (c_nbs.size() == 1) {
        horizontal = c_nbs[0];
        if (!side_has_branch(b.graph, b.c_id, horizontal)) {
            return no_match("branch vertices unreachable from C");
        }
    } else {
        const bool left = side_has_branch(b.graph, b.c_id, c_nbs[0]);
        const bool right = side_has_branch(b.graph, b.c_id, c_nbs[1]);
        if (left && right) {
            return no_match("twig contains branching component");
        }
        horizontal = left ? c_nbs[0] : c_nbs[1];
        c_twig = walk_chain(b.graph, b.c_id, left ? c_nbs[1] : c_nbs[0]);
    }

    comb.twigs.push_back(c_twig);

    // March from C toward the far end, accumulating chain vertices and
    // closing a group at each branch vertex. Away from C a branch vertex
    // hangs two subtrees: at most one may contain further branch vertices
    // (the spine continuation); the other is that group's twig. The last
    // branch vertex hangs two pure chains; the longer one stays horizontal.
    std::vector<std::string> chain_acc;
    std::string prev = b.c_id;
    std::string cur = horizontal;
    std::size_t seen_branches = 0;
    for (;;) {
        if (b.graph.degree(cur) == 3) {
            comb.chains.push_back(chain_acc);
            chain_acc.clear();
            comb.spine.push_back(cur);
            ++seen_branches;
            std::vector<std::string> away;
            for (const auto& nb : b.graph.neighbors(cur)) {
                if (nb != prev) {
                    away.push_back(nb);
                }
            }
            const bool b0 = side_has_branch(b.graph, cur, away[0]);
            const bool b1 = side_has_branch(b.graph, cur, away[1]);
            if (b0 && b1) {
                return no_match("branch vertices not on a single path");
            }
            if (!b0 && !b1) {
                std::vector<std::string> first = walk_chain(b.graph, cur, away[0]);
                std::vector<std::string> second = walk_chain(b.graph, cur, away[1]);
                if (!chain_before(first, second)) {
                    std::swap(first, second);
                }
                comb.chains.push_back(first);
                comb.twigs.push_back(second);
                break;
            }
            const std::string toward = b0 ? away[0] : away[1];
            comb.twigs.push_back(walk_chain(b.graph, cur, b0 ? away[1] : away[0]));
            prev = cur;
            cur = toward;
        } else {
            chain_acc.push_back(cur);
            const auto nbs = b.graph.neighbors(cur);
            if (nbs.size() != 2) {
                throw InvariantViolation("spine walk fell off the tree");
            }
            const std::string next = nbs[0] == prev ? nbs[1] : nbs[0];
            prev = cur;
            cur = next;
        }
    }

    if (seen_branches != branch_ids.size()) {
        return no_match("branch vertices not on a single path");
    }
    comb.r = static_cast<int>(branch_ids.size()) - 1;
    if (comb.r == 0 && comb.chains[0].empty()) {
        return no_match("C adjacent to the branch vertex with r = 0");
    }
    return CombResult{comb, ""};
}

std::string to_string(KValue v) {
    switch (v) {
        case KValue::anti_ample: return "anti-ample";
        case KValue::trivial: return "trivial";
        case KValue::ample: return "ample";
    }
    return "?";
}

KClass classify_K(const BoundaryConfig& b) {
    if (b.graph.weight(b.c_id) != -1) {
        throw InputError("classification requires the marked curve to have weight -1");
    }
    const WeightedDualGraph d = b.d_part();
    if (!is_negative_definite(d)) {
        throw InputError("classification requires negative definite D");
    }
    const auto nbs = b.c_neighbors();
    const DSharpResult ds =
        compute_d_sharp(d, std::set<std::string>(nbs.begin(), nbs.end()));
    const Rat c = *ds.c_pairing;
    KClass k;
    k.c_pairing = c;
    k.value = c < 1 ? KValue::anti_ample : (c == 1 ? KValue::trivial : KValue::ample);
    return k;
}

namespace {

std::set<std::string> ids_of(const WeightedDualGraph& g) {
    const auto v = g.vertex_ids();
    return {v.begin(), v.end()};
}

// Splits d into the sides around pivot; at most two. The branched side (or,
// failing that, the side with the smaller least id) comes first.
std::pair<WeightedDualGraph, WeightedDualGraph> sides_around(const WeightedDualGraph& d,
                                                             const std::string& pivot) {
    std::set<std::string> rest = ids_of(d);
    rest.erase(pivot);
    const auto comps = connected_components(induced_subgraph(d, rest));
    if (comps.size() > 2) {
        throw InputError("curve '" + pivot + "' separates more than two sides");
    }
    WeightedDualGraph a, b;
    if (comps.size() >= 1) {
        a = comps[0];
    }
    if (comps.size() == 2) {
        b = comps[1];
        if (has_branch_vertex(b) && !has_branch_vertex(a)) {
            std::swap(a, b);
        }
    }
    return {a, b};
}

// The unique vertex of sub adjacent to pivot in host, if any.
std::optional<std::string> attach_vertex(const WeightedDualGraph& host,
                                         const WeightedDualGraph& sub,
                                         const std::string& pivot) {
    std::optional<std::string> found;
    for (const auto& nb : host.neighbors(pivot)) {
        if (sub.has_vertex(nb)) {
            if (found) {
                throw InputError("curve '" + pivot + "' meets one side twice");
            }
            found = nb;
        }
    }
    return found;
}

Int d_without(const WeightedDualGraph& g, const std::optional<std::string>& cut,
              Int empty_value) {
    if (g.empty()) {
        return empty_value;
    }
    if (!cut) {
        return determinant_d(g);
    }
    std::set<std::string> rest = ids_of(g);
    rest.erase(*cut);
    return determinant_d(induced_subgraph(g, rest));
}

} // namespace

SplitDeterminants split_determinants(const BoundaryConfig& b) {
    const WeightedDualGraph d = b.d_part();
    if (d.empty()) {
        throw InputError("shape not recognized: D is empty");
    }
    const auto comps = connected_components(d);
    const auto c_nbs = b.c_neighbors();

    if (comps.size() == 1) {
        // Contracting C turns its neighbor into the next (-1)-curve.
        if (c_nbs.size() != 1) {
            throw InputError("shape not recognized: connected D must meet C once");
        }
        const std::string d1 = c_nbs[0];
        if (d.weight(d1) != -2) {
            throw InputError("shape not recognized: the curve meeting C must have weight -2");
        }
        auto [a, bb] = sides_around(d, d1);
        const auto a_cut = attach_vertex(d, a, d1);
        const auto b_cut = attach_vertex(d, bb, d1);
        SplitDeterminants out;
        out.case_id = 1;
        out.d_a = a.empty() ? Int(1) : determinant_d(a);
        out.d_b = bb.empty() ? Int(1) : determinant_d(bb);
        out.d_a_cut = d_without(a, a_cut, 0);
        out.d_b_cut = d_without(bb, b_cut, 0);
        return out;
    }

    if (comps.size() != 2 || c_nbs.size() != 2) {
        throw InputError("shape not recognized: D must have one or two components meeting C");
    }

    // Tell apart the two-component shapes by whether the (-2)-curve meeting
    // C is a whole component on its own.
    std::optional<std::string> lone_minus2;
    for (const auto& nb : c_nbs) {
        for (const auto& comp : comps) {
            if (comp.has_vertex(nb) && comp.vertex_count() == 1 && d.weight(nb) == -2) {
                lone_minus2 = nb;
            }
        }
    }

    if (lone_minus2) {
        const std::string other =
            c_nbs[0] == *lone_minus2 ? c_nbs[1] : c_nbs[0];
        if (d.weight(other) != -3) {
            throw InputError(
                "shape not recognized: the curve beside the lone (-2)-component must have weight -3");
        }
        // The determinants live two contractions deep: first C, then the
        // image of the lone component.
        WeightedDualGraph big;
        for (const auto& comp : comps) {
            if (!comp.has_vertex(*lone_minus2)) {
                big = comp;
            }
        }
        std::set<std::string> rest = ids_of(big);
        rest.erase(other);
        const auto old_neighbors = big.neighbors(other);
        const auto pieces = connected_components(induced_subgraph(big, rest));
        if (pieces.size() > 2) {
            throw InputError("shape not recognized: the (-3)-curve separates more than two sides");
        }
        WeightedDualGraph a, bb;
        if (pieces.size() >= 1) {
            a = pieces[0];
        }
        if (pieces.size() == 2) {
            bb = pieces[1];
            if (has_branch_vertex(bb) && !has_branch_vertex(a)) {
                std::swap(a, bb);
            }
        }
        std::optional<std::string> a_cut, b_cut;
        for (const auto& nb : old_neighbors) {
            if (a.has_vertex(nb)) {
                a_cut = nb;
            } else if (bb.has_vertex(nb)) {
                b_cut = nb;
            }
        }
        SplitDeterminants out;
        out.case_id = 2;
        out.m = 3;
        out.d_a = a.empty() ? Int(1) : determinant_d(a);
        out.d_b = bb.empty() ? Int(1) : determinant_d(bb);
        out.d_a_cut = d_without(a, a_cut, 0);
        out.d_b_cut = d_without(bb, b_cut, 0);
        return out;
    }

    // Two components, no lone (-2): one side attaches through a (-2)-curve,
    // the other through weight -m, m >= 3.
    std::optional<std::string> d1, d2;
    for (const auto& nb : c_nbs) {
        if (d.weight(nb) == -2 && !d1) {
            d1 = nb;
        } else {
            d2 = nb;
        }
    }
    if (!d1 || !d2 || d.weight(*d2) > -3) {
        throw InputError(
            "shape not recognized: C must meet a (-2)-curve and a curve of weight <= -3");
    }
    WeightedDualGraph k1, k2;
    for (const auto& comp : comps) {
        if (comp.has_vertex(*d1)) {
            k1 = comp;
        }
        if (comp.has_vertex(*d2)) {
            k2 = comp;
        }
    }
    std::set<std::string> a_ids = ids_of(k1);
    a_ids.erase(*d1);
    if (a_ids.empty()) {
        throw InputError("shape not recognized: nothing remains beside the (-2)-curve");
    }
    const WeightedDualGraph a = induced_subgraph(k1, a_ids);
    if (!is_connected(a)) {
        throw InputError("shape not recognized: removing the (-2)-curve disconnects its side");
    }
    std::set<std::string> b_ids = ids_of(k2);
    b_ids.erase(*d2);
    const WeightedDualGraph bb = induced_subgraph(k2, b_ids);
    if (!bb.empty() && !is_connected(bb)) {
        throw InputError("shape not recognized: removing the attaching curve disconnects its side");
    }
    const auto a_cut = attach_vertex(k1, a, *d1);
    const auto b_cut = attach_vertex(k2, bb, *d2);
    SplitDeterminants out;
    out.case_id = 3;
    out.m = -d.weight(*d2);
    out.d_a = determinant_d(a);
    out.d_b = bb.empty() ? Int(1) : determinant_d(bb);
    out.d_a_cut = d_without(a, a_cut, 1);
    out.d_b_cut = d_without(bb, b_cut, 0);
    return out;
}

bool coprime_check(const BoundaryConfig& b) {
    const auto comps = connected_components(b.d_part());
    if (comps.size() != 2) {
        throw InputError("coprimality needs exactly two components");
    }
    for (const auto& comp : comps) {
        int met = 0;
        for (const auto& nb : b.c_neighbors()) {
            if (comp.has_vertex(nb)) {
                ++met;
            }
        }
        if (met != 1) {
            throw InputError("each component must meet the marked curve exactly once");
        }
    }
    Int da = determinant_d(comps[0]);
    Int db = determinant_d(comps[1]);
    return boost::multiprecision::gcd(boost::multiprecision::abs(da),
                                      boost::multiprecision::abs(db)) == 1;
}

} // namespace bdg
