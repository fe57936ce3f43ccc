#include "bdg/construct.hpp"

#include "bdg/birational.hpp"
#include "bdg/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace bdg {

WeightedDualGraph seed_graph(const HirzebruchSeed& seed) {
    if (seed.m < 2) {
        throw InputError("seed parameter must be at least 2");
    }
    WeightedDualGraph g;
    g.add_vertex("M", -seed.m);
    g.add_vertex("F", 0);
    g.add_edge("M", "F");
    return g;
}

BoundaryConfig apply_sequence(const HirzebruchSeed& seed, const MoveSequence& moves) {
    if (moves.empty()) {
        throw InputError("empty move sequence leaves no marked curve");
    }
    WeightedDualGraph g = seed_graph(seed);
    std::string last;
    int k = 0;
    for (const Move& move : moves) {
        const std::string id = "E" + std::to_string(++k);
        if (last.empty()) {
            if (move.kind != Move::Kind::on_curve || move.a != "F") {
                throw InputError("the first move must blow up a point on F");
            }
            g = blow_up_on_curve(g, "F", id);
        } else if (move.kind == Move::Kind::on_curve) {
            if (move.a != last) {
                throw InputError("move " + std::to_string(k) +
                                 " must target the latest exceptional curve " + last);
            }
            g = blow_up_on_curve(g, last, id);
        } else {
            if (move.a != last && move.b != last) {
                throw InputError("move " + std::to_string(k) +
                                 " must use an edge at the latest exceptional curve " + last);
            }
            g = blow_up_at_edge(g, move.a, move.b, id);
        }
        last = id;
    }
    return BoundaryConfig(std::move(g), last);
}

namespace {

std::string encode_subtree(const WeightedDualGraph& g, const std::string& v,
                           const std::string& parent) {
    std::vector<std::string> parts;
    for (const auto& nb : g.neighbors(v)) {
        if (nb != parent) {
            parts.push_back(encode_subtree(g, nb, v));
        }
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + std::to_string(g.weight(v));
    for (const auto& p : parts) {
        out += p;
    }
    out += ")";
    return out;
}

} // namespace

std::string canonical_form(const BoundaryConfig& b) {
    if (!is_tree(b.graph)) {
        throw InputError("canonical form requires a tree");
    }
    return encode_subtree(b.graph, b.c_id, "");
}

namespace {

void enumerate_from(const WeightedDualGraph& g, const std::string& last, int moves_used,
                    int depth, const EnumLimits& limits,
                    std::map<std::string, BoundaryConfig>& found, std::size_t& candidates) {
    if (moves_used >= 1) {
        if (++candidates > limits.max_boundaries) {
            throw InputError("enumeration exceeded the boundary limit");
        }
        BoundaryConfig b(g, last);
        const std::string canon = canonical_form(b);
        found.try_emplace(canon, std::move(b));
    }
    if (moves_used >= depth) {
        return;
    }
    if (moves_used == 0) {
        enumerate_from(blow_up_on_curve(g, "F", "E1"), "E1", 1, depth, limits, found,
                       candidates);
        return;
    }
    const std::string next_id = "E" + std::to_string(moves_used + 1);
    enumerate_from(blow_up_on_curve(g, last, next_id), next_id, moves_used + 1, depth,
                   limits, found, candidates);
    for (const auto& nb : g.neighbors(last)) {
        enumerate_from(blow_up_at_edge(g, last, nb, next_id), next_id, moves_used + 1,
                       depth, limits, found, candidates);
    }
}

bool all_weights_at_most_minus_two(const WeightedDualGraph& g) {
    for (const auto& id : g.vertex_ids()) {
        if (g.weight(id) > -2) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<EnumeratedBoundary> enumerate_boundaries(long long m_min, long long m_max,
                                                     int depth, const EnumFilters& filters,
                                                     const EnumLimits& limits) {
    if (depth < 1) {
        throw InputError("depth must be at least 1");
    }
    if (depth > limits.max_depth) {
        throw InputError("depth exceeds the configured maximum of " +
                         std::to_string(limits.max_depth));
    }
    if (m_min < 2 || m_min > m_max) {
        throw InputError("seed range must satisfy 2 <= m_min <= m_max");
    }
    std::map<std::string, BoundaryConfig> found;
    std::size_t candidates = 0;
    for (long long m = m_min; m <= m_max; ++m) {
        enumerate_from(seed_graph(HirzebruchSeed{m}), "", 0, depth, limits, found,
                       candidates);
    }
    std::vector<EnumeratedBoundary> out;
    for (const auto& [canon, b] : found) {
        const WeightedDualGraph d = b.d_part();
        if (filters.minres && !all_weights_at_most_minus_two(d)) {
            continue;
        }
        const bool negdef = is_negative_definite(d);
        if (filters.negdef && !negdef) {
            continue;
        }
        std::optional<KClass> kclass;
        if (negdef && b.graph.weight(b.c_id) == -1) {
            kclass = classify_K(b);
        }
        if (filters.kclass && (!kclass || kclass->value != *filters.kclass)) {
            continue;
        }
        std::vector<ComponentRationality> rationality;
        for (const auto& comp : connected_components(d)) {
            if (all_weights_at_most_minus_two(comp) && is_negative_definite(comp)) {
                rationality.push_back(
                    {comp.vertex_ids().front(), is_rational(comp).rational});
            }
        }
        out.push_back(EnumeratedBoundary{b, canon, std::move(kclass), std::move(rationality)});
    }
    std::sort(out.begin(), out.end(),
              [](const EnumeratedBoundary& a, const EnumeratedBoundary& b) {
                  const auto an = a.boundary.graph.vertex_count();
                  const auto bn = b.boundary.graph.vertex_count();
                  return an != bn ? an < bn : a.canonical < b.canonical;
              });
    return out;
}

} // namespace bdg
