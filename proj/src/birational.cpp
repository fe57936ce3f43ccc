#include "bdg/birational.hpp"

#include "bdg/errors.hpp"

#include <algorithm>
#include <utility>

namespace bdg {

WeightedDualGraph blow_down(const WeightedDualGraph& g, const std::string& v) {
    if (g.weight(v) != -1) {
        throw InputError("cannot contract '" + v + "': weight is not -1");
    }
    const auto nbs = g.neighbors(v);
    if (nbs.size() > 2) {
        throw InputError("cannot contract '" + v + "': image would have a triple point");
    }
    if (nbs.size() == 2 && g.has_edge(nbs[0], nbs[1])) {
        throw InputError("cannot contract '" + v + "': neighbors already meet");
    }
    WeightedDualGraph out = g;
    out.remove_vertex(v);
    for (const auto& nb : nbs) {
        out.set_weight(nb, g.weight(nb) + 1);
    }
    if (nbs.size() == 2) {
        out.add_edge(nbs[0], nbs[1]);
    }
    return out;
}

namespace {

std::string fresh_exceptional_id(const WeightedDualGraph& g) {
    for (int k = 1;; ++k) {
        const std::string id = "E" + std::to_string(k);
        if (!g.has_vertex(id)) {
            return id;
        }
    }
}

} // namespace

WeightedDualGraph blow_up_on_curve(const WeightedDualGraph& g, const std::string& v,
                                   const std::string& new_id) {
    if (!g.has_vertex(v)) {
        throw InputError("unknown vertex '" + v + "'");
    }
    const std::string id = new_id.empty() ? fresh_exceptional_id(g) : new_id;
    WeightedDualGraph out = g;
    out.add_vertex(id, -1);
    out.add_edge(id, v);
    out.set_weight(v, g.weight(v) - 1);
    return out;
}

WeightedDualGraph blow_up_at_edge(const WeightedDualGraph& g, const std::string& a,
                                  const std::string& b, const std::string& new_id) {
    if (!g.has_edge(a, b)) {
        throw InputError("no edge between '" + a + "' and '" + b + "'");
    }
    const std::string id = new_id.empty() ? fresh_exceptional_id(g) : new_id;
    WeightedDualGraph out = g;
    out.remove_edge(a, b);
    out.set_weight(a, g.weight(a) - 1);
    out.set_weight(b, g.weight(b) - 1);
    out.add_vertex(id, -1);
    out.add_edge(id, a);
    out.add_edge(id, b);
    return out;
}

std::string to_string(PeelCase c) {
    switch (c) {
        case PeelCase::case1: return "1";
        case PeelCase::case2: return "2";
        case PeelCase::case3: return "3";
        case PeelCase::indefinite_intermediate: return "indefinite-intermediate";
    }
    return "?";
}

PeelOutcome peel_step(const BoundaryConfig& b) {
    const WeightedDualGraph d = b.d_part();
    if (d.empty()) {
        throw InputError("nothing left to peel");
    }

    // The contraction case, read off the input shape.
    PeelCase tag;
    const auto comps = connected_components(d);
    if (comps.size() == 1) {
        tag = PeelCase::case1;
    } else {
        bool lone_minus2 = false;
        for (const auto& nb : b.c_neighbors()) {
            for (const auto& comp : comps) {
                if (comp.has_vertex(nb) && comp.vertex_count() == 1 &&
                    d.weight(nb) == -2) {
                    lone_minus2 = true;
                }
            }
        }
        tag = lone_minus2 ? PeelCase::case2 : PeelCase::case3;
    }

    const WeightedDualGraph image = blow_down(b.graph, b.c_id);
    std::vector<std::string> minus_ones;
    for (const auto& id : image.vertex_ids()) {
        if (image.weight(id) == -1) {
            minus_ones.push_back(id);
        }
    }
    if (minus_ones.empty()) {
        throw InputError("no (-1)-curve in the contracted image");
    }
    if (minus_ones.size() > 1) {
        throw InvariantViolation("multiple (-1)-curves in the contracted image: " +
                                 minus_ones[0] + ", " + minus_ones[1]);
    }
    BoundaryConfig next(image, minus_ones[0]);
    if (!is_negative_definite(next.d_part())) {
        tag = PeelCase::indefinite_intermediate;
    }
    return PeelOutcome{std::move(next), tag};
}

namespace {

ReductionStep make_step(const std::string& contracted, const PeelOutcome& out) {
    ReductionStep step{contracted, out.boundary, std::nullopt, out.tag};
    const WeightedDualGraph d = out.boundary.d_part();
    if (is_negative_definite(d)) {
        const auto nbs = out.boundary.c_neighbors();
        const DSharpResult ds =
            compute_d_sharp(d, std::set<std::string>(nbs.begin(), nbs.end()));
        step.c_pairing = ds.c_pairing;
    }
    return step;
}

} // namespace

ReductionTrace reduce_to_trivial(const BoundaryConfig& b) {
    const KClass k = classify_K(b);
    if (k.value != KValue::ample) {
        throw InputError("reduction starts from an ample boundary, got " + to_string(k.value));
    }
    bool branched = false;
    for (const auto& comp : connected_components(b.d_part())) {
        if (has_branch_vertex(comp)) {
            branched = true;
        }
    }
    if (!branched) {
        throw InputError("reduction requires a branching component");
    }

    ReductionTrace trace{{}, b};
    BoundaryConfig cur = b;

    // Hunt for the first stage where (D# . C) reaches 1. Indefinite stages
    // pass through unclassified; a definite stage below 1 cannot happen.
    bool at_one = false;
    while (!at_one) {
        PeelOutcome out = [&] {
            try {
                return peel_step(cur);
            } catch (const InputError& e) {
                throw InputError(std::string("reduction exhausted the boundary: ") + e.what());
            }
        }();
        ReductionStep step = make_step(cur.c_id, out);
        if (step.c_pairing) {
            if (*step.c_pairing < 1) {
                throw InvariantViolation("(D# . C) dropped below 1 during reduction");
            }
            at_one = *step.c_pairing == 1;
        }
        cur = out.boundary;
        trace.steps.push_back(std::move(step));
    }

    // The value can sit at 1 for several stages; the target is the last of
    // them, so keep peeling while the next stage is definite and still at 1.
    for (;;) {
        std::optional<PeelOutcome> out;
        try {
            out = peel_step(cur);
        } catch (const InputError&) {
            break;
        }
        ReductionStep step = make_step(cur.c_id, *out);
        if (!step.c_pairing || *step.c_pairing != 1) {
            break;
        }
        cur = out->boundary;
        trace.steps.push_back(std::move(step));
    }

    trace.final = cur;
    return trace;
}

ReductionTrace identity_trace(const BoundaryConfig& b) {
    return ReductionTrace{{}, b};
}

namespace {

const WeightedDualGraph* branched_component(const std::vector<WeightedDualGraph>& comps,
                                            const char* which) {
    const WeightedDualGraph* found = nullptr;
    for (const auto& comp : comps) {
        if (has_branch_vertex(comp)) {
            if (found) {
                throw InputError(std::string(which) + " has two branching components");
            }
            found = &comp;
        }
    }
    if (!found) {
        throw InputError(std::string(which) + " has no branching component");
    }
    return found;
}

} // namespace

Cycle build_Z(const BoundaryConfig& original, const ReductionTrace& trace) {
    const KClass k = classify_K(trace.final);
    if (k.value != KValue::trivial) {
        throw InputError("the reduced boundary is not K-trivial");
    }

    const auto final_comps = connected_components(trace.final.d_part());
    const WeightedDualGraph* z_comp = branched_component(final_comps, "the reduced D");
    const DSharpResult ds = compute_d_sharp(*z_comp);
    if (!ds.integral) {
        throw InvariantViolation("D# of the reduced branching component is not integral");
    }

    const auto original_comps = connected_components(original.d_part());
    const WeightedDualGraph* e_comp = branched_component(original_comps, "the original D");

    // Survivors keep their ids across contractions, so the strict transform
    // of Z~ is a coefficient copy; everything else in E gets coefficient 1.
    std::map<std::string, Rat> coeffs;
    for (const auto& id : e_comp->vertex_ids()) {
        if (z_comp->has_vertex(id)) {
            coeffs[id] = ds.cycle.at(id);
        } else {
            coeffs[id] = 1;
        }
    }
    for (const auto& id : z_comp->vertex_ids()) {
        if (!e_comp->has_vertex(id)) {
            throw InvariantViolation("reduced branching component left the original one");
        }
    }
    Cycle z(original.graph, std::move(coeffs));

    const auto z_supp = z.support();
    const auto e_ids = e_comp->vertex_ids();
    if (z_supp != std::set<std::string>(e_ids.begin(), e_ids.end())) {
        throw InvariantViolation("support of Z differs from the branching component");
    }
    if (pa_genus(z) != 1) {
        throw InvariantViolation("arithmetic genus of Z is not 1");
    }
    return z;
}

} // namespace bdg
