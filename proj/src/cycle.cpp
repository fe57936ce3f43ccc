#include "bdg/cycle.hpp"

#include "bdg/errors.hpp"
#include "bdg/matrix.hpp"

#include <utility>

namespace bdg {

Cycle::Cycle(WeightedDualGraph graph, std::map<std::string, Rat> coeffs)
    : graph_(std::make_shared<WeightedDualGraph>(std::move(graph))), coeffs_(std::move(coeffs)) {
    for (const auto& [id, c] : coeffs_) {
        if (!graph_->has_vertex(id)) {
            throw InputError("cycle names unknown vertex '" + id + "'");
        }
    }
}

Rat Cycle::at(const std::string& id) const {
    if (!graph_->has_vertex(id)) {
        throw InputError("unknown vertex '" + id + "'");
    }
    const auto it = coeffs_.find(id);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

std::set<std::string> Cycle::support() const {
    std::set<std::string> out;
    for (const auto& [id, c] : coeffs_) {
        if (c != 0) {
            out.insert(id);
        }
    }
    return out;
}

bool Cycle::is_integral() const {
    for (const auto& [id, c] : coeffs_) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

bool Cycle::is_zero() const {
    return support().empty();
}

Cycle Cycle::operator+(const Cycle& other) const {
    if (*graph_ != *other.graph_) {
        throw InputError("cycles live on different graphs");
    }
    std::map<std::string, Rat> sum = coeffs_;
    for (const auto& [id, c] : other.coeffs_) {
        sum[id] += c;
    }
    return Cycle(*graph_, std::move(sum));
}

bool Cycle::operator==(const Cycle& other) const {
    if (*graph_ != *other.graph_) {
        return false;
    }
    for (const auto& id : graph_->vertex_ids()) {
        if (at(id) != other.at(id)) {
            return false;
        }
    }
    return true;
}

long long canonical_degree(long long weight) {
    return -2 - weight;
}

long long canonical_degree(const CurveVertex& v) {
    return canonical_degree(v.weight);
}

Rat pairing(const Cycle& z1, const Cycle& z2) {
    if (z1.graph() != z2.graph()) {
        throw InputError("cycles live on different graphs");
    }
    const WeightedDualGraph& g = z1.graph();
    Rat total = 0;
    for (const auto& [id, c] : z1.coeffs()) {
        if (c == 0) {
            continue;
        }
        Rat row = Rat(g.weight(id)) * z2.at(id);
        for (const auto& nb : g.neighbors(id)) {
            row += z2.at(nb);
        }
        total += c * row;
    }
    return total;
}

Rat canonical_pairing(const Cycle& z) {
    Rat total = 0;
    for (const auto& [id, c] : z.coeffs()) {
        total += c * Rat(canonical_degree(z.graph().weight(id)));
    }
    return total;
}

Rat pa_genus(const Cycle& z) {
    if (!z.is_integral()) {
        throw InputError("arithmetic genus requires integer coefficients");
    }
    if (z.support().empty()) {
        throw InputError("arithmetic genus requires nonempty support");
    }
    return (pairing(z, z) + canonical_pairing(z)) / 2 + 1;
}

DSharpResult compute_d_sharp(const WeightedDualGraph& g,
                             const std::optional<std::set<std::string>>& c_adjacency) {
    if (!is_negative_definite(g)) {
        throw InputError("graph is not negative definite");
    }
    const IntersectionMatrix m = intersection_matrix(g);
    std::vector<Int> rhs(m.ordering.size());
    for (std::size_t i = 0; i < m.ordering.size(); ++i) {
        rhs[i] = -Int(canonical_degree(g.weight(m.ordering[i])));
    }
    const std::vector<Rat> alpha = solve_linear(m.entries, rhs);
    std::map<std::string, Rat> coeffs;
    for (std::size_t i = 0; i < m.ordering.size(); ++i) {
        coeffs[m.ordering[i]] = alpha[i];
    }
    Cycle cycle(g, std::move(coeffs));
    DSharpResult result{cycle, std::nullopt, cycle.is_integral()};
    if (c_adjacency) {
        Rat sum = 0;
        for (const auto& id : *c_adjacency) {
            sum += cycle.at(id);
        }
        result.c_pairing = sum;
    }
    return result;
}

Rat k_gamma_mumford(const DSharpResult& d_sharp) {
    if (!d_sharp.c_pairing) {
        throw InputError("no marked curve adjacency was supplied");
    }
    return *d_sharp.c_pairing - 1;
}

} // namespace bdg
