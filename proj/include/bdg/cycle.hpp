#pragma once

#include "bdg/graph.hpp"
#include "bdg/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace bdg {

// A divisor supported on the vertices of a fixed graph. Coefficients are
// exact rationals; missing ids mean coefficient zero.
class Cycle {
public:
    Cycle(WeightedDualGraph graph, std::map<std::string, Rat> coeffs);

    const WeightedDualGraph& graph() const { return *graph_; }
    const std::map<std::string, Rat>& coeffs() const { return coeffs_; }

    // Zero for vertices without an entry; throws on unknown ids.
    Rat at(const std::string& id) const;
    // Ids with nonzero coefficient.
    std::set<std::string> support() const;
    bool is_integral() const;
    bool is_zero() const;

    // Componentwise sum; both cycles must live on equal graphs.
    Cycle operator+(const Cycle& other) const;
    bool operator==(const Cycle& other) const;

private:
    std::shared_ptr<const WeightedDualGraph> graph_;
    std::map<std::string, Rat> coeffs_;
};

// (D_i . K_V) = -2 - (D_i)^2 for a smooth rational curve.
long long canonical_degree(const CurveVertex& v);
long long canonical_degree(long long weight);

// z1^T I z2, the bilinear extension of the intersection form.
Rat pairing(const Cycle& z1, const Cycle& z2);

// (z . K_V) = sum of coeff * canonical_degree over the support.
Rat canonical_pairing(const Cycle& z);

// p_a(z) = (z.z + z.K)/2 + 1 for an integral cycle with nonempty support.
Rat pa_genus(const Cycle& z);

struct DSharpResult {
    Cycle cycle;
    // Present when the marked curve's adjacency was supplied.
    std::optional<Rat> c_pairing;
    bool integral = false;
};

// The unique rational cycle with (D_i . K_V + D#) = 0 for every vertex,
// solved exactly; requires a negative definite graph. When c_adjacency (the
// D-vertices meeting the marked curve) is given, c_pairing = sum of their
// coefficients.
DSharpResult compute_d_sharp(const WeightedDualGraph& g,
                             const std::optional<std::set<std::string>>& c_adjacency = std::nullopt);

// (K_X . Gamma) = c_pairing - 1; requires a result carrying c_pairing.
Rat k_gamma_mumford(const DSharpResult& d_sharp);

} // namespace bdg
