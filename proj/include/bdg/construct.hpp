#pragma once

#include "bdg/boundary.hpp"
#include "bdg/graph.hpp"
#include "bdg/singularity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdg {

// Ruled-surface seed: vertices M (weight -m) and F (weight 0) joined by an
// edge. Requires m >= 2.
struct HirzebruchSeed {
    long long m = 2;
};

WeightedDualGraph seed_graph(const HirzebruchSeed& seed);

struct Move {
    enum class Kind { on_curve, at_edge };
    Kind kind = Kind::on_curve;
    std::string a; // target vertex, or first edge endpoint
    std::string b; // second edge endpoint for at_edge
};

using MoveSequence = std::vector<Move>;

// Applies blow-ups starting from the seed. The first move must be on_curve
// at F; every later move must target the latest exceptional vertex or an
// edge incident to it. New vertices are named E1, E2, ... and the last one
// becomes C.
BoundaryConfig apply_sequence(const HirzebruchSeed& seed, const MoveSequence& moves);

// Minimal rooted-tree encoding with C as root; equal strings iff the
// boundaries are isomorphic as weighted trees with marked vertex. Requires a
// tree.
std::string canonical_form(const BoundaryConfig& b);

struct EnumFilters {
    bool negdef = false;  // keep only boundaries whose D is negative definite
    bool minres = false;  // keep only boundaries with every D-weight <= -2
    std::optional<KValue> kclass; // keep only this K-class (implies computing it)
};

struct EnumLimits {
    int max_depth = 10;
    std::size_t max_boundaries = 1000000;
};

struct ComponentRationality {
    std::string component_id; // smallest vertex id of the component
    bool rational = false;
};

struct EnumeratedBoundary {
    BoundaryConfig boundary;
    std::string canonical;
    // Present when D is negative definite and C has weight -1.
    std::optional<KClass> kclass;
    // One verdict per D-component that is negative definite with weights <= -2.
    std::vector<ComponentRationality> component_rationality;
};

// Exhausts move sequences up to the given depth over seeds m in
// [m_min, m_max], deduplicates by canonical form, filters, and returns the
// survivors ordered by (vertex count, canonical form).
std::vector<EnumeratedBoundary> enumerate_boundaries(long long m_min, long long m_max,
                                                     int depth, const EnumFilters& filters,
                                                     const EnumLimits& limits = {});

} // namespace bdg
