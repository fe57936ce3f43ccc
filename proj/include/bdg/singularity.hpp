#pragma once

#include "bdg/cycle.hpp"
#include "bdg/graph.hpp"

#include <cstddef>
#include <string>

namespace bdg {

enum class TieBreak { lowest_id, highest_id };

// Minimal integer cycle Z >= reduced(g) with (Z . D_i) <= 0 for all i,
// computed by the incremental search: start from the reduced cycle and add
// the first violating vertex until none remains. Requires a connected,
// nonempty, negative definite graph. When steps is non-null it receives the
// number of additions performed.
Cycle fundamental_cycle(const WeightedDualGraph& g,
                        std::size_t* steps = nullptr,
                        TieBreak tie_break = TieBreak::lowest_id);

enum class SingularityKind { chain, branched };

struct SingularityReport {
    Cycle fundamental;
    Int pa_fundamental;
    bool rational = false;
    SingularityKind kind = SingularityKind::chain;
};

// Rationality of the contraction of g: rational iff p_a of the fundamental
// cycle is zero. Requires the fundamental_cycle preconditions plus all
// weights <= -2.
SingularityReport is_rational(const WeightedDualGraph& g);

struct MaxPaResult {
    Int max;
    Cycle witness; // lexicographically least maximizer over sorted vertex ids
};

struct MaxPaLimits {
    // Enumeration fallback refuses when vertex_count * log2(bound) exceeds this.
    double enumeration_log2 = 24.0;
    // Tree dynamic program refuses when vertex_count * bound^2 exceeds this.
    double tree_work = 1e9;
};

// Maximum of pa_genus over integer cycles with support exactly the vertex
// set and coefficients in [1, bound]. Trees are solved by dynamic
// programming; other graphs by direct enumeration, guarded by the limits.
MaxPaResult max_pa_bounded(const WeightedDualGraph& g, long long bound,
                           const MaxPaLimits& limits = {});

} // namespace bdg
