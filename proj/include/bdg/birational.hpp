#pragma once

#include "bdg/boundary.hpp"
#include "bdg/cycle.hpp"
#include "bdg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdg {

// Contracts a (-1)-vertex of degree <= 2 whose neighbors are not adjacent:
// the vertex disappears, each neighbor's weight rises by one, and two
// neighbors become adjacent.
WeightedDualGraph blow_down(const WeightedDualGraph& g, const std::string& v);

// Inserts a new (-1)-vertex. On a curve: attach to v and decrement v's
// weight. At an edge: replace the edge by a path through the new vertex and
// decrement both endpoint weights. Empty new_id picks the first free "E<k>".
WeightedDualGraph blow_up_on_curve(const WeightedDualGraph& g, const std::string& v,
                                   const std::string& new_id = "");
WeightedDualGraph blow_up_at_edge(const WeightedDualGraph& g, const std::string& a,
                                  const std::string& b, const std::string& new_id = "");

enum class PeelCase { case1 = 1, case2 = 2, case3 = 3, indefinite_intermediate };

std::string to_string(PeelCase c);

struct PeelOutcome {
    BoundaryConfig boundary;
    PeelCase tag;
};

// Contracts C and remarks the unique (-1)-curve of the image as the new C.
// The tag records the contraction case by input shape (connected D; lone
// (-2)-component beside a -3; two components otherwise), downgraded to
// indefinite_intermediate when the resulting D is not negative definite.
// Zero candidate curves is an input error; two or more is an invariant
// violation.
PeelOutcome peel_step(const BoundaryConfig& b);

struct ReductionStep {
    std::string contracted_id;
    BoundaryConfig boundary; // snapshot after the step
    std::optional<Rat> c_pairing; // present when the snapshot's D is negative definite
    PeelCase tag;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    BoundaryConfig final;
};

// Peels an ample boundary with a branching component until (D# . C) reaches
// 1, then keeps peeling through the trailing stretch of definite stages that
// stay at exactly 1, returning the last of them. A definite stage below 1 is
// an invariant violation; running out of graph is an input error.
ReductionTrace reduce_to_trivial(const BoundaryConfig& b);

// Zero-step trace for boundaries that are already where a reduction would
// stop.
ReductionTrace identity_trace(const BoundaryConfig& b);

// The integer cycle f^-1(Z~) + (E - f^-1(Z~)_red) on the original boundary:
// coefficients of the final branched component's D# pulled back along
// surviving vertex ids, plus 1 on the rest of the original branched
// component E. Asserts support = E and arithmetic genus 1.
Cycle build_Z(const BoundaryConfig& original, const ReductionTrace& trace);

} // namespace bdg
