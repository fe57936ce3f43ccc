#pragma once

#include "bdg/cycle.hpp"
#include "bdg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdg {

// A curve configuration with one marked vertex C; D denotes the rest.
struct BoundaryConfig {
    WeightedDualGraph graph;
    std::string c_id;

    BoundaryConfig(WeightedDualGraph g, std::string c);

    // The graph without C.
    WeightedDualGraph d_part() const;
    // D-vertices adjacent to C, sorted.
    std::vector<std::string> c_neighbors() const;

    bool operator==(const BoundaryConfig& other) const;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    const ValidationCheck& check(const std::string& name) const;
};

// Checks, each reported individually: the graph is a tree; d(whole) = -1;
// D has at most two connected components; the marked curve has weight -1
// (or the whole graph is the two-vertex ruled-surface boundary); every
// D-weight is <= -2.
ValidationReport validate_boundary(const BoundaryConfig& b);

// The comb labeling of a boundary tree: r+1 spine (branch) vertices when any
// exist, horizontal chains, and downward twigs. Group 0 is the chain/twig at
// C; group i sits at spine vertex i; group r+1 owns the terminal chain.
struct CombDecomposition {
    int r = 0;
    std::vector<std::string> spine;               // empty for a pure chain
    std::vector<std::vector<std::string>> chains; // index 0..r+1 (0 only when degenerate)
    std::vector<std::vector<std::string>> twigs;  // same indexing
};

struct CombResult {
    std::optional<CombDecomposition> comb;
    std::string violation; // first violated constraint when no match
    bool matched() const { return comb.has_value(); }
};

// Requires a tree with C present; shape failures come back as no-match
// values naming the violated constraint.
CombResult comb_decompose(const BoundaryConfig& b);

enum class KValue { anti_ample, trivial, ample };

struct KClass {
    KValue value = KValue::anti_ample;
    Rat c_pairing;
};

std::string to_string(KValue v);

// Trichotomy by exact comparison of (D# . C) with 1. Requires C of weight -1
// and negative definite D.
KClass classify_K(const BoundaryConfig& b);

// The four subgraph determinants of the contraction cases. Case 1: D
// connected, C meets a (-2)-curve D1; A/B are the sides of D minus D1, and
// the cut variants drop the curve adjacent to D1 on each side. Case 2: one
// C-neighbor is a lone (-2)-component and the other has weight -3; the
// determinants are taken after contracting twice. Case 3: D has two
// components met by curves of weight -2 and -m (m >= 3).
struct SplitDeterminants {
    int case_id = 0;
    Int d_a;
    Int d_b;
    Int d_a_cut;
    Int d_b_cut;
    long long m = 0; // -(weight) of the second attaching curve in cases 2 and 3
};

SplitDeterminants split_determinants(const BoundaryConfig& b);

// gcd(|d(A)|, |d(B)|) = 1 for the two components of D; requires exactly two
// components, each meeting C once.
bool coprime_check(const BoundaryConfig& b);

} // namespace bdg
