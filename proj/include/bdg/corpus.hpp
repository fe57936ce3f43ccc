#pragma once

#include "bdg/boundary.hpp"
#include "bdg/construct.hpp"

#include <string>
#include <vector>

namespace bdg {

// A frozen boundary with its published reference values; the citation names
// where the expectations come from.
struct CorpusEntry {
    std::string name;      // stable key, also the corpus file stem
    std::string citation;
    std::string graph_text;

    BoundaryConfig boundary() const;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

// Recorded blow-up recipe rebuilding a parametric entry from its
// ruled-surface seed, canonically equal to the entry's boundary.
struct CorpusConstruction {
    HirzebruchSeed seed;
    MoveSequence moves;
};

// Null for entries without a recorded recipe.
const CorpusConstruction* corpus_construction(const std::string& name);

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail; // first mismatch when failing
};

// Replays every recorded expectation through the library with exact
// comparisons; one result per corpus entry, ordered by name.
std::vector<VerifyResult> verify_paper();

} // namespace bdg
