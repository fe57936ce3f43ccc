#pragma once

#include "bdg/cycle.hpp"
#include "bdg/graph.hpp"

#include <map>
#include <optional>
#include <string>

namespace bdg {

struct ParsedGraph {
    WeightedDualGraph graph;
    std::optional<std::string> c_id;
};

// One directive per line: "v <id> <weight>", "e <id> <id>", "c <id>";
// '#' starts a comment. Vertices may be declared in any order relative to
// the edges that use them. Errors carry "<name>:<line>:<col>".
ParsedGraph parse_graph_text(const std::string& text, const std::string& name = "<input>");
ParsedGraph parse_graph_file(const std::string& path);

// Canonical form: sorted v lines, then sorted e lines, then the c line.
std::string emit_graph_text(const WeightedDualGraph& g,
                            const std::optional<std::string>& c_id = std::nullopt);

// Comma-separated "<id>=<integer-or-fraction>" entries over g's vertices.
std::map<std::string, Rat> parse_cycle_literal(const WeightedDualGraph& g,
                                               const std::string& text);

// Nonzero coefficients, sorted by id, in the literal syntax.
std::string emit_cycle_literal(const Cycle& z);

} // namespace bdg
