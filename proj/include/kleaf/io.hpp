#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kleaf/dp.hpp"
#include "kleaf/graph.hpp"

namespace kleaf {

struct ParseWarnings {
    std::vector<std::string> messages;
};

/// Edge-list text: the first non-comment line is "n m", then m lines "u v"
/// with 0-based vertices. Lines starting with '#' and blank lines are skipped.
/// Self-loops and repeated arcs are dropped with a warning; anything else
/// malformed raises ParseError carrying the line number.
Digraph parse_digraph(std::istream& in, ParseWarnings* warnings = nullptr);

void write_digraph(std::ostream& out, const Digraph& graph);

/// "YES <leaves>" or "NO"; with `witness`, one "parent child" line per
/// non-root vertex (children ascending) and a closing "root r" line.
void write_decision(std::ostream& out, const Decision& decision, bool witness);

}  // namespace kleaf
