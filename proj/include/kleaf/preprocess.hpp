#pragma once

#include "kleaf/graph.hpp"

namespace kleaf {

/// True iff no out-branching rooted at `root` contains `arc`. Requires the
/// root to reach every vertex.
bool is_useless(const Digraph& graph, Vertex root, Arc arc);

/// Copy of `graph` keeping exactly the arcs that some out-branching rooted
/// at `root` can use. Out-branchings rooted at `root` are unchanged.
Digraph remove_useless_arcs(const Digraph& graph, Vertex root);

}  // namespace kleaf
