#pragma once

#include <span>

#include "kleaf/graph.hpp"

namespace kleaf {

/// Replaces the tree parent of arc.head by arc.tail. The arc must be a
/// non-tree arc of `graph` whose head is neither the root nor an ancestor of
/// its tail.
OutBranching one_change(const Digraph& graph, const OutBranching& tree, Arc arc);

/// Whether one_change(graph, tree, arc) would strictly raise the leaf count:
/// the tail is not a leaf and the head's parent is not a branch vertex.
bool improves(const Digraph& graph, const OutBranching& tree, Arc arc);

/// True iff some non-tree arc admits a leaf-increasing 1-change.
bool has_improving_change(const Digraph& graph, const OutBranching& tree);

/// Out-branching rooted at `root` that no single 1-change can improve.
/// Starts from the breadth-first branching and sweeps the arcs in (tail, head)
/// order until a full sweep changes nothing.
OutBranching one_optimal_out_branching(const Digraph& graph, Vertex root);

/// Same sweep, starting from a given branching.
OutBranching improve_to_one_optimal(const Digraph& graph, OutBranching tree);

/// Applies the 1-change for every arc of `path` missing from the tree, in path
/// order. The path must start at the root; the result contains all its arcs.
OutBranching apply_path_changes(const Digraph& graph, const OutBranching& tree, std::span<const Vertex> path);

}  // namespace kleaf
