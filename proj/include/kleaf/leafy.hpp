#pragma once

#include <span>
#include <vector>

#include "kleaf/backward.hpp"
#include "kleaf/graph.hpp"

namespace kleaf {

enum class WitnessSide {
    leaf_exit,             // the path leaves through a leaf of T
    branch_successor_entry // the path re-enters through a child of a branch vertex
};

// How a root dipath reaches a backward arc (u, v). `exit` is the last path
// vertex outside the subtree of v, `entry` the vertex after it, and `meet` the
// first path vertex on the tree path between v and u.
struct ArcWitness {
    Arc arc;
    Dipath path;  // from the root, last arc is `arc`
    Vertex exit = kNoVertex;
    Vertex entry = kNoVertex;
    Vertex meet = kNoVertex;
    WitnessSide side = WitnessSide::leaf_exit;
};

/// Shortest dipath from `root` ending with `arc`, found by breadth-first
/// search in the digraph minus arc.head. Throws InvariantViolation if the arc
/// is useless for the root.
Dipath witness_path(const Digraph& graph, Vertex root, Arc arc);

/// Witness data for each arc. Every arc must point from a tree vertex to one
/// of its proper ancestors, and the branching must be 1-optimal.
std::vector<ArcWitness> annotate(const Digraph& graph, const OutBranching& tree, std::span<const Arc> arcs, Vertex root);

// A tuple (tail, head) with a witness, all given as positions in one linear
// order. Every head must precede every tail; head < witness <= tail.
struct OrderedTuple {
    int tail = 0;
    int head = 0;
    int witness = 0;
};

struct PivotChoice {
    std::size_t chosen = 0;              // index into the input tuples
    int witness = 0;                     // witness of the chosen tuple
    std::vector<std::size_t> straddling; // tuples with head < witness <= tail
};

/// Picks a tuple whose witness is straddled by at least k tuples; needs at
/// least 2k - 1 tuples.
PivotChoice select_pivot(std::span<const OrderedTuple> tuples, int k);

struct LeafyConstruction {
    OutBranching branching;
    int proof_case = 0;        // 1: shared leaf exit, 2: shared branch-successor entry
    Vertex pivot = kNoVertex;  // the meet vertex the new root path ends at
    Dipath root_path;
    std::vector<Arc> rerouted; // arcs adopted after the root path was installed
};

/// From a heavy (z, l) pair on a 1-optimal branching of a digraph without
/// useless arcs, builds an out-branching with at least k leaves. Requires
/// k >= 2 and fewer than k leaves in `tree`.
OutBranching construct_leafy_branching(const Digraph& graph, const OutBranching& tree, const BackwardReport& report, int k);
LeafyConstruction construct_leafy_branching_detailed(const Digraph& graph, const OutBranching& tree,
                                                     const BackwardReport& report, int k);

}  // namespace kleaf
