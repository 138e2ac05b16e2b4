#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kleaf/graph.hpp"

namespace kleaf {

// Called once per out-branching with its parent array (kNoVertex at the
// root). Return false to stop the enumeration.
using BranchingVisitor = std::function<bool(std::span<const Vertex> parent)>;

/// Backtracking over per-vertex parent choices with cycle pruning. Visits
/// every out-branching rooted at `root` exactly once; returns how many were
/// visited.
std::uint64_t for_each_out_branching(const Digraph& graph, Vertex root, const BranchingVisitor& visit);

std::vector<OutBranching> enumerate_out_branchings(const Digraph& graph, Vertex root);

/// Independent enumerator: filters every (n-1)-subset of arcs. Only meant for
/// tiny graphs; returns parent arrays in lexicographic order.
std::vector<std::vector<Vertex>> enumerate_out_branchings_by_arc_subsets(const Digraph& graph, Vertex root);

struct BruteForceResult {
    int max_leaves = 0;                 // 0 when there is no out-branching at all
    std::optional<OutBranching> best;   // first maximum found, roots ascending
};

BruteForceResult brute_force_max_leaves(const Digraph& graph);
BruteForceResult brute_force_max_leaves(const Digraph& graph, Vertex root);

enum class PlantFamily {
    leafy_small,              // <= 10 vertices around a known k-leaf branching
    trigger_leaf_exit,        // heavy pair whose witness paths leave through a shared leaf (k >= 3)
    trigger_branch_entry,     // heavy pair whose witness paths enter through a shared branch successor (k >= 4)
};

struct PlantedInstance {
    Digraph graph;
    Vertex root = kNoVertex;
    PlantFamily family = PlantFamily::leafy_small;
    bool expects_trigger = false;
    std::optional<OutBranching> known;  // a branching with at least k leaves, when recorded
};

/// Family used by plant(k, seed): leafy_small for k == 2, trigger_leaf_exit
/// for k == 3, and alternating trigger families by seed parity for k >= 4.
PlantFamily default_plant_family(int k, std::uint64_t seed);

PlantedInstance plant(int k, std::uint64_t seed);
PlantedInstance plant(int k, std::uint64_t seed, PlantFamily family);

/// m distinct arcs drawn uniformly from the n(n-1) possible ones.
Digraph random_digraph(int n, int m, std::uint64_t seed);

}  // namespace kleaf
