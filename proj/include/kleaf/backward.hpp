#pragma once

#include <optional>
#include <vector>

#include "kleaf/graph.hpp"

namespace kleaf {

// A (z, l) pair together with its backward arcs and their usable heads.
struct BackwardReport {
    Vertex z = kNoVertex;
    Vertex leaf = kNoVertex;
    std::vector<Arc> arcs;   // B(z, l), sorted
    VertexSet heavy_heads;   // HB(z, l) = heads of B minus BrSucc(T)
};

/// Arcs (u, v) with v strictly above z and u on the tree path from z down to
/// the leaf. Requires `leaf` to be a leaf and z to be an ancestor-or-self of it.
std::vector<Arc> backward_arcs(const Digraph& graph, const OutBranching& tree, Vertex z, Vertex leaf);

VertexSet hb_set(const Digraph& graph, const OutBranching& tree, Vertex z, Vertex leaf);

/// 6k^2, the trigger threshold for |HB|.
long long heavy_threshold(int k);

/// First (leaf, z) pair, leaves ascending and z walking down from the root,
/// whose HB set has at least 6k^2 vertices.
std::optional<BackwardReport> find_heavy_pair(const Digraph& graph, const OutBranching& tree, int k);

/// Largest |HB(z, l)| over all admissible pairs.
int max_hb_size(const Digraph& graph, const OutBranching& tree);

}  // namespace kleaf
