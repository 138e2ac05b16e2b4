#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kleaf/graph.hpp"

namespace kleaf {

// Underlying undirected graph of a digraph; each edge stored once with
// first < second, sorted.
struct UndirectedGraph {
    int vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

UndirectedGraph underlying_graph(const Digraph& graph);

struct PathDecomposition {
    std::vector<VertexSet> bags;  // each bag sorted ascending

    int width() const;
};

struct DecompositionCheck {
    bool ok = true;
    std::string message;  // names the violated axiom and a witness vertex or edge

    explicit operator bool() const noexcept { return ok; }
};

/// Distance from the root in the tree.
int height(const OutBranching& tree, Vertex v);

/// Bags X_1..X_m indexed by height: bag i holds the vertices at height i, all
/// leaves, all children of branch vertices, and every vertex below height i
/// adjacent to some vertex of height at least i outside those two sets. The
/// root joins X_1. A single-vertex branching yields the one bag {root}.
PathDecomposition build_path_decomposition(const Digraph& graph, const OutBranching& tree);

DecompositionCheck validate(const PathDecomposition& pd, const UndirectedGraph& graph);

/// width <= 6k^3.
bool check_width_bound(const PathDecomposition& pd, int k);

/// "pd <bag count> <width>" followed by one line of vertices per bag.
void write_path_decomposition(std::ostream& out, const PathDecomposition& pd);

}  // namespace kleaf
