#pragma once

#include <optional>
#include <vector>

#include "kleaf/graph.hpp"
#include "kleaf/pathdecomp.hpp"

namespace kleaf {

struct NiceEvent {
    enum class Kind { introduce, forget, edge };

    Kind kind = Kind::introduce;
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;  // second endpoint, edge events only

    friend bool operator==(const NiceEvent&, const NiceEvent&) = default;
};

// Event form of a path decomposition. Between consecutive bags the dropped
// vertices are forgotten, then the new ones introduced, then every edge that
// first becomes coverable is emitted. Vertices of the last bag are never
// forgotten explicitly.
struct NicePathDecomposition {
    std::vector<NiceEvent> events;
};

NicePathDecomposition to_nice(const PathDecomposition& pd, const UndirectedGraph& graph);

struct Decision {
    bool yes = false;
    std::optional<OutBranching> witness;

    int witness_leaves() const;
};

/// Whether `graph` has an out-branching rooted at `root` with at least k
/// leaves, by dynamic programming over the event sequence. A YES carries a
/// witness reconstructed from the winning state's history.
Decision count_leaf_branching(const Digraph& graph, const NicePathDecomposition& npd, int k, Vertex root);

struct DpStats {
    std::size_t events = 0;
    std::size_t peak_states = 0;
};

Decision count_leaf_branching(const Digraph& graph, const NicePathDecomposition& npd, int k, Vertex root, DpStats* stats);

}  // namespace kleaf
