#pragma once

#include <optional>

#include "kleaf/dp.hpp"
#include "kleaf/graph.hpp"
#include "kleaf/pathdecomp.hpp"

namespace kleaf {

enum class SolveMode {
    automatic,    // brute force up to 8 vertices, the parameterized pipeline beyond
    fpt,
    brute_force,
};

// Which step settled the answer.
enum class DecidedBy {
    no_root,              // no vertex reaches every other vertex
    reachability,         // k <= 1: any out-branching will do
    enough_leaves,        // the 1-optimal branching already has k leaves
    heavy_pair,           // a heavy backward-arc pair fed the leafy construction
    dynamic_programming,  // the dynamic program over the path decomposition
    exhausted,            // every root examined, none had k leaves
    brute_force,
};

const char* to_string(DecidedBy step);

struct SolveOptions {
    SolveMode mode = SolveMode::automatic;
    std::optional<Vertex> root;  // examine only this root
    bool validate = false;       // re-check every intermediate structure; throws InvariantViolation
};

struct SolveResult {
    Decision decision;
    DecidedBy decided_by = DecidedBy::exhausted;
    Vertex root = kNoVertex;  // witness root on YES, last root examined on NO
    std::optional<PathDecomposition> decomposition;  // the one the dynamic program ran on, if any
};

/// Decides whether `graph` has an out-branching with at least k leaves. Roots
/// are examined in ascending order and the first YES wins. Every YES witness
/// is an out-branching of `graph` itself.
SolveResult solve(const Digraph& graph, int k, const SolveOptions& options = {});

/// Useless arcs removed, 1-optimal branching built, decomposition taken: the
/// structures the pipeline derives for one root.
struct RootAnalysis {
    Digraph pruned;
    OutBranching tree;
    PathDecomposition decomposition;
};

RootAnalysis analyze_root(const Digraph& graph, Vertex root);

}  // namespace kleaf
