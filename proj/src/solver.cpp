#include "kleaf/solver.hpp"

#include "kleaf/backward.hpp"
#include "kleaf/errors.hpp"
#include "kleaf/leafy.hpp"
#include "kleaf/local_search.hpp"
#include "kleaf/oracle.hpp"
#include "kleaf/preprocess.hpp"

namespace kleaf {
namespace {

constexpr int kBruteForceLimit = 8;

void fail_validation(const std::string& what) {
    throw InvariantViolation("validation: " + what);
}

std::vector<Vertex> candidate_roots(const Digraph& graph, const SolveOptions& options) {
    std::vector<Vertex> roots;
    if (options.root) {
        if (!graph.contains(*options.root)) throw InputError("root " + std::to_string(*options.root) + " out of range");
        roots.push_back(*options.root);
    } else {
        for (Vertex r = 0; r < graph.vertex_count(); ++r) roots.push_back(r);
    }
    std::erase_if(roots, [&](Vertex r) { return !reaches_all(graph, r); });
    return roots;
}

Decision yes_with(OutBranching witness) {
    Decision d;
    d.yes = true;
    d.witness = std::move(witness);
    return d;
}

SolveResult solve_brute_force(const Digraph& graph, int k, const SolveOptions& options) {
    SolveResult result;
    result.decided_by = DecidedBy::brute_force;
    BruteForceResult best;
    for (Vertex r : candidate_roots(graph, options)) {
        BruteForceResult rooted = brute_force_max_leaves(graph, r);
        if (rooted.max_leaves > best.max_leaves) best = std::move(rooted);
    }
    if (best.best && best.max_leaves >= k) {
        result.root = best.best->root();
        result.decision = yes_with(std::move(*best.best));
    }
    return result;
}

void validate_root(const Digraph& pruned, const OutBranching& tree, Vertex root) {
    if (remove_useless_arcs(pruned, root) != pruned) fail_validation("useless-arc removal is not idempotent");
    if (auto problem = check_out_branching(pruned, tree)) fail_validation("1-optimal branching: " + *problem);
    if (tree.root() != root) fail_validation("1-optimal branching has the wrong root");
    if (has_improving_change(pruned, tree)) fail_validation("branching admits an improving 1-change");
}

SolveResult solve_fpt(const Digraph& graph, int k, const SolveOptions& options) {
    SolveResult result;
    const std::vector<Vertex> roots = candidate_roots(graph, options);
    if (roots.empty()) {
        result.decided_by = DecidedBy::no_root;
        return result;
    }
    if (k <= 1) {
        result.decided_by = DecidedBy::reachability;
        result.root = roots.front();
        result.decision = yes_with(extend_to_out_branching(graph, OutTree(graph.vertex_count(), roots.front())));
        return result;
    }

    for (Vertex r : roots) {
        result.root = r;
        const Digraph pruned = remove_useless_arcs(graph, r);
        OutBranching tree = one_optimal_out_branching(pruned, r);
        if (options.validate) validate_root(pruned, tree, r);

        const int tree_leaves = static_cast<int>(leaves(tree).size());
        if (tree_leaves >= k) {
            result.decided_by = DecidedBy::enough_leaves;
            result.decision = yes_with(std::move(tree));
            return result;
        }
        if (auto report = find_heavy_pair(pruned, tree, k)) {
            result.decided_by = DecidedBy::heavy_pair;
            result.decision = yes_with(construct_leafy_branching(pruned, tree, *report, k));
            return result;
        }

        PathDecomposition pd = build_path_decomposition(pruned, tree);
        const UndirectedGraph underlying = underlying_graph(pruned);
        if (options.validate) {
            if (auto check = validate(pd, underlying); !check) fail_validation("path decomposition: " + check.message);
            if (!check_width_bound(pd, k)) fail_validation("path decomposition wider than 6k^3");
        }
        Decision decision = count_leaf_branching(pruned, to_nice(pd, underlying), k, r);
        result.decomposition = std::move(pd);
        if (decision.yes) {
            result.decided_by = DecidedBy::dynamic_programming;
            result.decision = std::move(decision);
            return result;
        }
    }
    result.decided_by = DecidedBy::exhausted;
    return result;
}

}  // namespace

const char* to_string(DecidedBy step) {
    switch (step) {
    case DecidedBy::no_root: return "no-root";
    case DecidedBy::reachability: return "reachability";
    case DecidedBy::enough_leaves: return "enough-leaves";
    case DecidedBy::heavy_pair: return "heavy-pair";
    case DecidedBy::dynamic_programming: return "dynamic-programming";
    case DecidedBy::exhausted: return "exhausted";
    case DecidedBy::brute_force: return "brute-force";
    }
    return "unknown";
}

SolveResult solve(const Digraph& graph, int k, const SolveOptions& options) {
    if (k < 0) throw InputError("k must be non-negative");
    const bool brute = options.mode == SolveMode::brute_force ||
                       (options.mode == SolveMode::automatic && graph.vertex_count() <= kBruteForceLimit);
    SolveResult result = brute ? solve_brute_force(graph, k, options) : solve_fpt(graph, k, options);

    if (result.decision.yes) {
        if (!result.decision.witness) throw InvariantViolation("YES without a witness");
        if (auto problem = check_out_branching(graph, *result.decision.witness)) {
            throw InvariantViolation("witness is not an out-branching of the input: " + *problem);
        }
        if (result.decision.witness_leaves() < k) throw InvariantViolation("witness has fewer than k leaves");
    }
    if (options.validate && graph.vertex_count() <= kBruteForceLimit && !brute) {
        const SolveResult reference = solve_brute_force(graph, k, options);
        if (reference.decision.yes != result.decision.yes) fail_validation("parameterized answer disagrees with brute force");
    }
    return result;
}

RootAnalysis analyze_root(const Digraph& graph, Vertex root) {
    Digraph pruned = remove_useless_arcs(graph, root);
    OutBranching tree = one_optimal_out_branching(pruned, root);
    PathDecomposition pd = build_path_decomposition(pruned, tree);
    return {std::move(pruned), std::move(tree), std::move(pd)};
}

}  // namespace kleaf
