#include "kleaf/local_search.hpp"

#include "kleaf/errors.hpp"

namespace kleaf {
namespace {

void check_change(const Digraph& graph, const OutBranching& tree, Arc arc) {
    if (tree.host_size() != graph.vertex_count()) throw InputError("branching and digraph disagree on vertex count");
    if (!graph.has_arc(arc)) throw InputError("arc is not in the digraph");
    if (arc.head == tree.root()) throw InputError("root has no parent");
    if (tree.has_arc(arc.tail, arc.head)) throw InputError("arc is already a tree arc");
    if (tree_leq(tree, arc.head, arc.tail)) throw InputError("would create cycle");
}

bool improving_unchecked(const OutBranching& tree, Arc arc) {
    return !tree.is_leaf(arc.tail) && !tree.is_branch_successor(arc.head);
}

// One sweep over all arcs; returns the number of changes made.
int sweep(const Digraph& graph, OutBranching& tree) {
    int changes = 0;
    for (const Arc& a : graph.arcs()) {
        if (a.head == tree.root() || tree.parent(a.head) == a.tail) continue;
        if (!improving_unchecked(tree, a)) continue;
        if (tree_leq(tree, a.head, a.tail)) continue;
        tree.reparent(a.head, a.tail);
        ++changes;
    }
    return changes;
}

}  // namespace

OutBranching one_change(const Digraph& graph, const OutBranching& tree, Arc arc) {
    check_change(graph, tree, arc);
    OutBranching result = tree;
    result.reparent(arc.head, arc.tail);
    return result;
}

bool improves(const Digraph& graph, const OutBranching& tree, Arc arc) {
    check_change(graph, tree, arc);
    return improving_unchecked(tree, arc);
}

bool has_improving_change(const Digraph& graph, const OutBranching& tree) {
    for (const Arc& a : graph.arcs()) {
        if (a.head == tree.root() || tree.parent(a.head) == a.tail) continue;
        if (!tree_leq(tree, a.head, a.tail) && improving_unchecked(tree, a)) return true;
    }
    return false;
}

OutBranching one_optimal_out_branching(const Digraph& graph, Vertex root) {
    if (!graph.contains(root)) throw InputError("root out of range");
    if (!reaches_all(graph, root)) throw InputError("root does not reach all vertices");
    return improve_to_one_optimal(graph, extend_to_out_branching(graph, OutTree(graph.vertex_count(), root)));
}

OutBranching improve_to_one_optimal(const Digraph& graph, OutBranching tree) {
    if (auto problem = check_out_branching(graph, tree)) throw InputError(*problem);
    // each change adds a leaf, so there are at most n-1 changes overall
    int budget = graph.vertex_count();
    while (int made = sweep(graph, tree)) {
        budget -= made;
        if (budget < 0) throw InvariantViolation("local search made more improving changes than vertices");
    }
    return tree;
}

OutBranching apply_path_changes(const Digraph& graph, const OutBranching& tree, std::span<const Vertex> path) {
    if (path.empty() || path.front() != tree.root()) throw InputError("path does not start at the root");
    if (!is_dipath(graph, path)) throw InputError("path is not a dipath of the digraph");
    if (!is_simple(path)) throw InputError("path repeats a vertex");
    OutBranching result = tree;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Arc a{path[i - 1], path[i]};
        if (result.has_arc(a.tail, a.head)) continue;
        // the prefix already lies in the tree, so a.head cannot be an ancestor of a.tail
        if (tree_leq(result, a.head, a.tail)) throw InvariantViolation("1-change along root path would close a cycle");
        result.reparent(a.head, a.tail);
    }
    return result;
}

}  // namespace kleaf
