#include "kleaf/leafy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "kleaf/errors.hpp"
#include "kleaf/local_search.hpp"

namespace kleaf {
namespace {

std::string arc_text(Arc a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

std::size_t position_in(const Dipath& path, Vertex v) {
    const auto it = std::find(path.begin(), path.end(), v);
    if (it == path.end()) throw InvariantViolation("vertex " + std::to_string(v) + " missing from witness path");
    return static_cast<std::size_t>(it - path.begin());
}

// The arc with the deepest tail for every usable head of B(z, l).
std::vector<Arc> pick_one_arc_per_head(const BackwardReport& report, const TreeIndex& index) {
    std::map<Vertex, Arc> best;
    for (const Arc& a : report.arcs) {
        if (!std::binary_search(report.heavy_heads.begin(), report.heavy_heads.end(), a.head)) continue;
        auto [it, fresh] = best.try_emplace(a.head, a);
        if (!fresh && index.depth(a.tail) > index.depth(it->second.tail)) it->second = a;
    }
    std::vector<Arc> result;
    for (const auto& [head, arc] : best) result.push_back(arc);
    return result;
}

}  // namespace

Dipath witness_path(const Digraph& graph, Vertex root, Arc arc) {
    if (!graph.contains(root) || !graph.has_arc(arc)) throw InputError("witness_path: arc or root not in the digraph");
    if (arc.head == root) throw InvariantViolation("arc " + arc_text(arc) + " enters the root and is useless");
    std::vector<Vertex> from(graph.vertex_count(), kNoVertex);
    std::vector<char> seen(graph.vertex_count(), 0);
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    while (!queue.empty() && !seen[arc.tail]) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : graph.out_neighbors(v)) {
            if (w == arc.head || seen[w]) continue;
            seen[w] = 1;
            from[w] = v;
            queue.push_back(w);
        }
    }
    if (!seen[arc.tail]) throw InvariantViolation("arc " + arc_text(arc) + " is useless for root " + std::to_string(root));
    Dipath path;
    for (Vertex cur = arc.tail; cur != kNoVertex; cur = from[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    path.push_back(arc.head);
    return path;
}

std::vector<ArcWitness> annotate(const Digraph& graph, const OutBranching& tree, std::span<const Arc> arcs, Vertex root) {
    if (tree.root() != root) throw InputError("annotate: branching is rooted elsewhere");
    const TreeIndex index(tree);
    std::vector<ArcWitness> result;
    result.reserve(arcs.size());
    for (const Arc& a : arcs) {
        if (!tree.contains(a.tail) || !tree.contains(a.head) || !index.less(a.head, a.tail)) {
            throw InputError("annotate: arc " + arc_text(a) + " does not point to a proper ancestor");
        }
        ArcWitness w;
        w.arc = a;
        w.path = witness_path(graph, root, a);

        std::size_t last_outside = w.path.size();
        for (std::size_t i = 0; i < w.path.size(); ++i)
            if (!index.leq(a.head, w.path[i])) last_outside = i;
        // the root is outside the head's subtree and the tail inside it
        if (last_outside == w.path.size() || last_outside + 1 >= w.path.size()) {
            throw InvariantViolation("witness path for " + arc_text(a) + " never leaves the head's subtree");
        }
        w.exit = w.path[last_outside];
        w.entry = w.path[last_outside + 1];
        for (Vertex v : w.path) {
            if (index.leq(a.head, v) && index.leq(v, a.tail)) {
                w.meet = v;
                break;
            }
        }
        if (!index.less(a.head, w.entry) || !index.less(a.head, w.meet)) {
            throw InvariantViolation("witness path for " + arc_text(a) + " re-enters at the head itself");
        }
        if (tree.is_leaf(w.exit)) {
            w.side = WitnessSide::leaf_exit;
        } else if (tree.is_branch_successor(w.entry)) {
            w.side = WitnessSide::branch_successor_entry;
        } else {
            throw InvariantViolation("arc " + arc_text({w.exit, w.entry}) + " is an improving 1-change; branching is not 1-optimal");
        }
        result.push_back(std::move(w));
    }
    return result;
}

PivotChoice select_pivot(std::span<const OrderedTuple> tuples, int k) {
    if (k < 1) throw InputError("select_pivot: k must be positive");
    if (static_cast<long long>(tuples.size()) < 2LL * k - 1) throw InputError("select_pivot: fewer than 2k-1 tuples");
    int max_head = tuples.front().head;
    int min_tail = tuples.front().tail;
    for (const OrderedTuple& t : tuples) {
        max_head = std::max(max_head, t.head);
        min_tail = std::min(min_tail, t.tail);
        if (!(t.head < t.witness && t.witness <= t.tail)) throw InputError("select_pivot: witness outside (head, tail]");
    }
    if (max_head >= min_tail) throw InputError("select_pivot: some head does not precede every tail");

    // left(t): tuples whose head is at or before t.head; right(t): tail at or after t.tail
    const auto left = [&](const OrderedTuple& t) {
        return std::count_if(tuples.begin(), tuples.end(), [&](const OrderedTuple& o) { return o.head <= t.head; });
    };
    const auto right = [&](const OrderedTuple& t) {
        return std::count_if(tuples.begin(), tuples.end(), [&](const OrderedTuple& o) { return t.tail <= o.tail; });
    };

    PivotChoice choice;
    bool found = false;
    for (std::size_t i = 0; i < tuples.size() && !found; ++i) {
        if (left(tuples[i]) >= k && right(tuples[i]) >= k) {
            choice.chosen = i;
            found = true;
        }
    }
    if (!found) throw InvariantViolation("select_pivot: every tuple was discarded");
    choice.witness = tuples[choice.chosen].witness;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (tuples[i].head < choice.witness && choice.witness <= tuples[i].tail) choice.straddling.push_back(i);
    }
    if (static_cast<int>(choice.straddling.size()) < k) throw InvariantViolation("select_pivot: pivot straddled by fewer than k tuples");
    return choice;
}

OutBranching construct_leafy_branching(const Digraph& graph, const OutBranching& tree, const BackwardReport& report, int k) {
    return construct_leafy_branching_detailed(graph, tree, report, k).branching;
}

LeafyConstruction construct_leafy_branching_detailed(const Digraph& graph, const OutBranching& tree,
                                                     const BackwardReport& report, int k) {
    if (k < 2) throw InputError("leafy construction needs k >= 2");
    if (auto problem = check_out_branching(graph, tree)) throw InputError(*problem);
    if (static_cast<int>(leaves(tree).size()) >= k) throw InputError("branching already has k leaves");
    if (backward_arcs(graph, tree, report.z, report.leaf) != report.arcs ||
        hb_set(graph, tree, report.z, report.leaf) != report.heavy_heads) {
        throw InputError("report does not match the branching");
    }
    if (static_cast<long long>(report.heavy_heads.size()) < heavy_threshold(k)) throw InputError("report is below the 6k^2 threshold");

    const Vertex root = tree.root();
    const TreeIndex index(tree);
    const std::vector<Arc> chosen_arcs = pick_one_arc_per_head(report, index);
    const std::vector<ArcWitness> witnesses = annotate(graph, tree, chosen_arcs, root);

    std::vector<std::size_t> via_leaf;
    std::vector<std::size_t> via_branch;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        (witnesses[i].side == WitnessSide::leaf_exit ? via_leaf : via_branch).push_back(i);
    }
    const long long kk = static_cast<long long>(k) * k;
    const int proof_case = static_cast<long long>(via_leaf.size()) >= 2 * kk ? 1 : 2;
    if (proof_case == 2 && static_cast<long long>(via_branch.size()) < 4 * kk) {
        throw InvariantViolation("neither witness class is large enough");
    }

    // group by the shared exit (case 1) or entry (case 2) vertex and take the largest group
    std::map<Vertex, std::vector<std::size_t>> groups;
    for (std::size_t i : proof_case == 1 ? via_leaf : via_branch) {
        const ArcWitness& w = witnesses[i];
        groups[proof_case == 1 ? w.exit : w.entry].push_back(i);
    }
    const auto largest = std::max_element(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return a.second.size() < b.second.size();
    });
    const std::vector<std::size_t>& group = largest->second;
    if (static_cast<int>(group.size()) < 2 * (k + 1)) throw InvariantViolation("pigeonhole group smaller than 2(k+1)");

    std::vector<OrderedTuple> tuples;
    for (std::size_t i : group) {
        const ArcWitness& w = witnesses[i];
        tuples.push_back({index.depth(w.arc.tail), index.depth(w.arc.head), index.depth(w.meet)});
    }
    const PivotChoice pivot = select_pivot(tuples, k + 1);
    const ArcWitness& pivot_witness = witnesses[group[pivot.chosen]];

    std::vector<const ArcWitness*> straddling;
    for (std::size_t t : pivot.straddling) straddling.push_back(&witnesses[group[t]]);
    std::sort(straddling.begin(), straddling.end(), [&](const ArcWitness* a, const ArcWitness* b) {
        return index.depth(a->arc.head) < index.depth(b->arc.head);
    });
    const ArcWitness& topmost = *straddling.front();

    // root path: tree path to the exit vertex, then along the pivot's witness path to the meet vertex
    const Vertex exit = proof_case == 1 ? largest->first : topmost.exit;
    const Vertex splice_from = proof_case == 1 ? exit : largest->first;
    Dipath root_path = index.root_path(exit);
    if (proof_case == 2) root_path.push_back(splice_from);
    const Dipath& qi = pivot_witness.path;
    const std::size_t from = position_in(qi, splice_from);
    const std::size_t to = position_in(qi, pivot_witness.meet);
    if (from >= to && !(proof_case == 2 && from == to)) throw InvariantViolation("meet vertex precedes the splice point");
    for (std::size_t i = from + 1; i <= to; ++i) root_path.push_back(qi[i]);
    if (!is_simple(root_path)) throw InvariantViolation("spliced root path repeats a vertex");

    OutBranching current = apply_path_changes(graph, tree, root_path);

    LeafyConstruction result{current, proof_case, pivot_witness.meet, root_path, {}};
    for (std::size_t i = 1; i < straddling.size(); ++i) {
        const Arc a = straddling[i]->arc;
        if (tree_leq(current, a.head, a.tail)) {
            throw InvariantViolation("head of " + arc_text(a) + " became an ancestor of its tail");
        }
        current = one_change(graph, current, a);
        result.rerouted.push_back(a);
    }
    if (auto problem = check_out_branching(graph, current)) throw InvariantViolation("leafy construction: " + *problem);
    if (static_cast<int>(leaves(current).size()) < k) throw InvariantViolation("leafy construction produced fewer than k leaves");
    result.branching = std::move(current);
    return result;
}

}  // namespace kleaf
