#include "kleaf/backward.hpp"

#include <algorithm>

#include "kleaf/errors.hpp"

namespace kleaf {
namespace {

void check_pair(const Digraph& graph, const OutBranching& tree, Vertex z, Vertex leaf) {
    if (tree.host_size() != graph.vertex_count()) throw InputError("branching and digraph disagree on vertex count");
    if (!tree.contains(leaf) || !tree.is_leaf(leaf)) throw InputError("l is not a leaf of the branching");
    if (!tree.contains(z) || !tree_leq(tree, z, leaf)) throw InputError("z does not precede l in the tree order");
}

// |HB(path[d], leaf)| for every depth d along the root-to-leaf path, using the
// fact that head v (at depth dv) belongs to HB(path[d]) iff dv < d <= deepest
// tail on the path pointing at v.
std::vector<int> hb_profile(const Digraph& graph, const OutBranching& tree, const Dipath& path) {
    const int len = static_cast<int>(path.size());
    std::vector<int> depth_on_path(graph.vertex_count(), -1);
    for (int d = 0; d < len; ++d) depth_on_path[path[d]] = d;

    std::vector<int> diff(len + 1, 0);
    for (int dv = 0; dv < len; ++dv) {
        const Vertex v = path[dv];
        if (tree.is_branch_successor(v)) continue;
        int deepest_tail = -1;
        for (Vertex u : graph.in_neighbors(v)) deepest_tail = std::max(deepest_tail, depth_on_path[u]);
        if (deepest_tail > dv) {
            ++diff[dv + 1];
            --diff[deepest_tail + 1];
        }
    }
    std::vector<int> profile(len, 0);
    int running = 0;
    for (int d = 0; d < len; ++d) {
        running += diff[d];
        profile[d] = running;
    }
    return profile;
}

}  // namespace

std::vector<Arc> backward_arcs(const Digraph& graph, const OutBranching& tree, Vertex z, Vertex leaf) {
    check_pair(graph, tree, z, leaf);
    const TreeIndex index(tree);
    const Dipath path = index.root_path(leaf);
    const int dz = index.depth(z);
    std::vector<Arc> result;
    for (int du = dz; du < static_cast<int>(path.size()); ++du) {
        const Vertex u = path[du];
        for (Vertex v : graph.out_neighbors(u)) {
            if (index.less(v, z)) result.push_back({u, v});
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

VertexSet hb_set(const Digraph& graph, const OutBranching& tree, Vertex z, Vertex leaf) {
    VertexSet heads;
    for (const Arc& a : backward_arcs(graph, tree, z, leaf))
        if (!tree.is_branch_successor(a.head)) heads.push_back(a.head);
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    return heads;
}

long long heavy_threshold(int k) {
    return 6LL * k * k;
}

std::optional<BackwardReport> find_heavy_pair(const Digraph& graph, const OutBranching& tree, int k) {
    if (tree.host_size() != graph.vertex_count()) throw InputError("branching and digraph disagree on vertex count");
    const long long threshold = heavy_threshold(k);
    const TreeIndex index(tree);
    for (Vertex l : leaves(tree)) {
        const Dipath path = index.root_path(l);
        const std::vector<int> profile = hb_profile(graph, tree, path);
        for (std::size_t d = 0; d < path.size(); ++d) {
            if (profile[d] >= threshold) {
                BackwardReport report;
                report.z = path[d];
                report.leaf = l;
                report.arcs = backward_arcs(graph, tree, report.z, l);
                report.heavy_heads = hb_set(graph, tree, report.z, l);
                if (static_cast<long long>(report.heavy_heads.size()) != profile[d]) {
                    throw InvariantViolation("incremental HB count disagrees with direct evaluation");
                }
                return report;
            }
        }
    }
    return std::nullopt;
}

int max_hb_size(const Digraph& graph, const OutBranching& tree) {
    const TreeIndex index(tree);
    int best = 0;
    for (Vertex l : leaves(tree)) {
        for (int count : hb_profile(graph, tree, index.root_path(l))) best = std::max(best, count);
    }
    return best;
}

}  // namespace kleaf
