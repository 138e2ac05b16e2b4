#include "kleaf/pathdecomp.hpp"

#include <algorithm>
#include <ostream>

#include "kleaf/errors.hpp"

namespace kleaf {

UndirectedGraph underlying_graph(const Digraph& graph) {
    UndirectedGraph g;
    g.vertex_count = graph.vertex_count();
    for (const Arc& a : graph.arcs()) g.edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

int PathDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

int height(const OutBranching& tree, Vertex v) {
    if (!tree.contains(v)) throw InputError("height: vertex not in tree");
    int h = 0;
    for (Vertex cur = v; cur != tree.root(); cur = tree.parent(cur)) ++h;
    return h;
}

PathDecomposition build_path_decomposition(const Digraph& graph, const OutBranching& tree) {
    if (tree.host_size() != graph.vertex_count()) throw InputError("branching and digraph disagree on vertex count");
    const int n = graph.vertex_count();
    const TreeIndex index(tree);
    const int m = index.max_depth();
    PathDecomposition pd;
    if (m == 0) {
        pd.bags.push_back({tree.root()});
        return pd;
    }

    std::vector<char> everywhere(n, 0);  // leaves and branch successors sit in every bag
    for (Vertex v = 0; v < n; ++v) everywhere[v] = tree.is_leaf(v) || tree.is_branch_successor(v);

    // reach[v]: largest height of a neighbour u outside the leaf/branch-successor
    // sets with height(u) > height(v)
    std::vector<int> reach(n, -1);
    for (const auto& [a, b] : underlying_graph(graph).edges) {
        for (auto [v, u] : {std::pair{a, b}, std::pair{b, a}}) {
            if (!everywhere[u] && index.depth(u) > index.depth(v)) reach[v] = std::max(reach[v], index.depth(u));
        }
    }

    pd.bags.resize(m);
    for (Vertex v = 0; v < n; ++v) {
        const int h = index.depth(v);
        for (int i = 1; i <= m; ++i) {
            const bool member = everywhere[v] || h == i || (h < i && i <= reach[v]) || (i == 1 && v == tree.root());
            if (member) pd.bags[i - 1].push_back(v);
        }
    }
    return pd;
}

DecompositionCheck validate(const PathDecomposition& pd, const UndirectedGraph& graph) {
    const int n = graph.vertex_count;
    const auto fail = [](std::string message) { return DecompositionCheck{false, std::move(message)}; };

    std::vector<int> first(n, -1);
    std::vector<int> last(n, -1);
    std::vector<int> count(n, 0);
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
        for (Vertex v : pd.bags[i]) {
            if (v < 0 || v >= n) return fail("bag " + std::to_string(i + 1) + " holds unknown vertex " + std::to_string(v));
            if (last[v] == i) return fail("bag " + std::to_string(i + 1) + " lists vertex " + std::to_string(v) + " twice");
            if (first[v] < 0) first[v] = i;
            last[v] = i;
            ++count[v];
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (first[v] < 0) return fail("axiom 1 (cover): vertex " + std::to_string(v) + " is in no bag");
    }
    for (const auto& [u, v] : graph.edges) {
        const int lo = std::max(first[u], first[v]);
        const int hi = std::min(last[u], last[v]);
        // with consecutive intervals, a shared bag exists iff the intervals overlap
        bool shared = false;
        if (lo <= hi) {
            for (int i = lo; i <= hi && !shared; ++i) {
                const auto& bag = pd.bags[i];
                shared = std::find(bag.begin(), bag.end(), u) != bag.end() && std::find(bag.begin(), bag.end(), v) != bag.end();
            }
        }
        if (!shared) return fail("axiom 2 (edges): no bag holds both ends of edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (count[v] != last[v] - first[v] + 1) {
            return fail("axiom 3 (consecutive): bags holding vertex " + std::to_string(v) + " are not consecutive");
        }
    }
    return {};
}

bool check_width_bound(const PathDecomposition& pd, int k) {
    return static_cast<long long>(pd.width()) <= 6LL * k * k * k;
}

void write_path_decomposition(std::ostream& out, const PathDecomposition& pd) {
    out << "pd " << pd.bags.size() << ' ' << pd.width() << '\n';
    for (const auto& bag : pd.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) out << (i ? " " : "") << bag[i];
        out << '\n';
    }
}

}  // namespace kleaf
