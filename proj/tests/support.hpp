#pragma once

// Fixtures and independent reference computations shared by the test binaries.
// Nothing here calls the library code it is used to check.

#include <algorithm>
#include <string>
#include <vector>

#include "kleaf/graph.hpp"
#include "kleaf/oracle.hpp"

namespace kleaf::testing {

inline Digraph make_graph(int n, std::initializer_list<Arc> arcs) {
    std::vector<Arc> list(arcs);
    return Digraph(n, list);
}

// The path 0..5 plus arcs from 5 back to each of 1..4: a single out-branching, one leaf.
inline Digraph returning_path() {
    return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

inline Digraph dipath(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.push_back({i - 1, i});
    return Digraph(n, arcs);
}

inline Digraph dicycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph(n, arcs);
}

inline Digraph out_star(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.push_back({0, i});
    return Digraph(n, arcs);
}

inline Digraph bidirected_clique(int n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

inline Digraph bidirected_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.push_back({i, (i + 1) % n});
        arcs.push_back({(i + 1) % n, i});
    }
    return Digraph(n, arcs);
}

struct Fixture {
    std::string name;
    Digraph graph;
};

inline std::vector<Fixture> structured_fixtures() {
    std::vector<Fixture> result;
    for (int n = 2; n <= 7; ++n) {
        result.push_back({"path" + std::to_string(n), dipath(n)});
        result.push_back({"cycle" + std::to_string(n), dicycle(n)});
        result.push_back({"star" + std::to_string(n), out_star(n)});
        result.push_back({"bicycle" + std::to_string(n), bidirected_cycle(n)});
        if (n <= 6) result.push_back({"clique" + std::to_string(n), bidirected_clique(n)});
    }
    result.push_back({"returning_path", returning_path()});
    result.push_back({"single", Digraph(1)});
    return result;
}

// reach[u][v]: v reachable from u by a dipath (Warshall closure).
inline std::vector<std::vector<char>> transitive_closure(const Digraph& graph) {
    const int n = graph.vertex_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    for (const Arc& a : graph.arcs()) reach[a.tail][a.head] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            if (reach[u][w])
                for (int v = 0; v < n; ++v)
                    if (reach[w][v]) reach[u][v] = 1;
    return reach;
}

inline bool closure_reaches_all(const Digraph& graph, Vertex r) {
    const auto reach = transitive_closure(graph);
    return std::all_of(reach[r].begin(), reach[r].end(), [](char c) { return c != 0; });
}

// Arcs used by at least one out-branching rooted at r, found by enumeration.
inline std::vector<Arc> arcs_in_some_branching(const Digraph& graph, Vertex r) {
    std::vector<char> used(graph.arc_count(), 0);
    const auto arcs = graph.arcs();
    for_each_out_branching(graph, r, [&](std::span<const Vertex> parent) {
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (parent[arcs[i].head] == arcs[i].tail) used[i] = 1;
        return true;
    });
    std::vector<Arc> result;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (used[i]) result.push_back(arcs[i]);
    return result;
}

inline int count_leaves(std::span<const Vertex> parent) {
    std::vector<int> children(parent.size(), 0);
    for (Vertex p : parent)
        if (p >= 0) ++children[p];
    return static_cast<int>(std::count(children.begin(), children.end(), 0));
}

// Ancestor test by walking parent links; independent of TreeIndex.
inline bool climbs_to(const OutTree& tree, Vertex ancestor, Vertex v) {
    for (Vertex cur = v; cur != kNoVertex; cur = tree.parent(cur))
        if (cur == ancestor) return true;
    return false;
}

// Random out-tree on n vertices rooted at 0, parent drawn among earlier vertices.
template <typename Rng>
OutBranching random_out_tree(int n, Rng& rng) {
    std::vector<Vertex> parent(n, kNoVertex);
    for (Vertex v = 1; v < n; ++v) parent[v] = rng.uniform(0, v - 1);
    return OutBranching::from_parents(0, parent);
}

}  // namespace kleaf::testing
