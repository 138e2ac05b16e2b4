#include "kleaf/preprocess.hpp"

#include <vector>

#include "kleaf/errors.hpp"

namespace kleaf {
namespace {

// Is there a dipath from `from` to `to` that never enters `banned`?
bool reaches_avoiding(const Digraph& graph, Vertex from, Vertex to, Vertex banned) {
    if (from == banned) return false;
    std::vector<char> seen(graph.vertex_count(), 0);
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (Vertex w : graph.out_neighbors(v)) {
            if (w != banned && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

bool useless_unchecked(const Digraph& graph, Vertex root, Arc arc) {
    if (arc.head == root) return true;
    if (arc.tail == root) return false;
    return !reaches_avoiding(graph, root, arc.tail, arc.head);
}

void require_spanning_root(const Digraph& graph, Vertex root) {
    if (!graph.contains(root)) throw InputError("root out of range");
    if (!reaches_all(graph, root)) throw InputError("root does not reach all vertices");
}

}  // namespace

bool is_useless(const Digraph& graph, Vertex root, Arc arc) {
    require_spanning_root(graph, root);
    if (!graph.has_arc(arc)) throw InputError("arc is not in the digraph");
    return useless_unchecked(graph, root, arc);
}

Digraph remove_useless_arcs(const Digraph& graph, Vertex root) {
    require_spanning_root(graph, root);
    std::vector<Arc> kept;
    kept.reserve(graph.arc_count());
    for (const Arc& a : graph.arcs()) {
        if (!useless_unchecked(graph, root, a)) kept.push_back(a);
    }
    return Digraph(graph.vertex_count(), kept);
}

}  // namespace kleaf
