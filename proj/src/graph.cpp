#include "kleaf/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "kleaf/errors.hpp"

namespace kleaf {

Digraph::Digraph(int n, std::span<const Arc> arcs) : out_(n), in_(n) {
    if (n < 0) throw InputError("negative vertex count");
    arcs_.reserve(arcs.size());
    for (const Arc& a : arcs) {
        if (!contains(a.tail) || !contains(a.head)) {
            std::ostringstream msg;
            msg << "arc (" << a.tail << "," << a.head << ") has an endpoint outside 0.." << n - 1;
            throw InputError(msg.str());
        }
        if (a.tail != a.head) arcs_.push_back(a);
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (const Arc& a : arcs_) {
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
    }
    // out_ is sorted by construction; in_ is filled in tail order, so it is too
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    if (!contains(tail) || !contains(head)) return false;
    const auto& out = out_[tail];
    return std::binary_search(out.begin(), out.end(), head);
}

OutTree::OutTree(int host_size, Vertex root)
    : root_(root), size_(1), parent_(host_size, kNoVertex), child_count_(host_size, 0), member_(host_size, 0) {
    if (root < 0 || root >= host_size) throw InputError("root outside the vertex range");
    member_[root] = 1;
}

OutTree OutTree::from_parents(Vertex root, std::span<const Vertex> parent) {
    const int n = static_cast<int>(parent.size());
    if (root < 0 || root >= n) throw InputError("root outside the vertex range");
    if (parent[root] != kNoVertex) throw InputError("root has a parent");
    OutTree tree(n, root);
    for (Vertex v = 0; v < n; ++v) {
        if (v == root || parent[v] == kAbsent) continue;
        const Vertex p = parent[v];
        if (p < 0 || p >= n || parent[p] == kAbsent) {
            throw InputError("vertex " + std::to_string(v) + " has an invalid parent");
        }
        tree.member_[v] = 1;
        tree.parent_[v] = p;
        ++tree.child_count_[p];
        ++tree.size_;
    }
    // every member must climb to the root without revisiting anything
    for (Vertex v = 0; v < n; ++v) {
        if (!tree.member_[v]) continue;
        Vertex cur = v;
        for (int steps = 0; cur != root; ++steps) {
            if (steps > n) throw InputError("parent links contain a cycle through " + std::to_string(v));
            cur = tree.parent_[cur];
        }
    }
    return tree;
}

bool OutTree::is_branch_successor(Vertex v) const {
    if (!contains(v) || v == root_) return false;
    return child_count_[parent_[v]] >= 2;
}

void OutTree::attach(Vertex parent, Vertex child) {
    if (!contains(parent)) throw InputError("attach: parent not in tree");
    if (child < 0 || child >= host_size() || contains(child)) throw InputError("attach: child already in tree or out of range");
    member_[child] = 1;
    parent_[child] = parent;
    ++child_count_[parent];
    ++size_;
}

void OutTree::reparent(Vertex v, Vertex new_parent) {
    if (!contains(v) || v == root_) throw InputError("reparent: vertex is not a non-root tree vertex");
    if (!contains(new_parent)) throw InputError("reparent: new parent not in tree");
    --child_count_[parent_[v]];
    parent_[v] = new_parent;
    ++child_count_[new_parent];
}

std::vector<Arc> OutTree::arcs() const {
    std::vector<Arc> result;
    result.reserve(size_ > 0 ? size_ - 1 : 0);
    for (Vertex v = 0; v < host_size(); ++v) {
        if (member_[v] && v != root_) result.push_back({parent_[v], v});
    }
    std::sort(result.begin(), result.end());
    return result;
}

OutBranching::OutBranching(OutTree tree) : OutTree(std::move(tree)) {
    if (size() != host_size()) throw InputError("out-tree does not span all vertices");
}

OutBranching OutBranching::from_parents(Vertex root, std::span<const Vertex> parent) {
    return OutBranching(OutTree::from_parents(root, parent));
}

TreeIndex::TreeIndex(const OutTree& tree)
    : parent_(tree.host_size(), kNoVertex),
      depth_(tree.host_size(), -1),
      enter_(tree.host_size(), -1),
      exit_(tree.host_size(), -1),
      children_(tree.host_size()) {
    const int n = tree.host_size();
    for (Vertex v = 0; v < n; ++v) {
        if (tree.contains(v) && v != tree.root()) {
            parent_[v] = tree.parent(v);
            children_[tree.parent(v)].push_back(v);
        }
    }
    // iterative DFS assigning entry/exit stamps
    int clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack;
    stack.emplace_back(tree.root(), 0);
    depth_[tree.root()] = 0;
    enter_[tree.root()] = clock++;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < children_[v].size()) {
            const Vertex c = children_[v][next++];
            depth_[c] = depth_[v] + 1;
            max_depth_ = std::max(max_depth_, depth_[c]);
            enter_[c] = clock++;
            stack.emplace_back(c, 0);
        } else {
            exit_[v] = clock++;
            stack.pop_back();
        }
    }
}

Dipath TreeIndex::root_path(Vertex v) const {
    Dipath path;
    for (Vertex cur = v; cur != kNoVertex; cur = parent_[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet reachable_set(const Digraph& graph, Vertex u) {
    if (!graph.contains(u)) throw InputError("vertex " + std::to_string(u) + " out of range");
    std::vector<char> seen(graph.vertex_count(), 0);
    std::vector<Vertex> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : graph.out_neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    VertexSet result;
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        if (seen[v]) result.push_back(v);
    return result;
}

bool reaches_all(const Digraph& graph, Vertex u) {
    return static_cast<int>(reachable_set(graph, u).size()) == graph.vertex_count();
}

bool tree_leq(const OutTree& tree, Vertex u, Vertex v) {
    if (!tree.contains(u) || !tree.contains(v)) throw InputError("tree_leq: vertex not in tree");
    for (Vertex cur = v; cur != kNoVertex; cur = tree.parent(cur)) {
        if (cur == u) return true;
    }
    return false;
}

VertexSet leaves(const OutTree& tree) {
    VertexSet result;
    for (Vertex v = 0; v < tree.host_size(); ++v)
        if (tree.is_leaf(v)) result.push_back(v);
    return result;
}

VertexSet br_succ(const OutTree& tree) {
    VertexSet result;
    for (Vertex v = 0; v < tree.host_size(); ++v)
        if (tree.is_branch_successor(v)) result.push_back(v);
    return result;
}

OutBranching extend_to_out_branching(const Digraph& graph, const OutTree& tree) {
    if (tree.host_size() != graph.vertex_count()) throw InputError("tree and digraph disagree on vertex count");
    if (auto problem = check_out_tree(graph, tree)) throw InputError(*problem);
    if (!reaches_all(graph, tree.root())) throw InputError("root does not reach all vertices");

    OutTree grown = tree;
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        if (tree.contains(v)) queue.push_back(v);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : graph.out_neighbors(u)) {
            if (!grown.contains(v)) {
                grown.attach(u, v);
                queue.push_back(v);
            }
        }
    }
    return OutBranching(std::move(grown));
}

std::optional<std::string> check_out_tree(const Digraph& graph, const OutTree& tree) {
    const int n = graph.vertex_count();
    if (tree.host_size() != n) return "tree host size differs from digraph vertex count";
    if (!tree.contains(tree.root())) return "root not a tree vertex";
    if (tree.parent(tree.root()) != kNoVertex) return "root has a parent";
    std::vector<int> children(n, 0);
    int members = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!tree.contains(v)) continue;
        ++members;
        if (v == tree.root()) continue;
        const Vertex p = tree.parent(v);
        if (!tree.contains(p)) return "parent of " + std::to_string(v) + " is not a tree vertex";
        if (!graph.has_arc(p, v)) {
            return "tree arc (" + std::to_string(p) + "," + std::to_string(v) + ") is not an arc of the digraph";
        }
        ++children[p];
    }
    if (members != tree.size()) return "member count mismatch";
    for (Vertex v = 0; v < n; ++v) {
        if (!tree.contains(v)) continue;
        if (children[v] != tree.out_degree(v)) return "cached out-degree of " + std::to_string(v) + " is stale";
        Vertex cur = v;
        for (int steps = 0; cur != tree.root(); ++steps) {
            if (steps > n) return "parent links from " + std::to_string(v) + " never reach the root";
            cur = tree.parent(cur);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_out_branching(const Digraph& graph, const OutTree& tree) {
    if (auto problem = check_out_tree(graph, tree)) return problem;
    if (tree.size() != graph.vertex_count()) return "out-tree does not span all vertices";
    return std::nullopt;
}

bool is_dipath(const Digraph& graph, std::span<const Vertex> path) {
    if (path.empty()) return false;
    for (Vertex v : path)
        if (!graph.contains(v)) return false;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!graph.has_arc(path[i - 1], path[i])) return false;
    return true;
}

bool is_simple(std::span<const Vertex> path) {
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace kleaf
