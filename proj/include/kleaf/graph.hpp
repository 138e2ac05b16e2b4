#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kleaf {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;
inline constexpr Vertex kAbsent = -2;  // parent-array marker for vertices outside a tree

struct Arc {
    Vertex tail = kNoVertex;
    Vertex head = kNoVertex;

    auto operator<=>(const Arc&) const = default;
};

using VertexSet = std::vector<Vertex>;  // always sorted ascending
using Dipath = std::vector<Vertex>;     // consecutive vertices joined by arcs

// Simple digraph on vertices 0..n-1. Arcs are kept sorted by (tail, head);
// self-loops and repeated arcs are dropped on construction.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n, std::span<const Arc> arcs = {});

    int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }

    std::span<const Arc> arcs() const noexcept { return arcs_; }
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
    bool has_arc(Vertex tail, Vertex head) const;
    bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.arcs_ == b.arcs_ && a.out_.size() == b.out_.size(); }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

// Rooted out-tree embedded in a host vertex range 0..host_size-1. Vertices
// outside the tree are simply absent; the root is the only member without a
// parent.
class OutTree {
public:
    OutTree(int host_size, Vertex root);

    // parent[root] == kNoVertex, parent[v] == kAbsent for non-members.
    // Throws InputError unless the array describes an out-tree.
    static OutTree from_parents(Vertex root, std::span<const Vertex> parent);

    Vertex root() const noexcept { return root_; }
    int host_size() const noexcept { return static_cast<int>(parent_.size()); }
    int size() const noexcept { return size_; }
    bool contains(Vertex v) const noexcept { return v >= 0 && v < host_size() && member_[v] != 0; }

    // kNoVertex for the root and for absent vertices.
    Vertex parent(Vertex v) const { return parent_[v]; }
    int out_degree(Vertex v) const { return child_count_[v]; }
    bool is_leaf(Vertex v) const { return contains(v) && child_count_[v] == 0; }
    bool is_branch(Vertex v) const { return contains(v) && child_count_[v] >= 2; }
    bool is_branch_successor(Vertex v) const;

    // Adds a new vertex below `parent`.
    void attach(Vertex parent, Vertex child);
    // Replaces the parent of a non-root tree vertex; acyclicity is the
    // caller's responsibility.
    void reparent(Vertex v, Vertex new_parent);

    std::vector<Arc> arcs() const;  // sorted by (tail, head)
    bool has_arc(Vertex tail, Vertex head) const { return contains(head) && parent_[head] == tail && tail != kNoVertex; }

    friend bool operator==(const OutTree&, const OutTree&) = default;

private:
    Vertex root_;
    int size_ = 0;
    std::vector<Vertex> parent_;
    std::vector<int> child_count_;
    std::vector<char> member_;
};

// Out-tree spanning its whole host range.
class OutBranching : public OutTree {
public:
    explicit OutBranching(OutTree tree);
    static OutBranching from_parents(Vertex root, std::span<const Vertex> parent);
};

// Snapshot of a tree with constant-time ancestor queries.
class TreeIndex {
public:
    explicit TreeIndex(const OutTree& tree);

    int depth(Vertex v) const { return depth_[v]; }
    bool leq(Vertex u, Vertex v) const { return enter_[u] <= enter_[v] && exit_[v] <= exit_[u]; }
    bool less(Vertex u, Vertex v) const { return u != v && leq(u, v); }
    std::span<const Vertex> children(Vertex v) const { return children_[v]; }
    // Vertices on the tree path from the root to v, root first.
    Dipath root_path(Vertex v) const;
    int max_depth() const noexcept { return max_depth_; }

private:
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<int> enter_;
    std::vector<int> exit_;
    std::vector<std::vector<Vertex>> children_;
    int max_depth_ = 0;
};

/// Vertices reachable from u by a dipath, u included.
VertexSet reachable_set(const Digraph& graph, Vertex u);
bool reaches_all(const Digraph& graph, Vertex u);

/// u ⪯ v in the tree order: v is u or a descendant of u.
bool tree_leq(const OutTree& tree, Vertex u, Vertex v);

VertexSet leaves(const OutTree& tree);
/// Vertices whose parent is a branch vertex (out-degree at least two).
VertexSet br_succ(const OutTree& tree);

/// Grows `tree` into an out-branching of `graph` by breadth-first search from
/// the tree's vertices (ascending index), neighbours in ascending order.
OutBranching extend_to_out_branching(const Digraph& graph, const OutTree& tree);

// Structural checks; return a description of the first problem found.
std::optional<std::string> check_out_tree(const Digraph& graph, const OutTree& tree);
std::optional<std::string> check_out_branching(const Digraph& graph, const OutTree& tree);

bool is_dipath(const Digraph& graph, std::span<const Vertex> path);
bool is_simple(std::span<const Vertex> path);

}  // namespace kleaf
