#include "kleaf/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "kleaf/errors.hpp"
#include "kleaf/random.hpp"

namespace kleaf {
namespace {

int count_leaves(std::span<const Vertex> parent, std::vector<int>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (Vertex p : parent)
        if (p >= 0) ++scratch[p];
    return static_cast<int>(std::count(scratch.begin(), scratch.end(), 0));
}

class Enumerator {
public:
    Enumerator(const Digraph& graph, Vertex root, const BranchingVisitor& visit)
        : graph_(graph), visit_(visit), parent_(graph.vertex_count(), kAbsent) {
        parent_[root] = kNoVertex;
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            if (v != root) order_.push_back(v);
    }

    std::uint64_t run() {
        descend(0);
        return visited_;
    }

private:
    // Following assigned parents from `from` returns to `v`?
    bool closes_cycle(Vertex v, Vertex from) const {
        for (Vertex cur = from; cur >= 0; cur = parent_[cur]) {
            if (cur == v) return true;
        }
        return false;
    }

    bool descend(std::size_t depth) {
        if (depth == order_.size()) {
            ++visited_;
            return visit_(parent_);
        }
        const Vertex v = order_[depth];
        for (Vertex p : graph_.in_neighbors(v)) {
            if (closes_cycle(v, p)) continue;
            parent_[v] = p;
            const bool keep_going = descend(depth + 1);
            parent_[v] = kAbsent;
            if (!keep_going) return false;
        }
        return true;
    }

    const Digraph& graph_;
    const BranchingVisitor& visit_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> order_;
    std::uint64_t visited_ = 0;
};

Digraph relabel(const Digraph& graph, const std::vector<Vertex>& label) {
    std::vector<Arc> arcs;
    for (const Arc& a : graph.arcs()) arcs.push_back({label[a.tail], label[a.head]});
    return Digraph(graph.vertex_count(), arcs);
}

std::vector<Vertex> random_labels(int n, Rng& rng) {
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(label);
    return label;
}

PlantedInstance plant_leafy_small(int k, Rng& rng) {
    const int n = std::min(10, k + 1 + rng.uniform(0, 3));
    const int internal = n - k;  // at least 1
    std::vector<Vertex> parent(n, kNoVertex);
    // vertices 0..internal-1 form a random tree rooted at 0; the rest hang below them
    for (Vertex v = 1; v < internal; ++v) parent[v] = rng.uniform(0, v - 1);
    for (Vertex v = internal; v < n; ++v) parent[v] = rng.uniform(0, internal - 1);

    std::vector<Arc> arcs;
    for (Vertex v = 1; v < n; ++v) arcs.push_back({parent[v], v});
    const int density = rng.uniform(0, 40);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.chance(density)) arcs.push_back({u, v});

    const std::vector<Vertex> label = random_labels(n, rng);
    PlantedInstance inst;
    inst.family = PlantFamily::leafy_small;
    inst.root = label[0];
    inst.graph = relabel(Digraph(n, arcs), label);
    std::vector<Vertex> relabeled(n, kNoVertex);
    for (Vertex v = 1; v < n; ++v) relabeled[label[v]] = label[parent[v]];
    inst.known = OutBranching::from_parents(inst.root, relabeled);
    return inst;
}

// Spine r -> s_1 -> ... -> s_N, a second chain r -> t_1 -> ... -> t_M, extra
// leaves hanging off r. Backward arcs from the lower spine point at >= 6k^2
// spine heads; bypass arcs from the chain make every one of them usable.
// Distances from r are unique along the planted tree, so the breadth-first
// branching is exactly that tree, and it admits no improving 1-change.
PlantedInstance plant_trigger(int k, Rng& rng, PlantFamily family) {
    const bool leaf_exit = family == PlantFamily::trigger_leaf_exit;
    if (leaf_exit && k < 3) throw InputError("leaf-exit trigger instances need k >= 3");
    if (!leaf_exit && k < 4) throw InputError("branch-entry trigger instances need k >= 4");

    const int heads = 6 * k * k + rng.uniform(0, k);
    // leaf exit: heads in s_2..s_{cut-1}, tails in s_cut..s_N
    // branch entry: heads in s_2..s_cut, tails in s_{cut+1}..s_N, s_cut gets a leaf child
    const int cut = heads + 2 + rng.uniform(0, 5);
    const int spine = cut + 1 + rng.uniform(1, 6);
    const int entry_lo = cut + 1;
    const int entry_hi = cut + 3;
    const int chain = leaf_exit ? spine + 1 + rng.uniform(0, 3) : entry_hi + 1 + rng.uniform(0, 3);
    const int extra_leaves = leaf_exit ? k - 3 : k - 4;

    // vertex numbering before relabeling: r = 0, s_i = i, t_j = spine + j, then extras, then e
    const auto s = [](int i) { return i; };
    const auto t = [&](int j) { return spine + j; };
    const int first_extra = spine + chain + 1;
    const int side_leaf = first_extra + extra_leaves;
    const int n = side_leaf + (leaf_exit ? 0 : 1);

    std::vector<Arc> arcs;
    for (int i = 1; i <= spine; ++i) arcs.push_back({s(i - 1), s(i)});
    arcs.push_back({0, t(1)});
    for (int j = 2; j <= chain; ++j) arcs.push_back({t(j - 1), t(j)});
    for (int e = 0; e < extra_leaves; ++e) arcs.push_back({0, first_extra + e});
    if (!leaf_exit) arcs.push_back({s(cut), side_leaf});

    const int head_lo = 2;
    const int head_hi = leaf_exit ? cut - 1 : cut;
    const int tail_lo = leaf_exit ? cut : cut + 1;
    std::vector<int> head_pool;
    for (int i = head_lo; i <= head_hi; ++i) head_pool.push_back(i);
    rng.shuffle(head_pool);
    head_pool.resize(std::min<std::size_t>(head_pool.size(), heads));

    for (int i : head_pool) {
        const int tail = rng.uniform(tail_lo, spine);
        arcs.push_back({s(tail), s(i)});
        if (rng.chance(30)) arcs.push_back({s(rng.uniform(tail_lo, spine)), s(i)});
        if (leaf_exit) arcs.push_back({t(chain), s(i + 1)});
    }
    if (!leaf_exit) {
        for (int j = entry_lo; j <= entry_hi; ++j)
            if (j == entry_lo || rng.chance(50)) arcs.push_back({t(j), s(cut + 1)});
    }
    // noise the preprocessing or local search must cope with
    for (int b = 2; b <= std::min(spine, chain); ++b)
        if (rng.chance(5)) arcs.push_back({s(spine), t(b)});
    for (int a = 2; a <= chain; ++a)
        if (rng.chance(5)) arcs.push_back({t(a), t(rng.uniform(1, a - 1))});

    const std::vector<Vertex> label = random_labels(n, rng);
    PlantedInstance inst;
    inst.family = family;
    inst.root = label[0];
    inst.graph = relabel(Digraph(n, arcs), label);
    inst.expects_trigger = true;
    return inst;
}

}  // namespace

std::uint64_t for_each_out_branching(const Digraph& graph, Vertex root, const BranchingVisitor& visit) {
    if (!graph.contains(root)) throw InputError("root out of range");
    if (!reaches_all(graph, root)) return 0;
    return Enumerator(graph, root, visit).run();
}

std::vector<OutBranching> enumerate_out_branchings(const Digraph& graph, Vertex root) {
    std::vector<OutBranching> result;
    for_each_out_branching(graph, root, [&](std::span<const Vertex> parent) {
        result.push_back(OutBranching::from_parents(root, parent));
        return true;
    });
    return result;
}

std::vector<std::vector<Vertex>> enumerate_out_branchings_by_arc_subsets(const Digraph& graph, Vertex root) {
    const int n = graph.vertex_count();
    const int m = graph.arc_count();
    if (!graph.contains(root)) throw InputError("root out of range");
    if (m > 24) throw InputError("arc-subset enumeration is limited to 24 arcs");
    std::vector<std::vector<Vertex>> result;
    const auto arcs = graph.arcs();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != n - 1) continue;
        std::vector<Vertex> parent(n, kAbsent);
        parent[root] = kNoVertex;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            const Arc a = arcs[i];
            ok = a.head != root && parent[a.head] == kAbsent;
            parent[a.head] = a.tail;
        }
        if (!ok) continue;
        // n-1 arcs, in-degree one everywhere but the root: a branching iff every vertex climbs to the root
        for (Vertex v = 0; v < n && ok; ++v) {
            Vertex cur = v;
            for (int steps = 0; cur != root && ok; ++steps) {
                ok = steps <= n;
                cur = parent[cur];
            }
        }
        if (ok) result.push_back(std::move(parent));
    }
    std::sort(result.begin(), result.end());
    return result;
}

BruteForceResult brute_force_max_leaves(const Digraph& graph, Vertex root) {
    BruteForceResult result;
    std::vector<int> scratch(graph.vertex_count());
    std::vector<Vertex> best;
    for_each_out_branching(graph, root, [&](std::span<const Vertex> parent) {
        const int count = count_leaves(parent, scratch);
        if (count > result.max_leaves) {
            result.max_leaves = count;
            best.assign(parent.begin(), parent.end());
        }
        return true;
    });
    if (!best.empty()) result.best = OutBranching::from_parents(root, best);
    return result;
}

BruteForceResult brute_force_max_leaves(const Digraph& graph) {
    BruteForceResult result;
    for (Vertex r = 0; r < graph.vertex_count(); ++r) {
        BruteForceResult rooted = brute_force_max_leaves(graph, r);
        if (rooted.max_leaves > result.max_leaves) result = std::move(rooted);
    }
    return result;
}

PlantFamily default_plant_family(int k, std::uint64_t seed) {
    if (k <= 2) return PlantFamily::leafy_small;
    if (k == 3) return PlantFamily::trigger_leaf_exit;
    return seed % 2 == 0 ? PlantFamily::trigger_leaf_exit : PlantFamily::trigger_branch_entry;
}

PlantedInstance plant(int k, std::uint64_t seed) {
    return plant(k, seed, default_plant_family(k, seed));
}

PlantedInstance plant(int k, std::uint64_t seed, PlantFamily family) {
    if (k < 2) throw InputError("plant needs k >= 2");
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k));
    if (family == PlantFamily::leafy_small) {
        if (k > 9) throw InputError("leafy_small instances need k <= 9");
        return plant_leafy_small(k, rng);
    }
    return plant_trigger(k, rng, family);
}

Digraph random_digraph(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1)) {
        throw InputError("random digraph: need 0 <= m <= n(n-1)");
    }
    Rng rng(seed);
    std::vector<Arc> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) all.push_back({u, v});
    rng.shuffle(all);
    all.resize(m);
    return Digraph(n, all);
}

}  // namespace kleaf
