#include "kleaf/dp.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <tuple>
#include <unordered_map>

#include "kleaf/errors.hpp"

namespace kleaf {

NicePathDecomposition to_nice(const PathDecomposition& pd, const UndirectedGraph& graph) {
    if (auto check = validate(pd, graph); !check) throw InputError("to_nice: " + check.message);
    std::vector<std::vector<Vertex>> adjacent(graph.vertex_count);
    for (const auto& [u, v] : graph.edges) {
        adjacent[u].push_back(v);
        adjacent[v].push_back(u);
    }

    NicePathDecomposition npd;
    std::vector<char> active(graph.vertex_count, 0);
    VertexSet previous;
    for (const VertexSet& bag : pd.bags) {
        for (Vertex v : previous) {
            if (!std::binary_search(bag.begin(), bag.end(), v)) {
                npd.events.push_back({NiceEvent::Kind::forget, v, kNoVertex});
                active[v] = 0;
            }
        }
        VertexSet fresh;
        for (Vertex v : bag) {
            if (!active[v]) {
                fresh.push_back(v);
                active[v] = 1;
                npd.events.push_back({NiceEvent::Kind::introduce, v, kNoVertex});
            }
        }
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v : fresh) {
            for (Vertex w : adjacent[v]) {
                // an edge between two fresh vertices is found from both sides; keep one
                const bool w_fresh = std::binary_search(fresh.begin(), fresh.end(), w);
                if (active[w] && (!w_fresh || v < w)) edges.emplace_back(std::min(v, w), std::max(v, w));
            }
        }
        std::sort(edges.begin(), edges.end());
        for (const auto& [u, v] : edges) npd.events.push_back({NiceEvent::Kind::edge, u, v});
        previous = bag;
    }
    return npd;
}

int Decision::witness_leaves() const {
    return witness ? static_cast<int>(leaves(*witness).size()) : 0;
}

namespace {

// A DP state is a byte string: four bytes of leaf count, then two bytes per
// active vertex (in ascending vertex order): flags and block label.
constexpr char kSettled = 1;   // has a parent, or is the root
constexpr char kHasChild = 2;

constexpr std::size_t kHeader = sizeof(int);

int leaf_count(const std::string& s) {
    int value;
    std::memcpy(&value, s.data(), sizeof value);
    return value;
}

void set_leaf_count(std::string& s, int value) {
    std::memcpy(s.data(), &value, sizeof value);
}

std::size_t slot(std::size_t position) { return kHeader + 2 * position; }

// Relabel blocks in order of first appearance.
void canonicalize(std::string& s) {
    char map[256];
    std::fill(std::begin(map), std::end(map), static_cast<char>(-1));
    char next = 0;
    for (std::size_t i = kHeader + 1; i < s.size(); i += 2) {
        auto& target = map[static_cast<unsigned char>(s[i])];
        if (target == static_cast<char>(-1)) target = next++;
        s[i] = target;
    }
}

// Leaves counted so far plus every vertex that could still end up a leaf.
bool can_reach(const std::string& s, int future_introductions, int cap) {
    int possible = leaf_count(s) + future_introductions;
    for (std::size_t i = kHeader; i < s.size() && possible < cap; i += 2) possible += !(s[i] & kHasChild);
    return possible >= cap;
}

struct Back {
    int pred = -1;
    Arc adopted{kNoVertex, kNoVertex};
};

struct Layer {
    std::vector<std::string> states;
    std::vector<Back> back;
    std::unordered_map<std::string, int> index;

    void offer(std::string s, Back b) {
        canonicalize(s);
        auto [it, fresh] = index.try_emplace(s, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(std::move(s));
            back.push_back(b);
        }
    }
};

}  // namespace

Decision count_leaf_branching(const Digraph& graph, const NicePathDecomposition& npd, int k, Vertex root) {
    return count_leaf_branching(graph, npd, k, root, nullptr);
}

Decision count_leaf_branching(const Digraph& graph, const NicePathDecomposition& npd, int k, Vertex root, DpStats* stats) {
    const int n = graph.vertex_count();
    if (!graph.contains(root)) throw InputError("root out of range");
    if (k > n) return {};
    const int cap = std::max(k, 0);

    // full event list: the given events, then forget whatever is still active
    std::vector<NiceEvent> events = npd.events;
    {
        std::vector<char> active(n, 0);
        for (const NiceEvent& e : events) {
            if (e.kind == NiceEvent::Kind::introduce) active[e.u] = 1;
            if (e.kind == NiceEvent::Kind::forget) active[e.u] = 0;
        }
        for (Vertex v = 0; v < n; ++v)
            if (active[v]) events.push_back({NiceEvent::Kind::forget, v, kNoVertex});
    }
    std::vector<int> introductions_after(events.size() + 1, 0);
    for (std::size_t e = events.size(); e-- > 0;) {
        introductions_after[e] = introductions_after[e + 1] + (events[e].kind == NiceEvent::Kind::introduce ? 1 : 0);
    }

    std::vector<Layer> layers(1);
    {
        std::string start(kHeader, '\0');
        set_leaf_count(start, 0);
        layers[0].offer(std::move(start), {});
    }
    VertexSet active;
    std::size_t peak = 1;

    for (std::size_t e = 0; e < events.size(); ++e) {
        const NiceEvent& event = events[e];
        const Layer& from = layers.back();
        Layer to;
        switch (event.kind) {
        case NiceEvent::Kind::introduce: {
            const auto it = std::lower_bound(active.begin(), active.end(), event.u);
            if (it != active.end() && *it == event.u) throw InputError("vertex introduced twice");
            const std::size_t pos = static_cast<std::size_t>(it - active.begin());
            if (active.size() >= 250) throw InputError("bag too large for the dynamic program");
            active.insert(it, event.u);
            for (int s = 0; s < static_cast<int>(from.states.size()); ++s) {
                std::string next = from.states[s];
                const char flags = event.u == root ? kSettled : 0;
                next.insert(slot(pos), std::string{flags, static_cast<char>(250)});  // unused label until canonicalized
                to.offer(std::move(next), {s, {}});
            }
            break;
        }
        case NiceEvent::Kind::forget: {
            const auto it = std::lower_bound(active.begin(), active.end(), event.u);
            if (it == active.end() || *it != event.u) throw InputError("forgetting an inactive vertex");
            const std::size_t pos = static_cast<std::size_t>(it - active.begin());
            active.erase(it);
            const bool nothing_left = active.empty() && introductions_after[e + 1] == 0;
            for (int s = 0; s < static_cast<int>(from.states.size()); ++s) {
                const std::string& cur = from.states[s];
                const char flags = cur[slot(pos)];
                const char block = cur[slot(pos) + 1];
                if (!(flags & kSettled)) continue;
                std::string next = cur;
                next.erase(slot(pos), 2);
                bool block_survives = false;
                for (std::size_t i = kHeader + 1; i < next.size(); i += 2) block_survives |= next[i] == block;
                // a closed component must be the whole branching
                if (!block_survives && !nothing_left) continue;
                if (!(flags & kHasChild)) set_leaf_count(next, std::min(cap, leaf_count(next) + 1));
                if (!can_reach(next, introductions_after[e + 1], cap)) continue;
                to.offer(std::move(next), {s, {}});
            }
            break;
        }
        case NiceEvent::Kind::edge: {
            const auto pu = static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), event.u) - active.begin());
            const auto pv = static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), event.v) - active.begin());
            if (pu >= active.size() || active[pu] != event.u || pv >= active.size() || active[pv] != event.v) {
                throw InputError("edge event on inactive vertices");
            }
            for (int s = 0; s < static_cast<int>(from.states.size()); ++s) {
                const std::string& cur = from.states[s];
                to.offer(cur, {s, {}});
                for (auto [pt, ph, tail, head] : {std::tuple{pu, pv, event.u, event.v}, std::tuple{pv, pu, event.v, event.u}}) {
                    if (!graph.has_arc(tail, head)) continue;
                    if (cur[slot(ph)] & kSettled) continue;
                    const char tail_block = cur[slot(pt) + 1];
                    const char head_block = cur[slot(ph) + 1];
                    if (tail_block == head_block) continue;
                    std::string next = cur;
                    next[slot(ph)] |= kSettled;
                    next[slot(pt)] |= kHasChild;
                    for (std::size_t i = kHeader + 1; i < next.size(); i += 2)
                        if (next[i] == head_block) next[i] = tail_block;
                    if (!can_reach(next, introductions_after[e + 1], cap)) continue;
                    to.offer(std::move(next), {s, {tail, head}});
                }
            }
            break;
        }
        }
        to.index.clear();
        peak = std::max(peak, to.states.size());
        layers.push_back(std::move(to));
        // earlier layers only need their back-pointers
        layers[layers.size() - 2].states.clear();
        layers[layers.size() - 2].states.shrink_to_fit();
    }
    if (stats) {
        stats->events = events.size();
        stats->peak_states = peak;
    }

    const Layer& last = layers.back();
    int accepting = -1;
    for (int s = 0; s < static_cast<int>(last.states.size()); ++s) {
        if (leaf_count(last.states[s]) == cap) {
            accepting = s;
            break;
        }
    }
    if (accepting < 0) return {};

    std::vector<Vertex> parent(n, kNoVertex);
    for (std::size_t layer = layers.size() - 1, s = static_cast<std::size_t>(accepting); layer > 0; --layer) {
        const Back& b = layers[layer].back[s];
        if (b.adopted.tail != kNoVertex) parent[b.adopted.head] = b.adopted.tail;
        s = static_cast<std::size_t>(b.pred);
    }
    Decision decision;
    decision.yes = true;
    decision.witness = OutBranching::from_parents(root, parent);
    if (auto problem = check_out_branching(graph, *decision.witness)) {
        throw InvariantViolation("dynamic program produced an invalid witness: " + *problem);
    }
    if (decision.witness_leaves() < k) throw InvariantViolation("dynamic program witness has fewer than k leaves");
    return decision;
}

}  // namespace kleaf
