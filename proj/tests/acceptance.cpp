// Acceptance suite: one PASS/FAIL line per criterion on stdout, timings on
// stderr so that stdout is identical from run to run.
//
//   kleaf_acceptance [--fixtures DIR] [--transcript FILE]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kleaf/backward.hpp"
#include "kleaf/errors.hpp"
#include "kleaf/io.hpp"
#include "kleaf/leafy.hpp"
#include "kleaf/local_search.hpp"
#include "kleaf/oracle.hpp"
#include "kleaf/pathdecomp.hpp"
#include "kleaf/preprocess.hpp"
#include "kleaf/random.hpp"
#include "kleaf/solver.hpp"
#include "support.hpp"

using namespace kleaf;
using namespace kleaf::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Instance {
    std::string name;
    Digraph graph;
};

// Random graphs for the oracle comparison: half with uniform arc counts, half
// sparse enough that the answer is not decided by the first branching.
std::vector<Instance> small_corpus(const std::string& fixture_dir) {
    std::vector<Instance> corpus;
    Rng rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        const int n = rng.uniform(2, 8);
        const int m = i % 2 == 0 ? rng.uniform(0, n * (n - 1)) : rng.uniform(n - 1, std::min(n * (n - 1), 2 * n));
        corpus.push_back({"random" + std::to_string(i), random_digraph(n, m, 100000 + i)});
    }
    for (auto& f : structured_fixtures()) corpus.push_back({f.name, std::move(f.graph)});
    std::ifstream file(fixture_dir + "/returning_path.txt");
    if (!file) throw InputError("missing fixture " + fixture_dir + "/returning_path.txt");
    corpus.push_back({"returning_path.txt", parse_digraph(file)});
    return corpus;
}

// Larger sparse graphs where local search and the decomposition have room to work.
std::vector<Instance> medium_corpus() {
    std::vector<Instance> corpus;
    Rng rng(777);
    for (int i = 0; i < 300; ++i) {
        const int n = rng.uniform(9, 60);
        const int m = rng.uniform(n - 1, 3 * n);
        corpus.push_back({"medium" + std::to_string(i), random_digraph(n, m, 200000 + i)});
    }
    return corpus;
}

struct TriggerCase {
    int k;
    PlantFamily family;
    std::uint64_t seed;
};

std::vector<TriggerCase> trigger_cases() {
    std::vector<TriggerCase> cases;
    for (std::uint64_t s = 0; s < 50; ++s) cases.push_back({3, PlantFamily::trigger_leaf_exit, s});
    for (std::uint64_t s = 0; s < 30; ++s) cases.push_back({4, PlantFamily::trigger_leaf_exit, s});
    for (std::uint64_t s = 0; s < 30; ++s) cases.push_back({4, PlantFamily::trigger_branch_entry, s});
    return cases;
}

Outcome oracle_equivalence(const std::vector<Instance>& corpus, std::ostream& transcript) {
    const auto start = Clock::now();
    long long pairs = 0;
    int mismatches = 0;
    std::string first;
    SolveOptions options;
    options.mode = SolveMode::fpt;
    for (const Instance& inst : corpus) {
        const int best = brute_force_max_leaves(inst.graph).max_leaves;
        for (int k = 1; k <= inst.graph.vertex_count(); ++k) {
            ++pairs;
            const SolveResult r = solve(inst.graph, k, options);
            bool ok = r.decision.yes == (best >= k);
            if (r.decision.yes) ok = ok && !check_out_branching(inst.graph, *r.decision.witness) && r.decision.witness_leaves() >= k;
            if (!ok && mismatches++ == 0) first = inst.name + " k=" + std::to_string(k);
            transcript << inst.name << " k=" << k << " by " << to_string(r.decided_by) << ": ";
            write_decision(transcript, r.decision, true);
        }
    }
    const double elapsed = seconds_since(start);
    std::cerr << "criterion 1: " << elapsed << " s\n";
    Outcome o{1, "oracle equivalence", mismatches == 0 && elapsed < 300.0, ""};
    o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(pairs) + " (graph, k) pairs, " +
               std::to_string(mismatches) + " mismatches";
    if (elapsed >= 300.0) o.detail += ", over the 5 minute budget";
    if (mismatches) o.detail += ", first " + first;
    return o;
}

Outcome useless_arcs(const std::vector<Instance>& corpus, std::ostream& transcript) {
    long long tested = 0;
    int mismatches = 0;
    for (const Instance& inst : corpus) {
        const Digraph& g = inst.graph;
        if (g.vertex_count() > 7) continue;
        for (Vertex r = 0; r < g.vertex_count(); ++r) {
            if (!closure_reaches_all(g, r)) continue;
            const std::vector<Arc> used = arcs_in_some_branching(g, r);
            int useless = 0;
            for (const Arc& a : g.arcs()) {
                ++tested;
                const bool in_some = std::binary_search(used.begin(), used.end(), a);
                const bool verdict = is_useless(g, r, a);
                useless += verdict;
                if (verdict == in_some) ++mismatches;
            }
            transcript << inst.name << " r=" << r << " useless=" << useless << '\n';
        }
    }
    return {2, "useless-arc correctness", mismatches == 0,
            std::to_string(tested) + " (root, arc) pairs, " + std::to_string(mismatches) + " mismatches"};
}

// Exhaustive scan for an allowed, improving 1-change.
bool one_change_certificate(const Digraph& g, const OutBranching& t) {
    for (const Arc& a : g.arcs()) {
        if (t.has_arc(a.tail, a.head) || a.head == t.root()) continue;
        if (!climbs_to(t, a.head, a.tail) && !t.is_leaf(a.tail) && !t.is_branch_successor(a.head)) return false;
    }
    return true;
}

struct RootedCase {
    std::string name;
    const Digraph* graph;
    Vertex root;
};

std::vector<RootedCase> rooted_cases(const std::vector<const std::vector<Instance>*>& corpora, const std::vector<PlantedInstance>& planted) {
    std::vector<RootedCase> cases;
    for (const auto* corpus : corpora)
        for (const Instance& inst : *corpus)
            for (Vertex r = 0; r < inst.graph.vertex_count(); ++r)
                if (closure_reaches_all(inst.graph, r)) cases.push_back({inst.name, &inst.graph, r});
    for (std::size_t i = 0; i < planted.size(); ++i)
        cases.push_back({"planted" + std::to_string(i), &planted[i].graph, planted[i].root});
    return cases;
}

Outcome one_optimality(const std::vector<RootedCase>& cases, std::ostream& transcript) {
    int violations = 0;
    for (const RootedCase& c : cases) {
        const RootAnalysis a = analyze_root(*c.graph, c.root);
        if (check_out_branching(a.pruned, a.tree) || !one_change_certificate(a.pruned, a.tree)) ++violations;
        transcript << c.name << " r=" << c.root << " leaves=" << leaves(a.tree).size() << '\n';
    }
    return {3, "1-optimality certificate", violations == 0,
            std::to_string(cases.size()) + " computed branchings, " + std::to_string(violations) + " violations"};
}

Outcome leafy_construction(const std::vector<PlantedInstance>& planted, const std::vector<TriggerCase>& cases, std::ostream& transcript) {
    int fired = 0;
    int failures = 0;
    int cases_seen[3] = {0, 0, 0};
    double slowest = 0;
    std::string first;
    for (std::size_t i = 0; i < planted.size(); ++i) {
        const PlantedInstance& inst = planted[i];
        const int k = cases[i].k;
        const auto start = Clock::now();
        bool ok = true;
        try {
            const Digraph pruned = remove_useless_arcs(inst.graph, inst.root);
            const OutBranching t = one_optimal_out_branching(pruned, inst.root);
            const auto report = find_heavy_pair(pruned, t, k);
            if (report && static_cast<int>(leaves(t).size()) < k) {
                ++fired;
                const LeafyConstruction c = construct_leafy_branching_detailed(pruned, t, *report, k);
                ++cases_seen[c.proof_case];
                ok = !check_out_branching(inst.graph, c.branching) && c.branching.root() == inst.root &&
                     static_cast<int>(leaves(c.branching).size()) >= k;
                transcript << "planted" << i << " k=" << k << " case " << c.proof_case << " pivot " << c.pivot << ' ';
                write_decision(transcript, Decision{true, c.branching}, false);
            } else {
                ok = false;  // every instance here is built to fire
            }
            SolveOptions options;
            options.mode = SolveMode::fpt;
            const SolveResult r = solve(inst.graph, k, options);
            ok = ok && r.decision.yes && r.decided_by == DecidedBy::heavy_pair;
        } catch (const std::exception& e) {
            ok = false;
            transcript << "planted" << i << " threw " << e.what() << '\n';
        }
        const double elapsed = seconds_since(start);
        slowest = std::max(slowest, elapsed);
        if (elapsed >= 1.0) ok = false;
        if (!ok && failures++ == 0) first = "planted" + std::to_string(i);
    }
    std::cerr << "criterion 4: slowest instance " << slowest << " s\n";
    Outcome o{4, "leafy construction", failures == 0 && planted.size() >= 100, ""};
    o.detail = std::to_string(planted.size()) + " trigger instances (k=3,4), " + std::to_string(fired) + " fired (" +
               std::to_string(cases_seen[1]) + " shared leaf exit, " + std::to_string(cases_seen[2]) +
               " shared branch entry), " + std::to_string(failures) + " failures";
    if (failures) o.detail += ", first " + first;
    return o;
}

// k = 2 cannot fire: record that the planted k = 2 family never does.
int k2_trigger_count() {
    int fired = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PlantedInstance inst = plant(2, seed);
        const Digraph pruned = remove_useless_arcs(inst.graph, inst.root);
        const OutBranching t = one_optimal_out_branching(pruned, inst.root);
        if (leaves(t).size() < 2 && find_heavy_pair(pruned, t, 2)) ++fired;
    }
    return fired;
}

Outcome decompositions(const std::vector<RootedCase>& cases, std::ostream& transcript) {
    int invalid = 0;
    int bound_checked = 0;
    int bound_violations = 0;
    int widest = 0;
    for (const RootedCase& c : cases) {
        const RootAnalysis a = analyze_root(*c.graph, c.root);
        if (!validate(a.decomposition, underlying_graph(a.pruned))) ++invalid;
        // the smallest k with |leaves| <= k - 1 gives the tightest bound
        const int k = std::max(2, static_cast<int>(leaves(a.tree).size()) + 1);
        if (!find_heavy_pair(a.pruned, a.tree, k)) {
            ++bound_checked;
            widest = std::max(widest, a.decomposition.width());
            if (!check_width_bound(a.decomposition, k)) ++bound_violations;
        }
        transcript << c.name << " r=" << c.root << " width=" << a.decomposition.width() << '\n';
    }
    return {5, "path decomposition", invalid == 0 && bound_violations == 0,
            std::to_string(cases.size()) + " decompositions, " + std::to_string(invalid) + " invalid, " +
                std::to_string(bound_checked) + " width checks, " + std::to_string(bound_violations) +
                " over 6k^3, widest " + std::to_string(widest)};
}

Outcome branch_successor_bound(std::ostream& transcript) {
    Rng rng(4242);
    int with_branch = 0;
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const int n = rng.uniform(1, 50);
        // spread = how far back a parent may sit: 1 gives a path, n gives uniform attachment
        const int spread = rng.uniform(1, n);
        std::vector<Vertex> parent(n, kNoVertex);
        for (Vertex v = 1; v < n; ++v) parent[v] = rng.uniform(std::max(0, v - spread), v - 1);
        const OutBranching t = OutBranching::from_parents(0, parent);
        std::vector<int> children(n, 0);
        for (Vertex v = 1; v < n; ++v) ++children[parent[v]];
        int leaf_count = 0;
        int succ_count = 0;
        bool branch = false;
        for (Vertex v = 0; v < n; ++v) {
            leaf_count += children[v] == 0;
            branch |= children[v] >= 2;
            succ_count += v != 0 && children[parent[v]] >= 2;
        }
        if (leaf_count != static_cast<int>(leaves(t).size()) || succ_count != static_cast<int>(br_succ(t).size())) ++violations;
        if (branch) {
            ++with_branch;
            if (succ_count > 2 * leaf_count - 2) ++violations;
        }
        if (i % 1000 == 0) transcript << "tree" << i << " leaves=" << leaf_count << " brsucc=" << succ_count << '\n';
    }
    return {6, "branch-successor bound", violations == 0,
            "10000 random out-trees, " + std::to_string(with_branch) + " with a branch vertex, " + std::to_string(violations) + " violations"};
}

Outcome pivot_selection(std::ostream& transcript) {
    Rng rng(9001);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const int k = rng.uniform(1, 5);
        const int size = rng.uniform(2 * k - 1, 2 * k + 8);
        const int head_span = rng.uniform(1, 2 * size);
        const int gap = rng.uniform(0, 3);
        std::vector<OrderedTuple> tuples;
        for (int t = 0; t < size; ++t) {
            const int head = rng.uniform(0, head_span - 1);
            const int tail = head_span + gap + rng.uniform(0, 2 * size);
            tuples.push_back({tail, head, rng.uniform(head + 1, tail)});
        }
        bool ok = true;
        try {
            const PivotChoice p = select_pivot(tuples, k);
            // brute force over every witness in W
            int best = 0;
            for (const OrderedTuple& w : tuples) {
                int straddled = 0;
                for (const OrderedTuple& t : tuples) straddled += t.head < w.witness && w.witness <= t.tail;
                best = std::max(best, straddled);
            }
            std::vector<std::size_t> expected;
            for (std::size_t t = 0; t < tuples.size(); ++t)
                if (tuples[t].head < p.witness && p.witness <= tuples[t].tail) expected.push_back(t);
            ok = best >= k && p.chosen < tuples.size() && p.witness == tuples[p.chosen].witness &&
                 p.straddling == expected && static_cast<int>(expected.size()) >= k;
            transcript << "system" << i << " k=" << k << " chosen=" << p.chosen << " straddled=" << expected.size() << '\n';
        } catch (const std::exception& e) {
            ok = false;
            transcript << "system" << i << " threw " << e.what() << '\n';
        }
        failures += !ok;
    }
    return {7, "pivot selection", failures == 0, "1000 tuple systems (k <= 5), " + std::to_string(failures) + " failures"};
}

Outcome returning_path_regression(const std::string& fixture_dir, std::ostream& transcript) {
    std::ifstream file(fixture_dir + "/returning_path.txt");
    const Digraph g = parse_digraph(file);
    bool ok = enumerate_out_branchings(g, 0).size() == 1;
    for (SolveMode mode : {SolveMode::automatic, SolveMode::fpt, SolveMode::brute_force}) {
        SolveOptions options;
        options.mode = mode;
        options.validate = true;
        for (int k = 1; k <= g.vertex_count(); ++k) {
            const SolveResult r = solve(g, k, options);
            ok = ok && r.decision.yes == (k == 1);
            transcript << "returning_path k=" << k << ' ';
            write_decision(transcript, r.decision, true);
        }
    }
    return {8, "returning-path regression", ok, "YES for k=1, NO for k=2..6 in auto, fpt and brute-force modes"};
}

std::vector<Outcome> run_suite(const std::string& fixture_dir, std::ostream& transcript) {
    const std::vector<Instance> small = small_corpus(fixture_dir);
    const std::vector<Instance> medium = medium_corpus();
    const std::vector<TriggerCase> triggers = trigger_cases();
    std::vector<PlantedInstance> planted;
    for (const TriggerCase& c : triggers) planted.push_back(plant(c.k, c.seed, c.family));
    const std::vector<RootedCase> rooted = rooted_cases({&small, &medium}, planted);

    std::vector<Outcome> outcomes;
    outcomes.push_back(oracle_equivalence(small, transcript));
    outcomes.push_back(useless_arcs(small, transcript));
    outcomes.push_back(one_optimality(rooted, transcript));
    outcomes.push_back(leafy_construction(planted, triggers, transcript));
    const int k2 = k2_trigger_count();
    transcript << "k=2 planted instances firing: " << k2 << '\n';
    outcomes.back().detail += "; k=2 fired on " + std::to_string(k2) + " of 50 planted instances";
    outcomes.push_back(decompositions(rooted, transcript));
    outcomes.push_back(branch_successor_bound(transcript));
    outcomes.push_back(pivot_selection(transcript));
    outcomes.push_back(returning_path_regression(fixture_dir, transcript));
    return outcomes;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    std::string fixture_dir = KLEAF_FIXTURE_DIR;
    std::string transcript_path;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--fixtures") fixture_dir = argv[i + 1];
        else if (flag == "--transcript") transcript_path = argv[i + 1];
        else {
            std::cerr << "unknown flag " << flag << '\n';
            return 2;
        }
    }

    const auto start = Clock::now();
    std::ostringstream first;
    std::ostringstream second;
    std::vector<Outcome> outcomes;
    try {
        outcomes = run_suite(fixture_dir, first);
        const std::vector<Outcome> again = run_suite(fixture_dir, second);
        bool same = first.str() == second.str() && again.size() == outcomes.size();
        for (std::size_t i = 0; same && i < outcomes.size(); ++i) same = again[i].pass == outcomes[i].pass && again[i].detail == outcomes[i].detail;
        char digest[32];
        std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a(first.str())));
        outcomes.push_back({9, "determinism", same,
                            "two in-process runs, transcript " + std::to_string(first.str().size()) + " bytes, digest " + digest +
                                (same ? ", identical" : ", different")});
    } catch (const std::exception& e) {
        std::cout << "FAIL suite aborted: " << e.what() << '\n';
        return 1;
    }
    if (!transcript_path.empty()) std::ofstream(transcript_path) << first.str();

    int failed = 0;
    for (const Outcome& o : outcomes) {
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << o.id << " (" << o.name << "): " << o.detail << '\n';
        failed += !o.pass;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    std::cerr << "total " << seconds_since(start) << " s\n";
    return failed == 0 ? 0 : 1;
}
