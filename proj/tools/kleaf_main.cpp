// kleaf: decide whether a digraph has an out-branching with at least k leaves.
//
//   kleaf graph.txt --k 3 --witness
//   kleaf --gen plant:3:17 > big.txt
//
// Exit status: 0 YES, 1 NO, 2 error (including failed --validate checks).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kleaf/errors.hpp"
#include "kleaf/io.hpp"
#include "kleaf/oracle.hpp"
#include "kleaf/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::vector<std::string> split_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream in(spec);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    return parts;
}

kleaf::Digraph generate(const std::string& spec) {
    const auto parts = split_spec(spec);
    try {
        if (parts.size() == 3 && parts[0] == "plant") {
            return kleaf::plant(std::stoi(parts[1]), std::stoull(parts[2])).graph;
        }
        if (parts.size() == 4 && parts[0] == "random") {
            return kleaf::random_digraph(std::stoi(parts[1]), std::stoi(parts[2]), std::stoull(parts[3]));
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const kleaf::InputError*>(&e)) throw;
        throw kleaf::InputError("bad number in --gen " + spec);
    }
    throw kleaf::InputError("--gen expects plant:<k>:<seed> or random:<n>:<m>:<seed>");
}

kleaf::Digraph read_input(const std::string& path) {
    kleaf::ParseWarnings warnings;
    kleaf::Digraph graph;
    if (path == "-") {
        graph = kleaf::parse_digraph(std::cin, &warnings);
    } else {
        std::ifstream file(path);
        if (!file) throw kleaf::InputError("cannot open " + path);
        graph = kleaf::parse_digraph(file, &warnings);
    }
    for (const auto& w : warnings.messages) std::cerr << "warning: " << w << '\n';
    return graph;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed spanning k-leaf solver"};
    std::string input = "-";
    std::optional<int> k;
    std::string mode = "auto";
    std::optional<int> root;
    bool witness = false;
    std::string pd_path;
    std::string gen;
    bool validate = false;
    bool verbose = false;

    app.add_option("input", input, "edge-list file, '-' for stdin");
    app.add_option("--k", k, "leaf target");
    app.add_option("--mode", mode, "auto, fpt or bruteforce")->check(CLI::IsMember({"auto", "fpt", "bruteforce"}));
    app.add_option("--root", root, "only consider out-branchings rooted here");
    app.add_flag("--witness", witness, "print the out-branching on YES");
    app.add_option("--emit-pathdecomp", pd_path, "write the path decomposition of the deciding root to this file");
    app.add_option("--gen", gen, "plant:<k>:<seed> or random:<n>:<m>:<seed>; prints the graph unless --k is given");
    app.add_flag("--validate", validate, "re-check all intermediate structures, fail on any violation");
    app.add_flag("-v,--verbose", verbose, "report which step decided on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        kleaf::Digraph graph = gen.empty() ? read_input(input) : generate(gen);
        if (!k) {
            if (gen.empty()) throw kleaf::InputError("--k is required");
            kleaf::write_digraph(std::cout, graph);
            return kExitYes;
        }

        kleaf::SolveOptions options;
        options.mode = mode == "fpt" ? kleaf::SolveMode::fpt
                       : mode == "bruteforce" ? kleaf::SolveMode::brute_force
                                              : kleaf::SolveMode::automatic;
        options.root = root;
        options.validate = validate;
        const kleaf::SolveResult result = kleaf::solve(graph, *k, options);

        if (!pd_path.empty()) {
            if (result.root == kleaf::kNoVertex) {
                std::cerr << "warning: no root reaches every vertex; no path decomposition written\n";
            } else {
                const kleaf::PathDecomposition pd =
                    result.decomposition ? *result.decomposition : kleaf::analyze_root(graph, result.root).decomposition;
                std::ofstream out(pd_path);
                if (!out) throw kleaf::InputError("cannot write " + pd_path);
                kleaf::write_path_decomposition(out, pd);
            }
        }
        if (verbose) {
            std::cerr << "decided by " << kleaf::to_string(result.decided_by);
            if (result.root != kleaf::kNoVertex) std::cerr << " at root " << result.root;
            std::cerr << '\n';
        }
        kleaf::write_decision(std::cout, result.decision, witness);
        return result.decision.yes ? kExitYes : kExitNo;
    } catch (const kleaf::InvariantViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
