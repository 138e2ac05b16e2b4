#include "kleaf/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "kleaf/errors.hpp"

namespace kleaf {
namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    return tokens;
}

long long to_integer(const std::string& token, int line) {
    long long value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) throw ParseError(line, "'" + token + "' is not an integer");
    return value;
}

}  // namespace

Digraph parse_digraph(std::istream& in, ParseWarnings* warnings) {
    const auto warn = [&](int line, const std::string& what) {
        if (warnings) warnings->messages.push_back("line " + std::to_string(line) + ": " + what);
    };

    long long n = -1;
    long long m = -1;
    std::vector<Arc> arcs;
    std::set<std::pair<Vertex, Vertex>> seen;
    long long read = 0;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto tokens = split(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) throw ParseError(line_no, "expected two integers, found " + std::to_string(tokens.size()) + " fields");
        const long long a = to_integer(tokens[0], line_no);
        const long long b = to_integer(tokens[1], line_no);
        if (n < 0) {
            if (a < 0 || b < 0) throw ParseError(line_no, "vertex and arc counts must be non-negative");
            if (a > 10'000'000) throw ParseError(line_no, "vertex count too large");
            n = a;
            m = b;
            continue;
        }
        if (read == m) throw ParseError(line_no, "more arc lines than the declared " + std::to_string(m));
        ++read;
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ParseError(line_no, "arc endpoint outside 0.." + std::to_string(n - 1));
        }
        const Arc arc{static_cast<Vertex>(a), static_cast<Vertex>(b)};
        if (arc.tail == arc.head) {
            warn(line_no, "self-loop on " + std::to_string(arc.tail) + " dropped");
            continue;
        }
        if (!seen.insert({arc.tail, arc.head}).second) {
            warn(line_no, "duplicate arc " + std::to_string(arc.tail) + " " + std::to_string(arc.head) + " dropped");
            continue;
        }
        arcs.push_back(arc);
    }
    if (n < 0) throw ParseError(std::max(line_no, 1), "missing \"n m\" header");
    if (read < m) {
        throw ParseError(std::max(line_no, 1), "expected " + std::to_string(m) + " arc lines, found " + std::to_string(read));
    }
    return Digraph(static_cast<int>(n), arcs);
}

void write_digraph(std::ostream& out, const Digraph& graph) {
    out << graph.vertex_count() << ' ' << graph.arc_count() << '\n';
    for (const Arc& a : graph.arcs()) out << a.tail << ' ' << a.head << '\n';
}

void write_decision(std::ostream& out, const Decision& decision, bool witness) {
    if (!decision.yes) {
        out << "NO\n";
        return;
    }
    out << "YES " << decision.witness_leaves() << '\n';
    if (!witness || !decision.witness) return;
    const OutBranching& tree = *decision.witness;
    for (Vertex v = 0; v < tree.host_size(); ++v)
        if (v != tree.root()) out << tree.parent(v) << ' ' << v << '\n';
    out << "root " << tree.root() << '\n';
}

}  // namespace kleaf
