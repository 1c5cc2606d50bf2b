#include "oddsub/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "oddsub/error.hpp"

namespace oddsub {

namespace {

bool skip_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly two integers; anything else on the line is an error.
bool two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string rest;
    return static_cast<bool>(ss >> a >> b) && !(ss >> rest);
}

}  // namespace

Graph read_edge_list(std::istream& in, bool dedupe) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    long long m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> edge_line;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        long long a = 0;
        long long b = 0;
        if (!two_ints(line, a, b)) {
            throw ParseError(lineno, n < 0 ? "expected header 'n m'" : "expected edge 'u v'");
        }
        if (n < 0) {
            if (a < 0 || b < 0 || a > 1'000'000) throw ParseError(lineno, "invalid header values");
            n = a;
            m = b;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "more than " + std::to_string(m) + " edges");
        if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
        if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        edge_line.push_back(lineno);
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    try {
        return build_graph(static_cast<int>(n), edges, dedupe);
    } catch (const GraphError& e) {
        // Locate the first repeated edge so the message points at a line.
        std::vector<std::pair<Vertex, Vertex>> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto key = std::minmax(edges[i].first, edges[i].second);
            for (const auto& s : seen) {
                if (s == std::pair<Vertex, Vertex>(key)) throw ParseError(edge_line[i], e.what());
            }
            seen.emplace_back(key);
        }
        throw;
    }
}

Graph read_edge_list_file(const std::string& path, bool dedupe) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open '" + path + "'");
    return read_edge_list(in, dedupe);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

}  // namespace oddsub
