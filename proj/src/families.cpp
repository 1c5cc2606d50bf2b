#include "oddsub/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <tuple>

#include "oddsub/error.hpp"

namespace oddsub {

namespace {

constexpr int kRandomRegularAttempts = 1000;

// Uniform draw in [0, bound) from the raw engine. std::uniform_int_distribution is
// implementation-defined, which would make seeded output differ across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(what);
}

Graph generate_union(const DisjointUnionFamily& u) {
    std::vector<Graph> parts;
    parts.reserve(u.parts.size());
    for (const auto& p : u.parts) parts.push_back(generate_family(p));
    return disjoint_union(parts);
}

std::vector<int> parse_ints(std::string_view args, std::string_view whole) {
    std::vector<int> out;
    if (args.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = args.find(',', pos);
        std::string_view tok = args.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
            throw GraphError("family '" + std::string(whole) + "': '" + std::string(tok) + "' is not an integer");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Family parse_block(std::string_view block) {
    std::string_view name = block;
    std::string_view args;
    if (auto colon = block.find(':'); colon != std::string_view::npos) {
        name = block.substr(0, colon);
        args = block.substr(colon + 1);
    }
    // Shorthands K4, C7, P5.
    if (args.empty() && name.size() > 1 && all_digits(name.substr(1))) {
        char head = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        int value = parse_ints(name.substr(1), block).front();
        if (head == 'K') return CompleteFamily{value};
        if (head == 'C') return CycleFamily{value};
        if (head == 'P') return PathFamily{value};
    }
    auto ints = parse_ints(args, block);
    auto want = [&](std::size_t count) {
        if (ints.size() != count) {
            throw GraphError("family '" + std::string(block) + "' expects " + std::to_string(count) + " argument(s)");
        }
    };
    std::string key = lower(name);
    if (key == "path") { want(1); return PathFamily{ints[0]}; }
    if (key == "cycle") { want(1); return CycleFamily{ints[0]}; }
    if (key == "complete") { want(1); return CompleteFamily{ints[0]}; }
    if (key == "star") { want(1); return StarFamily{ints[0]}; }
    if (key == "f") { want(0); return FGraphFamily{}; }
    if (key == "gkl") { want(2); return GklFamily{ints[0], ints[1]}; }
    if (key == "petersen") { want(0); return PetersenFamily{}; }
    if (key == "random-regular" || key == "rr") {
        want(3);
        if (ints[2] < 0) throw GraphError("family '" + std::string(block) + "': seed must be nonnegative");
        return RandomRegularFamily{ints[0], ints[1], static_cast<std::uint64_t>(ints[2])};
    }
    if (key == "gnm") {
        want(3);
        if (ints[2] < 0) throw GraphError("family '" + std::string(block) + "': seed must be nonnegative");
        return RandomGnmFamily{ints[0], ints[1], static_cast<std::uint64_t>(ints[2])};
    }
    throw GraphError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace

Graph path_graph(int order) {
    require(order >= 1, "Path needs at least 1 vertex, got " + std::to_string(order));
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < order; ++i) e.emplace_back(i, i + 1);
    return build_graph(order, e);
}

Graph cycle_graph(int length) {
    require(length >= 3, "Cycle needs length at least 3, got " + std::to_string(length));
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < length; ++i) e.emplace_back(i, (i + 1) % length);
    return build_graph(length, e);
}

Graph complete_graph(int order) {
    require(order >= 1, "Complete needs at least 1 vertex, got " + std::to_string(order));
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int a = 0; a < order; ++a) {
        for (int b = a + 1; b < order; ++b) e.emplace_back(a, b);
    }
    return build_graph(order, e);
}

Graph star_graph(int leaves) {
    require(leaves >= 0, "Star needs a nonnegative leaf count, got " + std::to_string(leaves));
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(leaves + 1, e);
}

Graph f_graph() {
    enum : Vertex { a, b, c, d, u, v, w, x, y };
    return build_graph(9, {{a, u}, {a, x}, {a, y}, {b, v}, {b, w}, {b, x}, {c, u}, {c, v}, {c, y}, {d, u}, {d, w}, {d, x}});
}

Graph gkl_graph(int k, int ell) {
    require(k >= 1 && ell >= 0, "Gkl needs k >= 1 and l >= 0, got (" + std::to_string(k) + ", " + std::to_string(ell) + ")");
    std::vector<Graph> parts(static_cast<std::size_t>(k), f_graph());
    for (int i = 0; i < ell; ++i) parts.push_back(cycle_graph(4));
    return disjoint_union(parts);
}

Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, e);
}

Graph random_regular_graph(int order, int degree, std::uint64_t seed) {
    require(order >= 1 && degree >= 0 && degree < order,
            "RandomRegular needs 0 <= k < n, got n=" + std::to_string(order) + ", k=" + std::to_string(degree));
    require((static_cast<long long>(order) * degree) % 2 == 0,
            "RandomRegular needs n*k even, got n=" + std::to_string(order) + ", k=" + std::to_string(degree));
    std::mt19937_64 rng(seed);
    // Pairing model in which each step joins two random points of distinct, not yet
    // adjacent vertices; the attempt restarts when no such pair is left.
    for (int attempt = 0; attempt < kRandomRegularAttempts; ++attempt) {
        std::vector<Vertex> points;
        for (Vertex v = 0; v < order; ++v) points.insert(points.end(), static_cast<std::size_t>(degree), v);
        std::set<std::pair<Vertex, Vertex>> edges;
        auto suitable = [&](Vertex a, Vertex b) { return a != b && !edges.contains(std::minmax(a, b)); };
        bool stuck = false;
        while (!points.empty() && !stuck) {
            const std::size_t count = points.size();
            std::size_t i = 0;
            std::size_t j = 0;
            bool found = false;
            for (std::size_t tries = 0; tries < 4 * count && !found; ++tries) {
                i = draw_below(rng, count);
                j = draw_below(rng, count);
                found = suitable(points[i], points[j]);
            }
            if (!found) {
                // Fall back to a uniform choice among all suitable pairs.
                std::vector<std::pair<std::size_t, std::size_t>> options;
                for (std::size_t x = 0; x < count; ++x) {
                    for (std::size_t y = x + 1; y < count; ++y) {
                        if (suitable(points[x], points[y])) options.emplace_back(x, y);
                    }
                }
                if (options.empty()) {
                    stuck = true;
                    continue;
                }
                std::tie(i, j) = options[draw_below(rng, options.size())];
            }
            edges.insert(std::minmax(points[i], points[j]));
            if (i < j) std::swap(i, j);
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        }
        if (!stuck) return build_graph(order, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
    }
    throw GraphError("RandomRegular: no simple pairing found after " + std::to_string(kRandomRegularAttempts) + " attempts");
}

Graph random_gnm_graph(int order, int edges, std::uint64_t seed) {
    require(order >= 0, "Gnm needs a nonnegative order, got " + std::to_string(order));
    const long long pairs_total = static_cast<long long>(order) * (order - 1) / 2;
    require(edges >= 0 && edges <= pairs_total,
            "Gnm needs 0 <= m <= n(n-1)/2, got n=" + std::to_string(order) + ", m=" + std::to_string(edges));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < order; ++a) {
        for (Vertex b = a + 1; b < order; ++b) pairs.emplace_back(a, b);
    }
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first `edges` slots become a uniform sample.
    for (std::size_t i = 0; i < static_cast<std::size_t>(edges); ++i) {
        std::swap(pairs[i], pairs[i + draw_below(rng, pairs.size() - i)]);
    }
    pairs.resize(static_cast<std::size_t>(edges));
    return build_graph(order, pairs);
}

Graph generate_family(const Family& family) {
    struct Visitor {
        Graph operator()(const PathFamily& f) const { return path_graph(f.order); }
        Graph operator()(const CycleFamily& f) const { return cycle_graph(f.length); }
        Graph operator()(const CompleteFamily& f) const { return complete_graph(f.order); }
        Graph operator()(const StarFamily& f) const { return star_graph(f.leaves); }
        Graph operator()(const FGraphFamily&) const { return f_graph(); }
        Graph operator()(const GklFamily& f) const { return gkl_graph(f.k, f.ell); }
        Graph operator()(const PetersenFamily&) const { return petersen_graph(); }
        Graph operator()(const RandomRegularFamily& f) const { return random_regular_graph(f.order, f.degree, f.seed); }
        Graph operator()(const RandomGnmFamily& f) const { return random_gnm_graph(f.order, f.edges, f.seed); }
        Graph operator()(const DisjointUnionFamily& f) const { return generate_union(f); }
    };
    return std::visit(Visitor{}, family);
}

Family parse_family(std::string_view text) {
    std::vector<Family> blocks;
    std::size_t pos = 0;
    for (;;) {
        std::size_t plus = text.find('+', pos);
        auto block = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
        if (block.empty()) throw GraphError("empty block in family '" + std::string(text) + "'");
        blocks.push_back(parse_block(block));
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    if (blocks.size() == 1) return std::move(blocks.front());
    return DisjointUnionFamily{std::move(blocks)};
}

std::string family_grammar_help() {
    return "Graph family specs (name[:args], integer args separated by commas):\n"
           "  path:t  | Pt           path on t vertices\n"
           "  cycle:l | Cl           cycle of length l >= 3\n"
           "  complete:n | Kn        complete graph\n"
           "  star:r                 K_{1,r}, center 0\n"
           "  F                      the 9-vertex bipartite graph with f_o = 4\n"
           "  gkl:k,l                k copies of F and l copies of C4\n"
           "  petersen               Petersen graph\n"
           "  random-regular:n,k,s   seeded random k-regular graph (alias rr)\n"
           "  gnm:n,m,s              seeded uniform graph with n vertices and m edges\n"
           "  A+B                    disjoint union of blocks\n";
}

}  // namespace oddsub
