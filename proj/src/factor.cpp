#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "oddsub/certify.hpp"
#include "oddsub/structure.hpp"

namespace oddsub {

namespace {

constexpr std::uint64_t kFactorSearchNodes = 50'000'000;

// Closed walk using every edge once, starting at vertex 0 and always leaving
// along the smallest unused edge (Hierholzer).
std::vector<Vertex> euler_circuit(const Graph& g) {
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<std::size_t> next(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    std::vector<Vertex> circuit;
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto nb = g.neighbors(v);
        while (next[v] < nb.size() && used[g.edge_index(v, nb[next[v]])]) ++next[v];
        if (next[v] == nb.size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            Vertex w = nb[next[v]];
            used[g.edge_index(v, w)] = 1;
            stack.push_back(w);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

// Hopcroft-Karp on a bipartite graph with `left` x `right` vertices.
// Returns match_left (right partner or -1).
std::vector<int> max_bipartite_matching(int left, int right, const std::vector<std::vector<int>>& arcs) {
    constexpr int kFree = -1;
    std::vector<int> match_l(static_cast<std::size_t>(left), kFree);
    std::vector<int> match_r(static_cast<std::size_t>(right), kFree);
    std::vector<int> layer(static_cast<std::size_t>(left));
    auto bfs = [&] {
        std::vector<int> queue;
        bool reachable_free = false;
        for (int u = 0; u < left; ++u) {
            layer[u] = match_l[u] == kFree ? 0 : -1;
            if (layer[u] == 0) queue.push_back(u);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int r : arcs[u]) {
                int mate = match_r[r];
                if (mate == kFree) {
                    reachable_free = true;
                } else if (layer[mate] < 0) {
                    layer[mate] = layer[u] + 1;
                    queue.push_back(mate);
                }
            }
        }
        return reachable_free;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int r : arcs[u]) {
            int mate = match_r[r];
            if (mate == kFree || (layer[mate] == layer[u] + 1 && dfs(mate))) {
                match_l[u] = r;
                match_r[r] = u;
                return true;
            }
        }
        layer[u] = -1;
        return false;
    };
    while (bfs()) {
        for (int u = 0; u < left; ++u) {
            if (match_l[u] == kFree) dfs(u);
        }
    }
    return match_l;
}

std::vector<FactorComponent> regular_components(const Graph& g, const std::vector<EdgeId>& edges) {
    Graph h = build_graph(g.order(), edges);
    std::vector<FactorComponent> out;
    for (auto& comp : connected_components(h)) {
        int d = h.degree(comp.front());
        out.push_back({VertexSet(std::move(comp)), d});
    }
    return out;
}

void require_connected_regular(const Graph& g, const char* what) {
    if (g.order() == 0 || !is_connected(g)) throw PreconditionError(std::string(what) + ": graph is not connected");
    if (!regular_degree(g)) throw PreconditionError(std::string(what) + ": graph is not regular");
}

// Spanning subgraph with every degree in [2, max_degree], edges decided in canonical
// order with "include" tried first. When `regular_parts` is set, each component of the
// chosen subgraph must be regular.
struct DegreeFactorSearch {
    const Graph& g;
    int max_degree;
    std::vector<int> degree;
    std::vector<int> undecided;
    std::vector<char> chosen;
    std::uint64_t nodes = 0;

    bool run(std::size_t i) {
        if (++nodes > kFactorSearchNodes) {
            throw SizeLimitError("[2,3]-factor search exceeded " + std::to_string(kFactorSearchNodes) + " nodes");
        }
        const auto& edges = g.edges();
        if (i == edges.size()) return accept();
        auto [u, v] = edges[i];
        --undecided[u];
        --undecided[v];
        if (degree[u] < max_degree && degree[v] < max_degree) {
            ++degree[u];
            ++degree[v];
            chosen[i] = 1;
            if (run(i + 1)) return true;
            chosen[i] = 0;
            --degree[u];
            --degree[v];
        }
        if (degree[u] + undecided[u] >= 2 && degree[v] + undecided[v] >= 2 && run(i + 1)) return true;
        ++undecided[u];
        ++undecided[v];
        return false;
    }

    bool accept() const {
        std::vector<EdgeId> picked;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (chosen[i]) picked.push_back(g.edges()[i]);
        }
        Graph h = build_graph(g.order(), picked);
        for (const auto& comp : connected_components(h)) {
            int d = h.degree(comp.front());
            if (d < 2) return false;
            for (Vertex x : comp) {
                if (h.degree(x) != d) return false;
            }
        }
        return true;
    }

    std::vector<EdgeId> picked() const {
        std::vector<EdgeId> out;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (chosen[i]) out.push_back(g.edges()[i]);
        }
        return out;
    }
};

std::optional<std::vector<EdgeId>> search_factor(const Graph& g, int max_degree) {
    DegreeFactorSearch s{g, max_degree, std::vector<int>(static_cast<std::size_t>(g.order()), 0), {},
                         std::vector<char>(static_cast<std::size_t>(g.edge_count()), 0)};
    s.undecided.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) s.undecided[v] = g.degree(v);
    if (!s.run(0)) return std::nullopt;
    return s.picked();
}

}  // namespace

bool is_valid_factor(const Graph& g, const Factor& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (const auto& e : f.edges) {
        if (!g.contains(e.u) || !g.contains(e.v) || e.u >= e.v || !g.adjacent(e.u, e.v)) {
            return fail("factor edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not a host edge");
        }
    }
    Graph h;
    try {
        h = build_graph(g.order(), f.edges);
    } catch (const GraphError& e) {
        return fail(e.what());
    }
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t c = 0; c < f.components.size(); ++c) {
        const auto& comp = f.components[c];
        const bool degree_ok = f.kind == FactorKind::TwoFactor ? comp.degree == 2 : (comp.degree == 2 || comp.degree == 3);
        if (!degree_ok) return fail("component " + std::to_string(c) + " has degree " + std::to_string(comp.degree));
        for (Vertex v : comp.vertices) {
            if (!g.contains(v)) return fail("component vertex " + std::to_string(v) + " out of range");
            if (owner[v] >= 0) return fail("vertex " + std::to_string(v) + " lies in two components");
            owner[v] = static_cast<int>(c);
            if (h.degree(v) != comp.degree) return fail("vertex " + std::to_string(v) + " has factor degree " + std::to_string(h.degree(v)));
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (owner[v] < 0) return fail("vertex " + std::to_string(v) + " is not covered");
    }
    for (const auto& e : f.edges) {
        if (owner[e.u] != owner[e.v]) return fail("factor edge joins two components");
    }
    // Recorded components must be the connected components of the factor.
    if (connected_components(h).size() != f.components.size()) return fail("components are not connected pieces of the factor");
    return true;
}

Factor petersen_two_factor(const Graph& g) {
    require_connected_regular(g, "2-factor");
    const int k = *regular_degree(g);
    if (k < 2 || k % 2 != 0) throw PreconditionError("2-factor: degree " + std::to_string(k) + " is not even and positive");
    // Orienting along an Euler circuit gives in = out = k/2 at every vertex; the out/in
    // split is then (k/2)-regular bipartite and has a perfect matching.
    auto circuit = euler_circuit(g);
    std::vector<std::vector<int>> arcs(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i) arcs[circuit[i]].push_back(circuit[i + 1]);
    auto match = max_bipartite_matching(g.order(), g.order(), arcs);
    std::vector<EdgeId> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (match[u] < 0) throw std::logic_error("2-factor: orientation split has no perfect matching");
        edges.push_back(EdgeId::canonical(u, match[u]));
    }
    std::sort(edges.begin(), edges.end());
    Factor f{edges, regular_components(g, edges), FactorKind::TwoFactor};
    std::string why;
    if (!is_valid_factor(g, f, &why)) throw std::logic_error("2-factor construction invalid: " + why);
    return f;
}

Factor factor_23(const Graph& g) {
    require_connected_regular(g, "[2,3]-factor");
    const int k = *regular_degree(g);
    if (k < 3 || k % 2 == 0) throw PreconditionError("[2,3]-factor: degree " + std::to_string(k) + " is not odd and at least 3");
    if (k == 3) return Factor{g.edges(), regular_components(g, g.edges()), FactorKind::TwoThreeFactor};
    if (g.edge_count() > kMaxFactorSearchEdges) {
        throw SizeLimitError("[2,3]-factor search too large: " + std::to_string(g.edge_count()) + " edges (limit " +
                             std::to_string(kMaxFactorSearchEdges) + ")");
    }
    auto edges = search_factor(g, 2);
    if (!edges) edges = search_factor(g, 3);
    if (!edges) throw std::logic_error("[2,3]-factor: none found although one always exists");
    Factor f{*edges, regular_components(g, *edges), FactorKind::TwoThreeFactor};
    std::string why;
    if (!is_valid_factor(g, f, &why)) throw std::logic_error("[2,3]-factor construction invalid: " + why);
    return f;
}

}  // namespace oddsub
