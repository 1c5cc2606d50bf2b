#include "oddsub/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "oddsub/error.hpp"

namespace oddsub {

namespace {

std::string pair_text(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw GraphError("vertex set contains negative id " + std::to_string(members_.front()));
    }
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw GraphError("vertex set contains duplicate id " + std::to_string(*dup));
    }
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<Vertex> ids;
    ids.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        ids.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

int Graph::min_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::edge_index(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b) || a == b || !adjacent(a, b)) return -1;
    auto e = EdgeId::canonical(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    if (n_ > 64) throw SizeLimitError("neighbor_mask requires at most 64 vertices, got " + std::to_string(n_));
    return rows_[static_cast<std::size_t>(v)];
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, bool dedupe) {
    if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw GraphError("edge " + pair_text(a, b) + " has a vertex outside 0.." + std::to_string(n - 1));
        }
        if (a == b) throw GraphError("edge " + pair_text(a, b) + " is a self-loop");
        if (g.adjacent(a, b)) {
            if (dedupe) continue;
            throw GraphError("edge " + pair_text(a, b) + " appears more than once");
        }
        g.rows_[static_cast<std::size_t>(a) * g.words_ + (static_cast<unsigned>(b) >> 6)] |= std::uint64_t{1} << (b & 63);
        g.rows_[static_cast<std::size_t>(b) * g.words_ + (static_cast<unsigned>(a) >> 6)] |= std::uint64_t{1} << (a & 63);
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
        g.edges_.push_back(EdgeId::canonical(a, b));
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges, bool dedupe) {
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()), dedupe);
}

Graph build_graph(int n, std::span<const EdgeId> edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
    return build_graph(n, pairs);
}

void validate(const Graph& g, const VertexSet& s) {
    if (!s.empty() && s.to_vector().back() >= g.order()) {
        throw GraphError("vertex " + std::to_string(s.to_vector().back()) + " is not in a graph of order " +
                         std::to_string(g.order()));
    }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    validate(g, s);
    std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
    InducedSubgraph out;
    out.original = s.to_vector();
    for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v : s) {
        for (Vertex w : g.neighbors(v)) {
            if (v < w && local[w] >= 0) pairs.emplace_back(local[v], local[w]);
        }
    }
    out.graph = build_graph(static_cast<int>(s.size()), pairs);
    return out;
}

int degree_within(const Graph& g, const VertexSet& s, Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += s.contains(w) ? 1 : 0;
    return d;
}

bool is_odd_induced(const Graph& g, const VertexSet& s) {
    validate(g, s);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return degree_within(g, s, v) % 2 == 1; });
}

bool is_even_induced(const Graph& g, const VertexSet& s) {
    validate(g, s);
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return degree_within(g, s, v) % 2 == 0; });
}

LineGraphResult line_graph(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(static_cast<int>(i));
        incident[edges[i].v].push_back(static_cast<int>(i));
    }
    // Two distinct simple edges share at most one endpoint, so each pair is emitted once.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& list : incident) {
        for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) pairs.emplace_back(list[a], list[b]);
        }
    }
    return LineGraphResult{build_graph(g.edge_count(), pairs), edges};
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
    for (const auto& e : edges) {
        if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v || !g.adjacent(e.u, e.v)) {
            throw GraphError("edge " + pair_text(e.u, e.v) + " is not an edge of the host graph");
        }
    }
    return build_graph(g.order(), edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
    int offset = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& part : parts) {
        for (const auto& e : part.edges()) pairs.emplace_back(e.u + offset, e.v + offset);
        offset += part.order();
    }
    return build_graph(offset, pairs);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
            if (!g.adjacent(a, b)) pairs.emplace_back(a, b);
        }
    }
    return build_graph(g.order(), pairs);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace oddsub
