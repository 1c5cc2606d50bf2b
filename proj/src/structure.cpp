#include "oddsub/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

namespace oddsub {

namespace {

using Words = std::vector<std::uint64_t>;

int count(const Words& s) {
    int c = 0;
    for (auto w : s) c += std::popcount(w);
    return c;
}

int first(const Words& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(s[i]);
    }
    return -1;
}

struct IndependentSetSearch {
    std::vector<Words> adj;
    int best = -1;
    Words best_set;

    void run(Words cand, Words chosen, int size) {
        int remaining = count(cand);
        if (remaining == 0) {
            if (size > best) {
                best = size;
                best_set = std::move(chosen);
            }
            return;
        }
        if (size + remaining <= best) return;
        int v = first(cand);
        const auto word = static_cast<std::size_t>(v) >> 6;
        const auto bit = std::uint64_t{1} << (v & 63);
        cand[word] &= ~bit;
        // Take v: drop its neighbors.
        Words with = cand;
        for (std::size_t i = 0; i < with.size(); ++i) with[i] &= ~adj[v][i];
        Words taken = chosen;
        taken[word] |= bit;
        run(std::move(with), std::move(taken), size + 1);
        // Skipping v only helps if some neighbor of v is still available.
        bool blocked = false;
        for (std::size_t i = 0; i < cand.size() && !blocked; ++i) blocked = (cand[i] & adj[v][i]) != 0;
        if (blocked) run(std::move(cand), std::move(chosen), size);
    }
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
    const auto k = static_cast<std::size_t>(g.order());
    const std::size_t words = (k + 63) / 64;
    IndependentSetSearch search;
    search.adj.assign(k, Words(words, 0));
    for (const auto& e : g.edges()) {
        search.adj[e.u][static_cast<std::size_t>(e.v) >> 6] |= std::uint64_t{1} << (e.v & 63);
        search.adj[e.v][static_cast<std::size_t>(e.u) >> 6] |= std::uint64_t{1} << (e.u & 63);
    }
    Words all(words, 0);
    for (std::size_t j = 0; j < k; ++j) all[j >> 6] |= std::uint64_t{1} << (j & 63);
    search.run(all, Words(words, 0), 0);
    std::vector<Vertex> ids;
    for (std::size_t j = 0; j < k; ++j) {
        if ((search.best_set[j >> 6] >> (j & 63)) & 1U) ids.push_back(static_cast<Vertex>(j));
    }
    return VertexSet(std::move(ids));
}

int max_independent_subset(const Graph& g, const std::vector<Vertex>& candidates) {
    return static_cast<int>(maximum_independent_set(induced_subgraph(g, VertexSet(candidates)).graph).size());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<int> regular_degree(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    int d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge (v,w) closes a cycle of length dist[v]+dist[w]+1,
    // and the minimum over all roots is exact.
    int best = std::numeric_limits<int>::max();
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            if (2 * dist[v] + 1 >= best) break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<std::vector<Vertex>> find_c5_subgraph(const Graph& g) {
    // Cycles are rooted at their smallest vertex; the path s-a-b-c-d must close with d~s.
    std::vector<Vertex> path(5);
    for (Vertex s = 0; s < g.order(); ++s) {
        path[0] = s;
        std::function<bool(int)> extend = [&](int depth) -> bool {
            Vertex last = path[depth - 1];
            for (Vertex w : g.neighbors(last)) {
                if (w <= s || std::find(path.begin() + 1, path.begin() + depth, w) != path.begin() + depth) continue;
                path[depth] = w;
                if (depth == 4) {
                    if (g.adjacent(w, s)) return true;
                } else if (extend(depth + 1)) {
                    return true;
                }
            }
            return false;
        };
        if (extend(1)) return path;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, int r) {
    for (Vertex c = 0; c < g.order(); ++c) {
        auto nb = g.neighbors(c);
        if (static_cast<int>(nb.size()) < r) continue;
        std::vector<Vertex> chosen;
        std::function<bool(std::size_t)> pick = [&](std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == r) return true;
            for (std::size_t i = from; i < nb.size(); ++i) {
                if (static_cast<int>(chosen.size() + (nb.size() - i)) < r) return false;
                bool free = std::none_of(chosen.begin(), chosen.end(), [&](Vertex x) { return g.adjacent(x, nb[i]); });
                if (!free) continue;
                chosen.push_back(nb[i]);
                if (pick(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (pick(0)) {
            chosen.insert(chosen.begin(), c);
            return chosen;
        }
    }
    return std::nullopt;
}

StructureReport classify(const Graph& g) {
    StructureReport r;
    r.is_connected = is_connected(g);
    r.is_bipartite = is_bipartite(g);
    r.regular_degree = regular_degree(g);
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.girth = girth(g);
    int widest_star = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= widest_star) continue;
        std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        widest_star = std::max(widest_star, max_independent_subset(g, nb));
    }
    r.k1r_free_from = std::max(3, widest_star + 1);
    r.claw_free = widest_star < 3;
    r.c5_subgraph_free = !find_c5_subgraph(g).has_value();
    return r;
}

}  // namespace oddsub
