#include "oddsub/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "oddsub/error.hpp"
#include "oddsub/structure.hpp"

namespace oddsub {

std::vector<std::vector<Vertex>> Coloring::classes() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < colors.size(); ++v) out[colors[v]].push_back(static_cast<Vertex>(v));
    return out;
}

bool is_valid_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    std::vector<int> used(static_cast<std::size_t>(std::max(c.k, 0)), 0);
    for (int col : c.colors) {
        if (col < 0 || col >= c.k) return false;
        used[col] = 1;
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const EdgeId& e) { return c.colors[e.u] == c.colors[e.v]; });
}

namespace {

struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;
    // forbid_count[v][c]: number of coloured neighbours of v holding colour c.
    std::vector<std::vector<int>> forbid_count;

    bool assign(Vertex v, int used) {
        if (v == g.order()) return true;
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if (forbid_count[v][c] > 0) continue;
            color[v] = c;
            bool dead = false;
            for (Vertex w : g.neighbors(v)) {
                if (w > v && forbid_count[w][c]++ == 0) {
                    dead = dead || std::all_of(forbid_count[w].begin(), forbid_count[w].end(), [](int x) { return x > 0; });
                }
            }
            if (!dead && assign(v + 1, std::max(used, c + 1))) return true;
            for (Vertex w : g.neighbors(v)) {
                if (w > v) --forbid_count[w][c];
            }
        }
        color[v] = -1;
        return false;
    }
};

}  // namespace

Coloring chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return Coloring{{}, 0};
    if (g.edge_count() == 0) return Coloring{std::vector<int>(static_cast<std::size_t>(n), 0), 1};
    if (auto sides = bipartition(g)) return Coloring{*sides, 2};
    if (n > kMaxExactChromaticOrder) {
        throw SizeLimitError("graph of order " + std::to_string(n) + " is too large for exact chromatic number (limit " +
                             std::to_string(kMaxExactChromaticOrder) + "); supply a colouring instead");
    }
    for (int k = 3;; ++k) {
        KColorSearch s{g, k, std::vector<int>(static_cast<std::size_t>(n), -1),
                       std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0))};
        if (s.assign(0, 0)) return Coloring{s.color, k};
    }
}

}  // namespace oddsub
