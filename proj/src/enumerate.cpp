#include "oddsub/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "oddsub/error.hpp"
#include "oddsub/structure.hpp"

namespace oddsub {

namespace {

constexpr int kMaxCanonicalOrder = 32;

// Column b of the relabelled upper triangle: bit (b-1-a) is adjacency of positions a and b.
using Key = std::vector<std::uint32_t>;

bool twins(const Graph& g, Vertex a, Vertex b) {
    for (Vertex x = 0; x < g.order(); ++x) {
        if (x != a && x != b && g.adjacent(a, x) != g.adjacent(b, x)) return false;
    }
    return true;
}

struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<Vertex> perm;
    std::vector<char> used;
    Key cur;
    Key best;
    std::vector<Vertex> best_perm;
    bool have_best = false;

    std::uint32_t column(int b, Vertex w) const {
        std::uint32_t col = 0;
        for (int a = 0; a < b; ++a) col = (col << 1) | (g.adjacent(perm[a], w) ? 1U : 0U);
        return col;
    }

    // `ahead`: the current prefix is already strictly greater than the incumbent's
    // (or there is no incumbent); otherwise the two prefixes are equal.
    void dfs(int b, bool ahead) {
        if (b == n) {
            if (ahead) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        std::uint32_t top = 0;
        for (Vertex w = 0; w < n; ++w) {
            if (!used[w]) top = std::max(top, column(b, w));
        }
        if (!ahead) {
            if (top < best[b]) return;
            if (top > best[b]) ahead = true;
        }
        std::vector<Vertex> tried;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || column(b, w) != top) continue;
            // Swapping twins is an automorphism fixing the prefix, so their subtrees coincide.
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g, t, w); })) continue;
            tried.push_back(w);
            used[w] = 1;
            perm[b] = w;
            cur[b] = top;
            dfs(b + 1, ahead);
            used[w] = 0;
            // A leaf recorded below this prefix makes the incumbent share it.
            if (ahead && have_best && std::equal(cur.begin(), cur.begin() + b + 1, best.begin())) ahead = false;
        }
    }
};

std::pair<Graph, Key> canonical_with_key(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw SizeLimitError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
    }
    CanonicalSearch s{g, n, std::vector<Vertex>(static_cast<std::size_t>(n)), std::vector<char>(static_cast<std::size_t>(n), 0),
                      Key(static_cast<std::size_t>(n), 0), {}, {}, false};
    s.dfs(0, true);
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) position[s.best_perm[a]] = a;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : g.edges()) pairs.emplace_back(position[e.u], position[e.v]);
    return {build_graph(n, pairs), std::move(s.best)};
}

// Row-by-row generator. Before filling row i, the unfinished vertices j > i that agree on
// adjacency to rows 0..i-1 are interchangeable, so within each such class only the
// lowest-indexed members are ever chosen. This keeps at least one labelling of every
// isomorphism class.
struct RegularGenerator {
    int n;
    int k;
    std::vector<std::vector<char>> adj;
    std::vector<int> degree;
    std::map<Key, Graph> found;

    void emit() {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (adj[a][b]) pairs.emplace_back(a, b);
            }
        }
        auto [canon, key] = canonical_with_key(build_graph(n, pairs));
        found.emplace(std::move(key), std::move(canon));
    }

    bool feasible_after(int i) const {
        const int later = n - i - 1;
        for (int j = i + 1; j < n; ++j) {
            if (k - degree[j] > later - 1) return false;
        }
        return true;
    }

    void fill_row(int i) {
        if (i == n) {
            emit();
            return;
        }
        const int need = k - degree[i];
        std::vector<std::vector<Vertex>> classes;
        std::map<std::vector<char>, std::size_t> class_of;
        for (int j = i + 1; j < n; ++j) {
            if (degree[j] >= k) continue;
            std::vector<char> signature(adj[j].begin(), adj[j].begin() + i);
            auto [it, fresh] = class_of.emplace(signature, classes.size());
            if (fresh) classes.emplace_back();
            classes[it->second].push_back(j);
        }
        std::vector<int> take(classes.size(), 0);
        choose(i, 0, need, classes, take);
    }

    void choose(int i, std::size_t c, int need, const std::vector<std::vector<Vertex>>& classes, std::vector<int>& take) {
        if (c == classes.size()) {
            if (need != 0) return;
            std::vector<Vertex> picked;
            for (std::size_t x = 0; x < classes.size(); ++x) {
                for (int t = 0; t < take[x]; ++t) picked.push_back(classes[x][t]);
            }
            for (Vertex j : picked) set_edge(i, j, 1);
            if (feasible_after(i)) fill_row(i + 1);
            for (Vertex j : picked) set_edge(i, j, 0);
            return;
        }
        int room = 0;
        for (std::size_t x = c; x < classes.size(); ++x) room += static_cast<int>(classes[x].size());
        if (room < need) return;
        const int most = std::min(need, static_cast<int>(classes[c].size()));
        for (int t = most; t >= 0; --t) {
            take[c] = t;
            choose(i, c + 1, need - t, classes, take);
        }
        take[c] = 0;
    }

    void set_edge(int a, int b, char on) {
        adj[a][b] = adj[b][a] = on;
        degree[a] += on ? 1 : -1;
        degree[b] += on ? 1 : -1;
    }
};

}  // namespace

Graph canonical_form(const Graph& g) { return canonical_with_key(g).first; }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = std::vector<int>(static_cast<std::size_t>(a.order()));
    auto db = da;
    for (Vertex v = 0; v < a.order(); ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_with_key(a).second == canonical_with_key(b).second;
}

std::vector<Graph> enumerate_regular(int n, int k) {
    if (n > kMaxEnumerationOrder) {
        throw SizeLimitError("regular-graph enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
    }
    if (n < 1 || k < 0 || k >= n || (n * k) % 2 != 0) return {};
    // Sparse side is cheaper to generate; the dense side is its complement.
    if (k > (n - 1) / 2) {
        std::map<Key, Graph> dense;
        for (const auto& sparse : enumerate_regular(n, n - 1 - k)) {
            auto [canon, key] = canonical_with_key(complement(sparse));
            dense.emplace(std::move(key), std::move(canon));
        }
        std::vector<Graph> out;
        for (auto it = dense.rbegin(); it != dense.rend(); ++it) out.push_back(it->second);
        return out;
    }
    RegularGenerator gen{n, k, std::vector<std::vector<char>>(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)),
                         std::vector<int>(static_cast<std::size_t>(n), 0), {}};
    gen.fill_row(0);
    std::vector<Graph> out;
    for (auto it = gen.found.rbegin(); it != gen.found.rend(); ++it) out.push_back(it->second);
    return out;
}

std::vector<Graph> enumerate_connected_regular(int n) {
    if (n > kMaxEnumerationOrder) {
        throw SizeLimitError("regular-graph enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
    }
    std::vector<Graph> out;
    for (int k = 0; k < n; ++k) {
        for (auto& g : enumerate_regular(n, k)) {
            if (is_connected(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace oddsub
