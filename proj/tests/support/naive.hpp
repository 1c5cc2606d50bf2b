#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond reading edges out of a Graph, so they can be trusted as test oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "oddsub/graph.hpp"

namespace naive {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix(const oddsub::Graph& g) {
    Matrix m(static_cast<std::size_t>(g.order()), std::vector<char>(static_cast<std::size_t>(g.order()), 0));
    for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
    return m;
}

inline int degree_in(const Matrix& m, int v, std::uint64_t mask) {
    int d = 0;
    for (std::size_t u = 0; u < m.size(); ++u) d += (mask >> u & 1) && m[v][u];
    return d;
}

/// Every vertex of the (nonempty) mask has degree = 1 mod k inside it.
inline bool all_one_mod(const Matrix& m, std::uint64_t mask, int k) {
    if (mask == 0) return false;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if ((mask >> v & 1) && degree_in(m, static_cast<int>(v), mask) % k != 1 % k) return false;
    }
    return true;
}

inline bool all_even(const Matrix& m, std::uint64_t mask) {
    for (std::size_t v = 0; v < m.size(); ++v) {
        if ((mask >> v & 1) && degree_in(m, static_cast<int>(v), mask) % 2 != 0) return false;
    }
    return true;
}

inline int fk(const oddsub::Graph& g, int k) {
    auto m = matrix(g);
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
        int size = std::popcount(mask);
        if (size > best && all_one_mod(m, mask, k)) best = size;
    }
    return best;
}

inline int fo(const oddsub::Graph& g) { return fk(g, 2); }

/// All maximum odd induced vertex sets, as bit masks.
inline std::vector<std::uint64_t> maximum_odd_sets(const oddsub::Graph& g) {
    auto m = matrix(g);
    int best = 0;
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
        int size = std::popcount(mask);
        if (size < best || !all_one_mod(m, mask, 2)) continue;
        if (size > best) {
            best = size;
            out.clear();
        }
        out.push_back(mask);
    }
    return out;
}

inline int induced_matching(const oddsub::Graph& g) {
    const auto& edges = g.edges();
    auto m = matrix(g);
    int best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << edges.size()); ++pick) {
        std::uint64_t verts = 0;
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            if (!(pick >> i & 1)) continue;
            std::uint64_t both = (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
            ok = (verts & both) == 0;
            verts |= both;
        }
        // Induced: every chosen vertex has exactly one chosen neighbour.
        for (std::size_t v = 0; v < m.size() && ok; ++v) {
            if (verts >> v & 1) ok = degree_in(m, static_cast<int>(v), verts) == 1;
        }
        if (ok) best = std::max(best, std::popcount(pick));
    }
    return best;
}

inline int chromatic(const oddsub::Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    auto m = matrix(g);
    for (int k = 1;; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        // Odometer over all k^n assignments.
        for (;;) {
            bool proper = true;
            for (int a = 0; a < n && proper; ++a) {
                for (int b = a + 1; b < n && proper; ++b) proper = !(m[a][b] && c[a] == c[b]);
            }
            if (proper) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

inline bool connected(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (m[v][u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

/// Smallest adjacency string over all n! relabellings; an isomorphism invariant.
inline std::vector<char> brute_canonical(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> best;
    do {
        std::vector<char> s;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) s.push_back(m[p[a]][p[b]]);
        }
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// Number of isomorphism classes of connected regular graphs on n vertices (n <= 6).
inline int connected_regular_classes(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    std::set<std::vector<char>> classes;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
        Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pick >> i & 1) m[pairs[i].first][pairs[i].second] = m[pairs[i].second][pairs[i].first] = 1;
        }
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(std::count(m[v].begin(), m[v].end(), 1));
        if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) continue;
        if (!connected(m)) continue;
        classes.insert(brute_canonical(m));
    }
    return static_cast<int>(classes.size());
}

inline std::uint64_t mask_of(const oddsub::VertexSet& s) {
    std::uint64_t mask = 0;
    for (auto v : s) mask |= std::uint64_t{1} << v;
    return mask;
}

}  // namespace naive
