#pragma once

#include <vector>

#include "oddsub/graph.hpp"

namespace oddsub {

/// Proper colouring with colours 0..k-1, every class nonempty.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    std::vector<std::vector<Vertex>> classes() const;
};

/// Exact chromatic-number search runs up to this order; bipartite graphs of any order are handled directly.
inline constexpr int kMaxExactChromaticOrder = 24;

/// True iff `c` is a proper colouring of `g` satisfying the Coloring invariants.
bool is_valid_coloring(const Graph& g, const Coloring& c);

/// Exact chromatic number with the lexicographically first optimal colouring
/// (vertices in index order, lowest colour first). Throws SizeLimitError above
/// kMaxExactChromaticOrder unless the graph is bipartite.
Coloring chromatic_number(const Graph& g);

}  // namespace oddsub
