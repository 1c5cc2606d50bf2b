#pragma once

#include "oddsub/graph.hpp"

namespace oddsub {

/// Split of V(G) into a part inducing an odd (or empty) subgraph and a part
/// inducing an even (or empty) subgraph.
struct GallaiPartition {
    VertexSet odd_part;
    VertexSet even_part;
};

/// Split of V(G) into two parts that both induce even subgraphs.
struct EvenEvenPartition {
    VertexSet first;
    VertexSet second;
};

/// Solves the odd/even parity system over GF(2). Throws std::logic_error if the
/// system is inconsistent, which cannot happen for a simple graph.
GallaiPartition gallai_partition(const Graph& g);

/// Solves the even/even parity system over GF(2); see gallai_partition.
EvenEvenPartition even_even_partition(const Graph& g);

}  // namespace oddsub
