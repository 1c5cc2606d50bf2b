#pragma once

#include <optional>
#include <vector>

#include "oddsub/graph.hpp"

namespace oddsub {

struct StructureReport {
    bool is_connected = false;
    bool is_bipartite = false;
    std::optional<int> regular_degree;
    int min_degree = 0;
    int max_degree = 0;
    /// Absent for forests.
    std::optional<int> girth;
    bool claw_free = false;
    /// Smallest r >= 3 such that G has no induced K_{1,r}.
    int k1r_free_from = 3;
    /// No 5-cycle as a subgraph, induced or not.
    bool c5_subgraph_free = true;
};

StructureReport classify(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::optional<int> regular_degree(const Graph& g);
std::optional<int> girth(const Graph& g);

/// Vertices of some 5-cycle (in cyclic order), if one exists.
std::optional<std::vector<Vertex>> find_c5_subgraph(const Graph& g);

/// Center followed by r pairwise nonadjacent neighbors, if an induced K_{1,r} exists.
std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, int r);

/// A maximum independent set; among maximum sets, the first reached when
/// branching on the lowest remaining vertex with "take" before "skip".
VertexSet maximum_independent_set(const Graph& g);

/// Size of a maximum independent set among `candidates` (exact).
int max_independent_subset(const Graph& g, const std::vector<Vertex>& candidates);

/// 2-colouring per component, lowest vertex of each component on side 0; empty if not bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace oddsub
