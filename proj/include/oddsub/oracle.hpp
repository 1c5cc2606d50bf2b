#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oddsub/graph.hpp"

namespace oddsub {

/// Outcome of an exhaustive search.
///
/// When `complete` is false the node budget ran out: `value` and `witness`
/// are only the best lower bound found so far.
struct OracleResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    bool complete = true;
};

struct SearchOptions {
    /// Maximum number of search-tree nodes; unlimited when empty.
    std::optional<std::uint64_t> budget;
    /// Worker threads for the branch-and-bound; 0 means read ODDSUB_THREADS (default 1).
    int threads = 1;
    /// Solve connected components independently and add the results.
    bool split_components = true;
};

/// Largest connected component the branch-and-bound accepts.
inline constexpr int kMaxSearchComponent = 64;

/// Maximum order of an induced subgraph with all degrees odd.
///
/// Exact branch-and-bound over vertices sorted by descending degree (ties by
/// id). Among maximum sets the witness is the one whose membership vector in
/// that order is lexicographically greatest, independent of thread count.
/// Graphs with no odd induced subgraph yield value 0 and an empty witness.
OracleResult fo_exact(const Graph& g, const SearchOptions& options = {});

/// Maximum order of an induced subgraph with all degrees congruent to 1 mod `modulus`.
OracleResult fk_exact(const Graph& g, int modulus, const SearchOptions& options = {});

struct InducedMatching {
    int size = 0;
    std::vector<EdgeId> edges;
};

/// Maximum induced matching (edges pairwise disjoint with no edge of G between them).
InducedMatching max_induced_matching(const Graph& g);

/// Number of workers requested by ODDSUB_THREADS, or 1.
int threads_from_environment();

}  // namespace oddsub
