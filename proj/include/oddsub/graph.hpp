#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace oddsub {

using Vertex = int;

/// Edge of a simple graph in canonical orientation (u < v).
struct EdgeId {
    Vertex u = 0;
    Vertex v = 0;

    static EdgeId canonical(Vertex a, Vertex b) { return a < b ? EdgeId{a, b} : EdgeId{b, a}; }

    bool shares_endpoint_with(const EdgeId& other) const {
        return u == other.u || u == other.v || v == other.u || v == other.v;
    }

    auto operator<=>(const EdgeId&) const = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts the ids; throws GraphError on duplicates or negative ids.
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

    static VertexSet from_mask(std::uint64_t mask);

    std::span<const Vertex> members() const { return members_; }
    const std::vector<Vertex>& to_vector() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted; adjacency queries go through a dense bit
/// matrix so `adjacent` is O(1) for any order. Instances are immutable
/// once built.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex a, Vertex b) const {
        return (rows_[static_cast<std::size_t>(a) * words_ + (static_cast<unsigned>(b) >> 6)] >> (b & 63)) & 1U;
    }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    /// Edges in lexicographic order; the position of an edge is its id in the line graph.
    const std::vector<EdgeId>& edges() const { return edges_; }
    /// Index of edge {a,b} in `edges()`, or -1.
    int edge_index(Vertex a, Vertex b) const;

    /// Neighborhood as a machine word; requires order() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;

    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, bool dedupe);

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> rows_;
    std::vector<EdgeId> edges_;
};

/// Builds a simple graph. Self-loops and out-of-range ids are rejected; a
/// repeated edge is rejected unless `dedupe` is set.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, bool dedupe = false);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges, bool dedupe = false);
Graph build_graph(int n, std::span<const EdgeId> edges);

/// Throws GraphError unless every member of `s` is a vertex of `g`.
void validate(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the host vertex that became vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Degree of `v` inside G[s].
int degree_within(const Graph& g, const VertexSet& s, Vertex v);

/// True iff `s` is nonempty and every member has odd degree in G[s].
bool is_odd_induced(const Graph& g, const VertexSet& s);

/// True iff every member of `s` has even degree in G[s] (vacuous for the empty set).
bool is_even_induced(const Graph& g, const VertexSet& s);

struct LineGraphResult {
    Graph lg;
    std::vector<EdgeId> edge_of_vertex;
};

/// Line graph; vertex i is the i-th edge of `g` in lexicographic order.
LineGraphResult line_graph(const Graph& g);

/// Spanning subgraph of `g` keeping only `edges`.
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// Blocks are relabelled consecutively in the order given.
Graph disjoint_union(std::span<const Graph> parts);

/// Complement on the same vertex set.
Graph complement(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace oddsub
