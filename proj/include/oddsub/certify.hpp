#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddsub/coloring.hpp"
#include "oddsub/error.hpp"
#include "oddsub/graph.hpp"
#include "oddsub/rational.hpp"

namespace oddsub {

enum class CertificateTarget {
    Graph,      // witness ids are vertices of G
    LineGraph,  // witness ids are vertices of L(G), i.e. edge ids of G
};

/// An odd induced vertex set together with the lower bound it is claimed to meet.
struct Certificate {
    VertexSet witness;
    CertificateTarget target = CertificateTarget::Graph;
    Rational bound;
    std::string theorem_tag;
    std::vector<std::string> trace;

    int size() const { return static_cast<int>(witness.size()); }
    bool meets_bound() const { return Rational(size()) >= bound; }
};

/// Re-checks a certificate against the graph it was produced for: the witness must
/// induce an odd subgraph of G (or of L(G)) and meet the recorded bound.
bool verify_certificate(const Graph& g, const Certificate& cert);

/// A construction could not reach the bound it is supposed to guarantee.
class BoundNotAchieved : public Error {
public:
    BoundNotAchieved(const std::string& what, VertexSet best, Rational required)
        : Error(what), best_(std::move(best)), required_(required) {}

    const VertexSet& best() const { return best_; }
    Rational required() const { return required_; }

private:
    VertexSet best_;
    Rational required_;
};

enum class FactorKind { TwoFactor, TwoThreeFactor };

struct FactorComponent {
    VertexSet vertices;
    int degree = 0;  // every vertex of the component has this degree in the factor
};

/// Spanning subgraph given by an edge subset, split into regular components.
struct Factor {
    std::vector<EdgeId> edges;
    std::vector<FactorComponent> components;
    FactorKind kind = FactorKind::TwoFactor;
};

/// Checks spanning, per-component regularity and the degree range of `kind`.
bool is_valid_factor(const Graph& g, const Factor& f, std::string* why = nullptr);

/// Edge budget for the [2,3]-factor search.
inline constexpr int kMaxFactorSearchEdges = 64;
/// Order limit for the exhaustive bipartite-subgraph fallback.
inline constexpr int kMaxBipartiteSearchOrder = 22;

/// Endpoints of every third edge of C_l (edges v_{3i} v_{3i+1}); size 2*floor(l/3).
Certificate odd_cert_cycle(int length);

/// Edge v_1 v_2, skip v_3, recurse on v_4..v_t; size >= t/2.
Certificate odd_cert_path(int order);

/// Induced bipartite subgraph without isolated vertices on at least 2n/k vertices,
/// k the number of colours. Tries colour-class pairs with a repair step, then an
/// exhaustive search for n <= kMaxBipartiteSearchOrder; throws BoundNotAchieved
/// carrying the best set otherwise.
VertexSet bipartite_subgraph_cert(const Graph& g, const Coloring& coloring);

/// Odd induced subgraph of a claw-free graph without isolated vertices on at least
/// n/k vertices. The colouring is computed exactly when absent.
Certificate clawfree_cert(const Graph& g, const std::optional<Coloring>& coloring = std::nullopt);

/// 2-factor of a connected 2r-regular graph via an Euler-tour orientation and a
/// perfect matching of the out/in split.
Factor petersen_two_factor(const Graph& g);

/// Spanning [2,3]-factor with regular components of a connected odd-regular graph.
/// Cubic graphs are returned whole; otherwise all-cycle factors are searched first.
Factor factor_23(const Graph& g);

/// Odd induced subgraph of L(G) on at least n/2 vertices for a connected k-regular
/// C5-free G (k >= 2). Witness ids are edge ids of G.
Certificate linegraph_cert(const Graph& g);

/// As linegraph_cert for d-regular G with d >= 4 where 5-cycles are allowed; the
/// bound is n/2 - c/2 with c the number of C5 components of the factor, and the
/// witness is also checked against 2n/5.
Certificate linegraph_cert_extended(const Graph& g);

/// Disjoint union kF + lC4 of order n, with the data showing it violates n/chi.
struct CounterexampleRecord {
    Graph graph;
    int k = 0;
    int ell = 0;
    int chromatic = 0;
    bool star_free = false;  // no induced K_{1,r}
    int fo_additive = 0;     // 4k + 2l
    int fo_componentwise = 0;
    // Monolithic exact search on the largest sub-union of at most 26 vertices.
    int sub_block_order = 0;
    int sub_block_additive = 0;
    int sub_block_exact = 0;

    bool violates() const { return 2 * fo_additive < graph.order(); }
};

/// Picks (k, l) from n mod 4 so that n = 9k + 4l with k in 1..4.
CounterexampleRecord counterexample_for_order(int n, int r);

/// Induced bipartite subgraph, without isolated vertices and of girth >= 6, on at
/// least 2n/3 vertices of a girth-5 graph the caller asserts to be planar.
VertexSet planar_reduction(const Graph& g, bool planar_asserted, const std::optional<Coloring>& coloring = std::nullopt);

}  // namespace oddsub
