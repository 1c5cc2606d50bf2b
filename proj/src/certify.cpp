#include "oddsub/certify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "oddsub/families.hpp"
#include "oddsub/oracle.hpp"
#include "oddsub/structure.hpp"

namespace oddsub {

namespace {

std::string join(const std::vector<Vertex>& ids) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < ids.size(); ++i) ss << (i ? " " : "") << ids[i];
    return ss.str();
}

std::vector<Vertex> cycle_certificate_positions(int length) {
    std::vector<Vertex> pos;
    for (int i = 0; i < length / 3; ++i) {
        pos.push_back(3 * i);
        pos.push_back(3 * i + 1);
    }
    return pos;
}

std::vector<Vertex> path_certificate_positions(int order) {
    std::vector<Vertex> pos;
    int offset = 0;
    for (int t = order; t >= 2; t -= 3) {
        pos.push_back(offset);
        pos.push_back(offset + 1);
        if (t <= 4) break;
        offset += 3;
    }
    return pos;
}

// Walks a connected graph of maximum degree 2 with at least two vertices. Paths start at
// their smaller end; cycles start at their smallest vertex towards its smaller neighbour.
std::pair<std::vector<Vertex>, bool> walk_path_or_cycle(const Graph& h, const std::vector<Vertex>& comp) {
    Vertex start = comp.front();
    bool cycle = true;
    for (Vertex v : comp) {
        if (h.degree(v) == 1) {
            start = v;
            cycle = false;
            break;
        }
    }
    std::vector<Vertex> order{start};
    Vertex prev = -1;
    Vertex cur = start;
    for (;;) {
        Vertex next = -1;
        for (Vertex w : h.neighbors(cur)) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (next < 0 || next == start) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return {order, cycle};
}

void require_valid_coloring(const Graph& g, const Coloring& c) {
    if (!is_valid_coloring(g, c)) throw PreconditionError("supplied colouring is not a proper colouring with nonempty classes");
}

void require_no_isolated(const Graph& g, const char* what) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) + " is isolated");
    }
}

bool has_isolated(const Graph& g, const std::vector<char>& in) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in[v]) continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return true;
    }
    return false;
}

bool induces_bipartite(const Graph& g, const std::vector<char>& in) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (!in[s] || side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (!in[w]) continue;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

VertexSet to_set(const std::vector<char>& in) {
    std::vector<Vertex> ids;
    for (std::size_t v = 0; v < in.size(); ++v) {
        if (in[v]) ids.push_back(static_cast<Vertex>(v));
    }
    return VertexSet(std::move(ids));
}

// Moves each vertex to the lowest colour class it has no neighbour in, until stable.
// The colouring stays proper; afterwards every vertex of class i sees all classes j < i.
Coloring lower_colouring(const Graph& g, Coloring c) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            for (int j = 0; j < c.colors[v]; ++j) {
                auto nb = g.neighbors(v);
                if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return c.colors[w] == j; })) {
                    c.colors[v] = j;
                    moved = true;
                    break;
                }
            }
        }
    }
    std::vector<int> remap(static_cast<std::size_t>(c.k), -1);
    int next = 0;
    for (int& col : c.colors) {
        if (remap[col] < 0) remap[col] = next++;
        col = remap[col];
    }
    c.k = next;
    return c;
}

// Drops isolated members (lowest id first), then grows the set by any outside vertex that
// has a neighbour inside and keeps it bipartite, in ascending id, until nothing changes.
void repair(const Graph& g, std::vector<char>& in) {
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!in[v]) continue;
            auto nb = g.neighbors(v);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) {
                in[v] = 0;
                changed = true;
                break;
            }
        }
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (in[v]) continue;
            auto nb = g.neighbors(v);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) continue;
            in[v] = 1;
            if (induces_bipartite(g, in)) {
                grew = true;
            } else {
                in[v] = 0;
            }
        }
    }
}

// Largest induced bipartite subgraph without isolated vertices; include-first DFS.
std::vector<char> exhaustive_bipartite(const Graph& g, int at_least) {
    const int n = g.order();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<char> best;
    int best_size = at_least - 1;
    std::function<void(int, int)> dfs = [&](int v, int size) {
        if (size + (n - v) <= best_size) return;
        if (v == n) {
            if (!has_isolated(g, in)) {
                best = in;
                best_size = size;
            }
            return;
        }
        in[v] = 1;
        if (induces_bipartite(g, in)) dfs(v + 1, size + 1);
        in[v] = 0;
        dfs(v + 1, size);
    };
    dfs(0, 0);
    return best;
}

Certificate line_certificate_for_factor(const Graph& g, const Factor& factor, const std::string& tag, bool allow_c5,
                                        int& c5_components) {
    Certificate cert;
    cert.target = CertificateTarget::LineGraph;
    cert.theorem_tag = tag;
    cert.trace.push_back(std::string(factor.kind == FactorKind::TwoFactor ? "2-factor" : "[2,3]-factor") + " with " +
                         std::to_string(factor.components.size()) + " component(s)");
    Graph h = build_graph(g.order(), factor.edges);
    std::vector<Vertex> witness;
    c5_components = 0;
    for (const auto& comp : factor.components) {
        std::vector<Vertex> members = comp.vertices.to_vector();
        if (comp.degree == 2) {
            auto [order, is_cycle] = walk_path_or_cycle(h, members);
            if (!is_cycle) throw std::logic_error("2-regular factor component is not a cycle");
            const int len = static_cast<int>(order.size());
            if (len == 5) {
                if (!allow_c5) throw std::logic_error("factor of a C5-free graph has a 5-cycle");
                ++c5_components;
            }
            // Edge i of the cycle joins order[i] and order[i+1]; consecutive edges are adjacent in L.
            for (Vertex p : cycle_certificate_positions(len)) {
                witness.push_back(g.edge_index(order[p], order[(p + 1) % len]));
            }
            cert.trace.push_back("cycle of length " + std::to_string(len) + " on [" + join(order) + "]: every third edge, " +
                                 std::to_string(2 * (len / 3)) + " line-graph vertices");
            continue;
        }
        // Cubic component: exact search on its line graph.
        auto local = induced_subgraph(h, comp.vertices);
        auto lg = line_graph(local.graph);
        auto result = fo_exact(lg.lg);
        if (!result.complete) throw std::logic_error("cubic component search incomplete");
        const Rational half(static_cast<std::int64_t>(members.size()), 2);
        if (Rational(result.value) < half) {
            throw BoundNotAchieved("cubic component on [" + join(members) + "] has f_o(L) = " + std::to_string(result.value) +
                                       " < " + half.to_string(),
                                   VertexSet(witness), half);
        }
        for (Vertex lv : result.witness) {
            const auto& e = lg.edge_of_vertex[lv];
            witness.push_back(g.edge_index(local.original[e.u], local.original[e.v]));
        }
        cert.trace.push_back("cubic component on [" + join(members) + "]: exact f_o of its line graph = " +
                             std::to_string(result.value));
    }
    cert.witness = VertexSet(std::move(witness));
    return cert;
}

void check_certificate(const Graph& g, const Certificate& cert) {
    if (!verify_certificate(g, cert)) {
        throw std::logic_error(cert.theorem_tag + ": produced witness of size " + std::to_string(cert.size()) +
                               " fails verification against bound " + cert.bound.to_string());
    }
}

}  // namespace

bool verify_certificate(const Graph& g, const Certificate& cert) {
    const bool on_line_graph = cert.target == CertificateTarget::LineGraph;
    const Graph target = on_line_graph ? line_graph(g).lg : g;
    if (!cert.witness.empty() && cert.witness.to_vector().back() >= target.order()) return false;
    return is_odd_induced(target, cert.witness) && cert.meets_bound();
}

Certificate odd_cert_cycle(int length) {
    if (length < 3) throw PreconditionError("cycle length must be at least 3, got " + std::to_string(length));
    Certificate cert;
    cert.witness = VertexSet(cycle_certificate_positions(length));
    cert.bound = length == 5 ? Rational(2) : Rational(length, 2);
    cert.theorem_tag = "cycle";
    cert.trace.push_back("C_" + std::to_string(length) + ": endpoints of edges v_{3i} v_{3i+1}, i < " + std::to_string(length / 3));
    return cert;
}

Certificate odd_cert_path(int order) {
    if (order < 2) throw PreconditionError("path order must be at least 2, got " + std::to_string(order));
    Certificate cert;
    cert.witness = VertexSet(path_certificate_positions(order));
    cert.bound = Rational(order, 2);
    cert.theorem_tag = "path";
    cert.trace.push_back("P_" + std::to_string(order) + ": take an edge, skip a vertex, repeat; " +
                         std::to_string(cert.size()) + " vertices");
    return cert;
}

VertexSet bipartite_subgraph_cert(const Graph& g, const Coloring& coloring) {
    require_valid_coloring(g, coloring);
    if (coloring.k < 2) throw PreconditionError("bipartite subgraph: colouring must use at least 2 colours");
    require_no_isolated(g, "bipartite subgraph");
    const int n = g.order();
    const Rational target(2 * static_cast<std::int64_t>(n), coloring.k);
    const auto lowered = lower_colouring(g, coloring);
    const auto classes = lowered.classes();
    std::vector<char> best(static_cast<std::size_t>(n), 0);
    int best_size = -1;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            std::vector<char> in(static_cast<std::size_t>(n), 0);
            for (Vertex v : classes[i]) in[v] = 1;
            for (Vertex v : classes[j]) in[v] = 1;
            repair(g, in);
            int size = static_cast<int>(std::count(in.begin(), in.end(), 1));
            if (size > best_size) {
                best_size = size;
                best = in;
            }
        }
    }
    if (Rational(best_size) >= target) return to_set(best);
    if (n > kMaxBipartiteSearchOrder) {
        throw BoundNotAchieved("bipartite subgraph: colour-pair repair reached " + std::to_string(best_size) + " < " +
                                   target.to_string() + " and the graph is too large for exhaustive search",
                               to_set(best), target);
    }
    auto exact = exhaustive_bipartite(g, best_size + 1);
    if (!exact.empty()) {
        best = exact;
        best_size = static_cast<int>(std::count(exact.begin(), exact.end(), 1));
    }
    if (Rational(best_size) >= target) return to_set(best);
    throw BoundNotAchieved("bipartite subgraph: largest set has " + std::to_string(best_size) + " < " + target.to_string() +
                               " vertices",
                           to_set(best), target);
}

Certificate clawfree_cert(const Graph& g, const std::optional<Coloring>& coloring) {
    if (auto claw = find_induced_star(g, 3)) {
        throw PreconditionError("graph is not claw-free: induced K_{1,3} at center " + std::to_string((*claw)[0]) +
                                " with leaves " + join({(*claw)[1], (*claw)[2], (*claw)[3]}));
    }
    require_no_isolated(g, "claw-free certificate");
    if (g.order() == 0) throw PreconditionError("claw-free certificate: empty graph");
    Coloring col = coloring ? *coloring : chromatic_number(g);
    if (coloring) require_valid_coloring(g, col);

    auto h_set = bipartite_subgraph_cert(g, col);
    auto h = induced_subgraph(g, h_set);
    if (h.graph.max_degree() > 2) {
        throw std::logic_error("claw-free certificate: bipartite part has a vertex of degree " +
                               std::to_string(h.graph.max_degree()) + " (an induced claw)");
    }
    Certificate cert;
    cert.target = CertificateTarget::Graph;
    cert.theorem_tag = "clawfree";
    cert.bound = Rational(g.order(), col.k);
    cert.trace.push_back("colouring with " + std::to_string(col.k) + " colours");
    cert.trace.push_back("induced bipartite subgraph on " + std::to_string(h_set.size()) + " vertices, max degree " +
                         std::to_string(h.graph.max_degree()));
    std::vector<Vertex> witness;
    for (const auto& comp : connected_components(h.graph)) {
        auto [order, is_cycle] = walk_path_or_cycle(h.graph, comp);
        const int len = static_cast<int>(order.size());
        auto positions = is_cycle ? cycle_certificate_positions(len) : path_certificate_positions(len);
        std::vector<Vertex> host;
        for (Vertex v : order) host.push_back(h.original[v]);
        for (Vertex p : positions) witness.push_back(host[p]);
        cert.trace.push_back(std::string(is_cycle ? "cycle C_" : "path P_") + std::to_string(len) + " on [" + join(host) +
                             "]: " + std::to_string(positions.size()) + " vertices");
    }
    cert.witness = VertexSet(std::move(witness));
    check_certificate(g, cert);
    return cert;
}

Certificate linegraph_cert(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw PreconditionError("line-graph certificate: graph is not connected");
    auto k = regular_degree(g);
    if (!k) throw PreconditionError("line-graph certificate: graph is not regular");
    if (*k < 2) throw PreconditionError("line-graph certificate: degree " + std::to_string(*k) + " < 2");
    if (auto c5 = find_c5_subgraph(g)) {
        throw PreconditionError("line-graph certificate: contains C_5 subgraph at vertices " + join(*c5));
    }
    Factor factor = *k % 2 == 0 ? petersen_two_factor(g) : factor_23(g);
    int c5 = 0;
    Certificate cert = line_certificate_for_factor(g, factor, "linegraph", false, c5);
    cert.bound = Rational(g.order(), 2);
    cert.trace.insert(cert.trace.begin(), std::to_string(*k) + "-regular, C5-free, n = " + std::to_string(g.order()));
    check_certificate(g, cert);
    return cert;
}

Certificate linegraph_cert_extended(const Graph& g) {
    auto d = regular_degree(g);
    if (!d) throw PreconditionError("extended line-graph certificate: graph is not regular");
    if (*d < 4) throw PreconditionError("extended line-graph certificate: degree " + std::to_string(*d) + " < 4");
    Certificate cert;
    cert.target = CertificateTarget::LineGraph;
    cert.theorem_tag = "linegraph-ext";
    cert.trace.push_back(std::to_string(*d) + "-regular, n = " + std::to_string(g.order()));
    std::vector<Vertex> witness;
    int c5_total = 0;
    // Each connected component is d-regular; factor it separately and map edge ids back.
    for (const auto& comp : connected_components(g)) {
        auto part = induced_subgraph(g, VertexSet(comp));
        Factor factor = *d % 2 == 0 ? petersen_two_factor(part.graph) : factor_23(part.graph);
        int c5 = 0;
        auto sub = line_certificate_for_factor(part.graph, factor, cert.theorem_tag, true, c5);
        c5_total += c5;
        for (Vertex lv : sub.witness) {
            const auto& e = part.graph.edges()[lv];
            witness.push_back(g.edge_index(part.original[e.u], part.original[e.v]));
        }
        for (auto& line : sub.trace) cert.trace.push_back("component [" + join(comp) + "]: " + line);
    }
    cert.witness = VertexSet(std::move(witness));
    cert.bound = Rational(g.order() - c5_total, 2);
    cert.trace.push_back(std::to_string(c5_total) + " C5 component(s); bound n/2 - c/2 = " + cert.bound.to_string());
    const Rational floor(2 * static_cast<std::int64_t>(g.order()), 5);
    if (Rational(cert.size()) < cert.bound || Rational(cert.size()) < floor) {
        throw BoundNotAchieved("extended line-graph certificate: witness of size " + std::to_string(cert.size()) +
                                   " misses bound " + cert.bound.to_string() + " or 2n/5 = " + floor.to_string(),
                               cert.witness, std::max(cert.bound, floor));
    }
    check_certificate(g, cert);
    return cert;
}

CounterexampleRecord counterexample_for_order(int n, int r) {
    if (n < 33) throw PreconditionError("counterexample order must be at least 33, got " + std::to_string(n));
    if (r < 4) throw PreconditionError("star size must be at least 4, got " + std::to_string(r));
    // n = 9k + 4l with k ≡ n (mod 4), k in 1..4.
    static constexpr int kByResidue[4] = {4, 1, 2, 3};
    CounterexampleRecord rec;
    rec.k = kByResidue[n % 4];
    rec.ell = (n - 9 * rec.k) / 4;
    rec.graph = gkl_graph(rec.k, rec.ell);
    rec.chromatic = chromatic_number(rec.graph).k;
    rec.star_free = classify(rec.graph).k1r_free_from <= r;
    rec.fo_additive = 4 * rec.k + 2 * rec.ell;
    rec.fo_componentwise = fo_exact(rec.graph).value;
    const int sub_k = std::min(rec.k, 2);
    const int sub_ell = std::min(rec.ell, (26 - 9 * sub_k) / 4);
    Graph sub = gkl_graph(sub_k, sub_ell);
    rec.sub_block_order = sub.order();
    rec.sub_block_additive = 4 * sub_k + 2 * sub_ell;
    rec.sub_block_exact = fo_exact(sub, SearchOptions{.budget = std::nullopt, .threads = 1, .split_components = false}).value;
    return rec;
}

VertexSet planar_reduction(const Graph& g, bool planar_asserted, const std::optional<Coloring>& coloring) {
    if (!planar_asserted) throw PreconditionError("planar reduction: planarity was not asserted");
    if (auto gi = girth(g); gi && *gi < 5) {
        throw PreconditionError("planar reduction: girth " + std::to_string(*gi) + " < 5");
    }
    require_no_isolated(g, "planar reduction");
    Coloring col = coloring ? *coloring : chromatic_number(g);
    if (coloring) require_valid_coloring(g, col);
    if (col.k > 3) throw PreconditionError("planar reduction: colouring uses " + std::to_string(col.k) + " > 3 colours");
    if (col.k <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
        return VertexSet(std::move(all));
    }
    auto h_set = bipartite_subgraph_cert(g, col);
    auto h = induced_subgraph(g, h_set);
    auto hg = girth(h.graph);
    if (!is_bipartite(h.graph) || h.graph.min_degree() < 1 || (hg && *hg < 6)) {
        throw std::logic_error("planar reduction: bipartite part violates its guarantees");
    }
    return h_set;
}

}  // namespace oddsub
