#include "oddsub/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "oddsub/error.hpp"
#include "oddsub/structure.hpp"

namespace oddsub {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Bits 0..count-1.
constexpr Mask low_bits(int count) { return count >= 64 ? ~Mask{0} : bit(count) - 1; }

// Vertices of one search instance, renumbered so that position == branching order.
struct Instance {
    int n = 0;
    std::vector<Mask> adj;
    std::vector<Vertex> original;
};

Instance make_instance(const Graph& g, std::vector<Vertex> vertices) {
    if (static_cast<int>(vertices.size()) > kMaxSearchComponent) {
        throw SizeLimitError("connected component of order " + std::to_string(vertices.size()) +
                             " exceeds the exact-search limit of " + std::to_string(kMaxSearchComponent));
    }
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    Instance inst;
    inst.n = static_cast<int>(vertices.size());
    inst.adj.assign(vertices.size(), 0);
    for (int i = 0; i < inst.n; ++i) {
        for (int j = 0; j < inst.n; ++j) {
            if (g.adjacent(vertices[i], vertices[j])) inst.adj[i] |= bit(j);
        }
    }
    inst.original = std::move(vertices);
    return inst;
}

// Degree rule: a kept vertex must finish with degree ≡ 1 (mod modulus).
struct ParityRule {
    static bool reachable(int current, int available, int /*modulus*/) { return (current & 1) != 0 || available > 0; }
    static bool even_order(int /*modulus*/) { return true; }
};

struct ModularRule {
    static bool reachable(int current, int available, int modulus) {
        int step = ((1 - current) % modulus + modulus) % modulus;
        return step <= available;
    }
    // Degrees ≡ 1 mod an even modulus are odd, so the handshake lemma forces |S| even.
    static bool even_order(int modulus) { return modulus % 2 == 0; }
};

struct Shared {
    std::atomic<int> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t limit = 0;
    bool limited = false;
    std::atomic<bool> exhausted{false};
};

template <class Rule>
class Searcher {
public:
    Searcher(const Instance& inst, int modulus, Shared& shared)
        : inst_(inst), modulus_(modulus), shared_(shared),
          full_(low_bits(inst.n)) {}

    int best() const { return best_; }
    Mask best_mask() const { return best_mask_; }

    // Include-first DFS. Sets are recorded only at leaves; recording earlier would let a
    // later, lexicographically greater set of equal size lose the tie.
    void dfs(int pos, Mask in) {
        if (shared_.exhausted.load(std::memory_order_relaxed)) return;
        auto visited = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.limited && visited > shared_.limit) {
            shared_.exhausted.store(true, std::memory_order_relaxed);
            return;
        }
        Mask cand = 0;
        if (!admissible(pos, in, cand)) return;
        if (cand == 0) {
            int size = std::popcount(in);
            if (size > best_) {
                best_ = size;
                best_mask_ = in;
                raise_shared(size);
            }
            return;
        }
        int v = std::countr_zero(cand);
        dfs(v + 1, in | bit(v));
        dfs(v + 1, in);
    }

    // Candidate set and prune tests for the node (pos, in); shared with the task splitter.
    bool admissible(int pos, Mask in, Mask& cand) const {
        const Mask undecided = full_ & ~low_bits(pos) & ~in;
        const Mask alive = in | undecided;
        // An undecided vertex with no neighbour among kept or undecided vertices can only
        // end with degree 0, which is never ≡ 1; it is out of every completion.
        cand = 0;
        for (Mask rest = undecided; rest != 0; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            if ((inst_.adj[u] & alive) != 0) cand |= bit(u);
        }
        // A kept vertex's final degree lies in [current, current + candidate neighbours];
        // if no value there is ≡ 1 the subtree holds no valid set.
        for (Mask rest = in; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int current = std::popcount(inst_.adj[v] & in);
            int available = std::popcount(inst_.adj[v] & cand);
            if (!Rule::reachable(current, available, modulus_)) return false;
        }
        // Upper bound: every candidate joins. Ties with the local incumbent are pruned
        // (they come later in branching order); ties with other workers are not.
        int bound = std::popcount(in) + std::popcount(cand);
        if (Rule::even_order(modulus_)) bound &= ~1;
        if (bound <= best_) return false;
        if (bound < shared_.best.load(std::memory_order_relaxed)) return false;
        return true;
    }

private:
    void raise_shared(int size) {
        int seen = shared_.best.load(std::memory_order_relaxed);
        while (size > seen && !shared_.best.compare_exchange_weak(seen, size, std::memory_order_relaxed)) {
        }
    }

    const Instance& inst_;
    int modulus_;
    Shared& shared_;
    Mask full_;
    int best_ = 0;
    Mask best_mask_ = 0;
};

struct Task {
    int pos;
    Mask in;
};

// Expands the top of the tree in branching order until there is enough work to spread.
template <class Rule>
std::vector<Task> split_tasks(const Instance& inst, int modulus, Shared& shared, std::size_t wanted) {
    Searcher<Rule> probe(inst, modulus, shared);
    std::vector<Task> frontier{{0, 0}};
    for (int depth = 0; depth < inst.n && frontier.size() < wanted; ++depth) {
        std::vector<Task> next;
        bool grew = false;
        for (const auto& t : frontier) {
            Mask cand = 0;
            if (!probe.admissible(t.pos, t.in, cand)) continue;
            if (cand == 0) {
                next.push_back(t);
                continue;
            }
            int v = std::countr_zero(cand);
            next.push_back({v + 1, t.in | bit(v)});
            next.push_back({v + 1, t.in});
            grew = true;
        }
        frontier = std::move(next);
        if (!grew) break;
    }
    return frontier;
}

struct Solved {
    int value = 0;
    Mask mask = 0;
};

template <class Rule>
Solved solve_instance(const Instance& inst, int modulus, Shared& shared, int threads) {
    if (threads <= 1 || inst.n < 16) {
        Searcher<Rule> s(inst, modulus, shared);
        s.dfs(0, 0);
        return {s.best(), s.best_mask()};
    }
    auto tasks = split_tasks<Rule>(inst, modulus, shared, static_cast<std::size_t>(threads) * 8);
    std::vector<Solved> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            Searcher<Rule> s(inst, modulus, shared);
            s.dfs(tasks[i].pos, tasks[i].in);
            results[i] = {s.best(), s.best_mask()};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    // Tasks are in branching order, so the first task reaching the optimum holds the
    // same witness a single worker would return.
    Solved best;
    for (const auto& r : results) {
        if (r.value > best.value) best = r;
    }
    return best;
}

template <class Rule>
OracleResult solve(const Graph& g, int modulus, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const int threads = options.threads > 0 ? options.threads : threads_from_environment();
    std::vector<std::vector<Vertex>> groups;
    if (options.split_components) {
        groups = connected_components(g);
    } else if (g.order() > 0) {
        groups.emplace_back(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) groups.back()[v] = v;
    }
    Shared shared;
    shared.limited = options.budget.has_value();
    shared.limit = options.budget.value_or(0);
    OracleResult result;
    std::vector<Vertex> witness;
    for (auto& group : groups) {
        if (group.size() < 2) continue;
        auto inst = make_instance(g, std::move(group));
        // Components are independent; each gets a fresh incumbent.
        shared.best.store(0);
        auto solved = solve_instance<Rule>(inst, modulus, shared, threads);
        result.value += solved.value;
        for (Mask m = solved.mask; m != 0; m &= m - 1) witness.push_back(inst.original[std::countr_zero(m)]);
    }
    result.witness = VertexSet(std::move(witness));
    result.nodes_explored = std::min(shared.nodes.load(), shared.limited ? shared.limit : ~std::uint64_t{0});
    result.complete = !shared.exhausted.load();
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace

int threads_from_environment() {
    if (const char* env = std::getenv("ODDSUB_THREADS")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    return 1;
}

OracleResult fo_exact(const Graph& g, const SearchOptions& options) {
    return solve<ParityRule>(g, 2, options);
}

OracleResult fk_exact(const Graph& g, int modulus, const SearchOptions& options) {
    if (modulus < 2) throw PreconditionError("modulus must be at least 2, got " + std::to_string(modulus));
    return solve<ModularRule>(g, modulus, options);
}

InducedMatching max_induced_matching(const Graph& g) {
    const auto& edges = g.edges();
    // Two edges conflict when they share an endpoint or an edge of G joins them.
    std::vector<std::pair<Vertex, Vertex>> conflicts;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& a = edges[i];
            const auto& b = edges[j];
            bool clash = a.shares_endpoint_with(b) || g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) ||
                         g.adjacent(a.v, b.u) || g.adjacent(a.v, b.v);
            if (clash) conflicts.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    auto chosen = maximum_independent_set(build_graph(g.edge_count(), conflicts));
    InducedMatching out;
    out.size = static_cast<int>(chosen.size());
    for (Vertex i : chosen) out.edges.push_back(edges[i]);
    return out;
}

}  // namespace oddsub
