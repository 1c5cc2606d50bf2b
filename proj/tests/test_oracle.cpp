#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "naive.hpp"
#include "oddsub/enumerate.hpp"
#include "oddsub/error.hpp"
#include "oddsub/families.hpp"
#include "oddsub/gf2.hpp"
#include "oddsub/oracle.hpp"
#include "oddsub/partition.hpp"
#include "oddsub/structure.hpp"

using namespace oddsub;

namespace {

Graph seeded_graph(std::uint64_t seed, int max_order) {
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order));
    int pairs = n * (n - 1) / 2;
    int m = pairs == 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(pairs + 1));
    return random_gnm_graph(n, m, rng());
}

}  // namespace

TEST_CASE("fo_exact examples") {
    CHECK(fo_exact(cycle_graph(5)).value == 2);
    CHECK(fo_exact(f_graph()).value == 4);
    CHECK(fo_exact(cycle_graph(4)).value == 2);
    CHECK(fo_exact(complete_graph(2)).value == 2);
    CHECK(fo_exact(path_graph(5)).value == 4);
    CHECK(naive::fo(path_graph(5)) == 4);
    CHECK(fo_exact(petersen_graph()).value == 10);

    auto isolated = fo_exact(path_graph(1));
    CHECK(isolated.value == 0);
    CHECK(isolated.witness.empty());
    CHECK(isolated.complete);
    CHECK(fo_exact(Graph{}).value == 0);
}

TEST_CASE("fo_exact witness is odd and has the reported size") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = seeded_graph(seed, 12);
        auto r = fo_exact(g);
        CHECK(r.complete);
        CHECK(r.value == naive::fo(g));
        CHECK(static_cast<int>(r.witness.size()) == r.value);
        if (r.value > 0) CHECK(is_odd_induced(g, r.witness));
    }
}

TEST_CASE("fk_exact") {
    for (int k = 2; k <= 5; ++k) CHECK(fk_exact(complete_graph(2), k).value == 2);
    CHECK(fk_exact(cycle_graph(6), 3).value == naive::fk(cycle_graph(6), 3));
    CHECK(fk_exact(f_graph(), 2).value == 4);
    CHECK_THROWS_AS(fk_exact(f_graph(), 1), PreconditionError);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = seeded_graph(seed + 1000, 11);
        for (int k = 2; k <= 4; ++k) {
            auto r = fk_exact(g, k);
            CHECK(r.value == naive::fk(g, k));
            for (Vertex v : r.witness) CHECK(degree_within(g, r.witness, v) % k == 1);
        }
        CHECK(fk_exact(g, 2).value == fo_exact(g).value);
    }
}

TEST_CASE("witness is deterministic across thread counts and component splitting") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = seeded_graph(seed + 77, 14);
        auto base = fo_exact(g);
        SearchOptions threaded;
        threaded.threads = 4;
        CHECK(fo_exact(g, threaded).witness == base.witness);
        SearchOptions whole;
        whole.split_components = false;
        CHECK(fo_exact(g, whole).witness == base.witness);
    }
    Graph r = random_regular_graph(30, 4, 3);
    SearchOptions threaded;
    threaded.threads = 3;
    CHECK(fo_exact(r, threaded).witness == fo_exact(r).witness);
}

TEST_CASE("threads_from_environment") {
    setenv("ODDSUB_THREADS", "3", 1);
    CHECK(threads_from_environment() == 3);
    setenv("ODDSUB_THREADS", "junk", 1);
    CHECK(threads_from_environment() == 1);
    unsetenv("ODDSUB_THREADS");
    CHECK(threads_from_environment() == 1);
}

TEST_CASE("budget exhaustion yields an incomplete lower bound") {
    Graph g = random_regular_graph(30, 4, 3);
    SearchOptions tiny;
    tiny.budget = 10;
    auto r = fo_exact(g, tiny);
    CHECK_FALSE(r.complete);
    CHECK(r.value <= fo_exact(g).value);
    if (r.value > 0) CHECK(is_odd_induced(g, r.witness));
}

TEST_CASE("component size guard") {
    CHECK_THROWS_AS(fo_exact(random_regular_graph(70, 4, 1)), SizeLimitError);
    // Many small components are fine.
    std::vector<Graph> parts(20, f_graph());
    CHECK(fo_exact(disjoint_union(parts)).value == 80);
}

TEST_CASE("max_induced_matching") {
    CHECK(max_induced_matching(cycle_graph(9)).size == 3);
    CHECK(max_induced_matching(cycle_graph(5)).size == 1);
    CHECK(max_induced_matching(complete_graph(2)).size == 1);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = seeded_graph(seed + 500, 8);
        if (g.edge_count() > 18) continue;
        auto m = max_induced_matching(g);
        CHECK(m.size == naive::induced_matching(g));
        std::vector<Vertex> ends;
        for (const auto& e : m.edges) {
            ends.push_back(e.u);
            ends.push_back(e.v);
        }
        if (m.size > 0) {
            VertexSet s(ends);
            for (Vertex v : s) CHECK(degree_within(g, s, v) == 1);
        }
    }
}

TEST_CASE("gf2 solver") {
    Gf2System sys(3);
    sys.add_equation({0, 1}, true);
    sys.add_equation({1, 2}, false);
    sys.add_equation({0, 0, 2}, true);  // x0 cancels: x2 = 1
    auto sol = sys.solve();
    REQUIRE(sol);
    CHECK((*sol)[2] == 1);
    CHECK((*sol)[1] == 1);
    CHECK((*sol)[0] == 0);

    Gf2System bad(2);
    bad.add_equation({0, 1}, true);
    bad.add_equation({0, 1}, false);
    CHECK_FALSE(bad.solve());

    Gf2System free_vars(4);
    free_vars.add_equation({3}, true);
    auto f = free_vars.solve();
    REQUIRE(f);
    CHECK(*f == std::vector<std::uint8_t>{0, 0, 0, 1});
}

TEST_CASE("gallai partitions") {
    Graph edgeless = build_graph(4, std::vector<std::pair<Vertex, Vertex>>{});
    auto e = gallai_partition(edgeless);
    CHECK(e.odd_part.empty());
    CHECK(e.even_part.size() == 4);

    auto k2 = gallai_partition(complete_graph(2));
    CHECK(k2.odd_part.size() + k2.even_part.size() == 2);
    CHECK((k2.odd_part.empty() || is_odd_induced(complete_graph(2), k2.odd_part)));
    CHECK(is_even_induced(complete_graph(2), k2.even_part));

    auto k3 = even_even_partition(complete_graph(3));
    CHECK(is_even_induced(complete_graph(3), k3.first));
    CHECK(is_even_induced(complete_graph(3), k3.second));

    auto pet = even_even_partition(petersen_graph());
    CHECK(is_even_induced(petersen_graph(), pet.first));
    CHECK(is_even_induced(petersen_graph(), pet.second));

    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = seeded_graph(seed + 9000, 16);
        auto gp = gallai_partition(g);
        CHECK(gp.odd_part.size() + gp.even_part.size() == static_cast<std::size_t>(g.order()));
        CHECK((gp.odd_part.empty() || is_odd_induced(g, gp.odd_part)));
        CHECK(is_even_induced(g, gp.even_part));
        auto ee = even_even_partition(g);
        CHECK(ee.first.size() + ee.second.size() == static_cast<std::size_t>(g.order()));
        CHECK(is_even_induced(g, ee.first));
        CHECK(is_even_induced(g, ee.second));
    }
}

TEST_CASE("every C4 split checked against the Gallai invariants") {
    Graph c4 = cycle_graph(4);
    auto m = naive::matrix(c4);
    int valid = 0;
    for (std::uint64_t odd = 0; odd < 16; ++odd) {
        bool ok = (odd == 0 || naive::all_one_mod(m, odd, 2)) && naive::all_even(m, 15 & ~odd);
        valid += ok;
    }
    CHECK(valid > 0);
    auto p = gallai_partition(c4);
    std::uint64_t odd = naive::mask_of(p.odd_part);
    CHECK(((odd == 0 || naive::all_one_mod(m, odd, 2)) && naive::all_even(m, 15 & ~odd)));
}

TEST_CASE("canonical form") {
    Graph c6 = cycle_graph(6);
    Graph relabelled = build_graph(6, {{0, 3}, {3, 5}, {5, 1}, {1, 4}, {4, 2}, {2, 0}});
    CHECK(canonical_form(c6) == canonical_form(relabelled));
    CHECK(are_isomorphic(c6, relabelled));
    Graph prism = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(are_isomorphic(prism, k33));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_gnm_graph(8, static_cast<int>(seed % 20), seed);
        std::mt19937_64 rng(seed);
        std::vector<Vertex> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<Vertex, Vertex>> e;
        for (const auto& ed : g.edges()) e.emplace_back(perm[ed.u], perm[ed.v]);
        CHECK(canonical_form(g) == canonical_form(build_graph(8, e)));
    }
}

TEST_CASE("enumerate_connected_regular") {
    auto n3 = enumerate_connected_regular(3);
    REQUIRE(n3.size() == 1);
    CHECK(are_isomorphic(n3[0], complete_graph(3)));
    auto n4 = enumerate_connected_regular(4);
    REQUIRE(n4.size() == 2);
    CHECK(are_isomorphic(n4[0], cycle_graph(4)));
    CHECK(are_isomorphic(n4[1], complete_graph(4)));
    auto n5 = enumerate_connected_regular(5);
    REQUIRE(n5.size() == 2);
    CHECK(are_isomorphic(n5[0], cycle_graph(5)));
    CHECK(are_isomorphic(n5[1], complete_graph(5)));
    for (int n = 3; n <= 6; ++n) {
        CHECK(static_cast<int>(enumerate_connected_regular(n).size()) == naive::connected_regular_classes(n));
    }
    const std::vector<std::size_t> known{1, 2, 2, 5, 4, 17, 22, 167};
    for (int n = 3; n <= 10; ++n) {
        auto all = enumerate_connected_regular(n);
        CHECK(all.size() == known[n - 3]);
        for (const auto& g : all) {
            CHECK(is_connected(g));
            CHECK(regular_degree(g).has_value());
            CHECK(canonical_form(g) == g);
        }
    }
    CHECK_THROWS_AS(enumerate_connected_regular(11), SizeLimitError);
}

TEST_CASE("enumerate_regular includes disconnected graphs") {
    // 2-regular on 6 vertices: C6 and 2 C3.
    CHECK(enumerate_regular(6, 2).size() == 2);
    // 3-regular on 8 vertices: 5 connected + K4+K4.
    CHECK(enumerate_regular(8, 3).size() == 6);
    CHECK(enumerate_regular(5, 3).empty());
}
