#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "naive.hpp"
#include "oddsub/coloring.hpp"
#include "oddsub/edge_list.hpp"
#include "oddsub/enumerate.hpp"
#include "oddsub/error.hpp"
#include "oddsub/families.hpp"
#include "oddsub/structure.hpp"

using namespace oddsub;

namespace {

enum : Vertex { a, b, c, d, u, v, w, x, y };

bool isomorphic_to(const Graph& g, const Graph& h) { return are_isomorphic(g, h); }

}  // namespace

TEST_CASE("build_graph") {
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.adjacent(1, 0));

    Graph f = f_graph();
    CHECK(f.order() == 9);
    CHECK(f.edge_count() == 12);

    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {0, 1}}), GraphError);
    CHECK(build_graph(3, {{0, 1}, {1, 0}}, true).edge_count() == 1);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), GraphError);
    try {
        build_graph(3, {{2, 2}});
        FAIL("expected a self-loop error");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("(2, 2)") != std::string::npos);
    }
}

TEST_CASE("edges are canonical and sorted; edge_index and neighbor masks agree") {
    Graph g = build_graph(5, {{3, 1}, {0, 4}, {2, 0}, {4, 3}});
    const auto& e = g.edges();
    REQUIRE(e.size() == 4);
    CHECK(std::is_sorted(e.begin(), e.end()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(e[i].u < e[i].v);
        CHECK(g.edge_index(e[i].u, e[i].v) == static_cast<int>(i));
        CHECK(g.edge_index(e[i].v, e[i].u) == static_cast<int>(i));
    }
    CHECK(g.edge_index(0, 1) == -1);
    CHECK(g.neighbor_mask(0) == ((1u << 2) | (1u << 4)));
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("large graphs keep O(1) adjacency") {
    Graph c = cycle_graph(200);
    CHECK(c.adjacent(199, 0));
    CHECK(c.adjacent(130, 131));
    CHECK_FALSE(c.adjacent(130, 132));
}

TEST_CASE("VertexSet") {
    VertexSet s{4, 1, 2};
    CHECK(s.to_vector() == std::vector<Vertex>{1, 2, 4});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    CHECK_THROWS_AS(VertexSet({1, 1}), GraphError);
    CHECK_THROWS_AS(VertexSet({-1}), GraphError);
    CHECK(VertexSet::from_mask(0b10110) == VertexSet{1, 2, 4});
    CHECK_THROWS_AS(validate(cycle_graph(4), VertexSet{0, 4}), GraphError);
}

TEST_CASE("induced_subgraph") {
    auto c6 = induced_subgraph(cycle_graph(6), VertexSet{0, 1, 3, 4});
    CHECK(c6.graph.order() == 4);
    CHECK(c6.graph.edge_count() == 2);
    CHECK(c6.graph.max_degree() == 1);
    CHECK(c6.original == std::vector<Vertex>{0, 1, 3, 4});

    auto fs = induced_subgraph(f_graph(), VertexSet{a, b, u, v});
    CHECK(fs.graph.edge_count() == 2);
    CHECK(fs.graph.max_degree() == 1);

    auto empty = induced_subgraph(f_graph(), VertexSet{});
    CHECK(empty.graph.order() == 0);
    CHECK_THROWS_AS(induced_subgraph(cycle_graph(4), VertexSet{7}), GraphError);
}

TEST_CASE("is_odd_induced / is_even_induced") {
    Graph c4 = cycle_graph(4);
    CHECK(is_odd_induced(c4, VertexSet{0, 1}));
    CHECK_FALSE(is_odd_induced(c4, VertexSet{0, 1, 2, 3}));
    CHECK(is_even_induced(c4, VertexSet{0, 1, 2, 3}));
    CHECK_FALSE(is_odd_induced(c4, VertexSet{}));
    CHECK(is_odd_induced(f_graph(), VertexSet{a, b, d, x}));
    CHECK(degree_within(f_graph(), VertexSet{a, b, d, x}, x) == 3);
    CHECK_THROWS_AS(is_odd_induced(c4, VertexSet{5}), GraphError);
}

TEST_CASE("line_graph") {
    auto l5 = line_graph(cycle_graph(5));
    CHECK(isomorphic_to(l5.lg, cycle_graph(5)));
    CHECK(l5.edge_of_vertex == cycle_graph(5).edges());

    CHECK(isomorphic_to(line_graph(star_graph(3)).lg, complete_graph(3)));
    CHECK(isomorphic_to(line_graph(path_graph(3)).lg, complete_graph(2)));

    // Vertex i of L(G) is edge i of G; adjacency is sharing an endpoint.
    Graph g = random_gnm_graph(8, 12, 5);
    auto lg = line_graph(g);
    for (int i = 0; i < g.edge_count(); ++i) {
        for (int j = i + 1; j < g.edge_count(); ++j) {
            CHECK(lg.lg.adjacent(i, j) == g.edges()[i].shares_endpoint_with(g.edges()[j]));
        }
    }
}

TEST_CASE("generate_family") {
    Graph f = f_graph();
    auto sides = bipartition(f);
    REQUIRE(sides);
    int left = static_cast<int>(std::count(sides->begin(), sides->end(), 0));
    CHECK(std::min(left, 9 - left) == 4);
    CHECK(gkl_graph(1, 6).order() == 33);
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK_THROWS_AS(cycle_graph(2), GraphError);
    CHECK_THROWS_AS(random_regular_graph(5, 3, 0), GraphError);

    Graph p = petersen_graph();
    CHECK(p.edge_count() == 15);
    CHECK(regular_degree(p) == 3);
    CHECK(girth(p) == 5);

    Graph r = random_regular_graph(12, 4, 7);
    CHECK(regular_degree(r) == 4);
    CHECK(r == random_regular_graph(12, 4, 7));

    Graph gnm = random_gnm_graph(9, 11, 3);
    CHECK(gnm.edge_count() == 11);
    CHECK(gnm == random_gnm_graph(9, 11, 3));
}

TEST_CASE("parse_family") {
    CHECK(generate_family(parse_family("cycle:9")) == cycle_graph(9));
    CHECK(generate_family(parse_family("C9")) == cycle_graph(9));
    CHECK(generate_family(parse_family("K4")) == complete_graph(4));
    CHECK(generate_family(parse_family("P5")) == path_graph(5));
    CHECK(generate_family(parse_family("F")) == f_graph());
    CHECK(generate_family(parse_family("gkl:2,4")) == gkl_graph(2, 4));
    CHECK(generate_family(parse_family("rr:10,3,7")) == random_regular_graph(10, 3, 7));
    Graph u = generate_family(parse_family("K3+path:2"));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.adjacent(3, 4));
    CHECK_THROWS_AS(parse_family("nosuch:3"), GraphError);
    CHECK_THROWS_AS(parse_family("cycle:x"), GraphError);
    CHECK_THROWS_AS(parse_family("gkl:1"), GraphError);
    CHECK_THROWS_AS(parse_family("K3+"), GraphError);
    CHECK_THROWS_AS(generate_family(parse_family("cycle:2")), GraphError);
}

TEST_CASE("disjoint_union, complement, components") {
    std::vector<Graph> parts{cycle_graph(3), path_graph(2)};
    Graph g = disjoint_union(parts);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1] == std::vector<Vertex>{3, 4});
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    CHECK(complement(complement(petersen_graph())) == petersen_graph());
}

TEST_CASE("classify") {
    auto f = classify(f_graph());
    CHECK(f.max_degree == 3);
    CHECK(f.is_bipartite);
    CHECK(f.k1r_free_from == 4);
    CHECK_FALSE(f.claw_free);
    auto claw = find_induced_star(f_graph(), 3);
    REQUIRE(claw);
    CHECK(claw->size() == 4);
    CHECK_FALSE(find_induced_star(f_graph(), 4));

    auto c5 = classify(cycle_graph(5));
    CHECK(c5.is_connected);
    CHECK(c5.regular_degree == 2);
    CHECK(c5.girth == 5);
    CHECK_FALSE(c5.c5_subgraph_free);

    auto c6 = classify(cycle_graph(6));
    CHECK(c6.is_bipartite);
    CHECK(c6.regular_degree == 2);
    CHECK(c6.girth == 6);
    CHECK(c6.claw_free);
    CHECK(c6.c5_subgraph_free);

    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK_FALSE(classify(complete_graph(5)).c5_subgraph_free);
    CHECK(classify(complete_graph(4)).c5_subgraph_free);
    auto cyc = find_c5_subgraph(petersen_graph());
    REQUIRE(cyc);
    for (int i = 0; i < 5; ++i) CHECK(petersen_graph().adjacent((*cyc)[i], (*cyc)[(i + 1) % 5]));
}

TEST_CASE("line graphs are claw-free") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_gnm_graph(8, 12, seed);
        CHECK(classify(line_graph(g).lg).claw_free);
    }
}

TEST_CASE("maximum_independent_set") {
    CHECK(maximum_independent_set(petersen_graph()).size() == 4);
    CHECK(maximum_independent_set(cycle_graph(7)).size() == 3);
    CHECK(maximum_independent_set(complete_graph(6)).size() == 1);
    CHECK(maximum_independent_set(f_graph()).size() == 5);
}

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(cycle_graph(5)).k == 3);
    CHECK(chromatic_number(f_graph()).k == 2);
    CHECK(chromatic_number(complete_graph(4)).k == 4);
    CHECK(chromatic_number(petersen_graph()).k == 3);
    CHECK(chromatic_number(build_graph(3, std::vector<std::pair<Vertex, Vertex>>{})).k == 1);
    CHECK(chromatic_number(cycle_graph(400)).k == 2);
    CHECK_THROWS_AS(chromatic_number(random_gnm_graph(25, 60, 1)), SizeLimitError);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_gnm_graph(7, static_cast<int>(seed % 15), seed);
        Coloring col = chromatic_number(g);
        CHECK(is_valid_coloring(g, col));
        CHECK(col.k == naive::chromatic(g));
    }
}

TEST_CASE("edge list round trip") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_gnm_graph(10, static_cast<int>(seed), seed);
        std::istringstream in(to_edge_list(g));
        CHECK(read_edge_list(in) == g);
    }
}

TEST_CASE("edge list parsing") {
    std::istringstream ok("# comment\n\n3 2\n0 1\n# inline\n1 2\n");
    Graph g = read_edge_list(ok);
    CHECK(g == path_graph(3));

    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("x y\n") == 1);
    CHECK(line_of("3 2\n0 1\n1 a\n") == 3);
    CHECK(line_of("3 1\n0 5\n") == 2);
    CHECK(line_of("3 1\n1 1\n") == 2);
    CHECK(line_of("3 2\n0 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK(read_edge_list(dup, true).edge_count() == 1);
}
