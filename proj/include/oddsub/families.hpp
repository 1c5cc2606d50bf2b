#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oddsub/graph.hpp"

namespace oddsub {

// Vertex labelling of every family is fixed so certificates and fixtures are reproducible:
// paths and cycles number vertices along the structure, stars put the center at 0,
// F uses a,b,c,d = 0..3 and u,v,w,x,y = 4..8, unions offset blocks in order.

struct PathFamily { int order; };
struct CycleFamily { int length; };
struct CompleteFamily { int order; };
struct StarFamily { int leaves; };
struct FGraphFamily {};
struct GklFamily { int k; int ell; };
struct PetersenFamily {};
struct RandomRegularFamily { int order; int degree; std::uint64_t seed; };
struct RandomGnmFamily { int order; int edges; std::uint64_t seed; };
struct DisjointUnionFamily;

using Family = std::variant<PathFamily, CycleFamily, CompleteFamily, StarFamily, FGraphFamily, GklFamily,
                            PetersenFamily, RandomRegularFamily, RandomGnmFamily, DisjointUnionFamily>;

struct DisjointUnionFamily { std::vector<Family> parts; };

Graph generate_family(const Family& family);

/// Parses the `name[:args]` mini-grammar, e.g. `cycle:9`, `F`, `gkl:2,4`, `K4`,
/// `random-regular:10,3,7`; blocks joined with `+` form a disjoint union.
Family parse_family(std::string_view text);

/// Human-readable help for the family grammar.
std::string family_grammar_help();

/// Convenience wrappers used throughout the tests and pipelines.
Graph path_graph(int order);
Graph cycle_graph(int length);
Graph complete_graph(int order);
Graph star_graph(int leaves);
Graph f_graph();
Graph gkl_graph(int k, int ell);
Graph petersen_graph();
Graph random_regular_graph(int order, int degree, std::uint64_t seed);
/// Uniformly random graph with exactly `edges` edges (seeded, deterministic).
Graph random_gnm_graph(int order, int edges, std::uint64_t seed);

}  // namespace oddsub
