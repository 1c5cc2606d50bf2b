#pragma once

#include <iosfwd>
#include <string>

#include "oddsub/graph.hpp"

namespace oddsub {

/// Reads the edge-list text format: a header line `n m`, then m lines `u v`.
/// Blank lines and lines starting with '#' are ignored. Throws ParseError with
/// the offending line number.
Graph read_edge_list(std::istream& in, bool dedupe = false);
Graph read_edge_list_file(const std::string& path, bool dedupe = false);

/// Writes canonical edges (u < v) in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace oddsub
