#pragma once

#include <vector>

#include "oddsub/graph.hpp"

namespace oddsub {

inline constexpr int kMaxEnumerationOrder = 10;

/// Canonical relabelling: the relabelled graph whose upper-triangle adjacency
/// string, read column by column, is lexicographically greatest. Two graphs are
/// isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Every k-regular graph on n vertices (connected or not), one per isomorphism
/// class, each in canonical form.
std::vector<Graph> enumerate_regular(int n, int k);

/// Every connected regular graph on n vertices, one per isomorphism class, in
/// canonical form, ordered by degree and then by canonical string (greatest first).
/// Throws SizeLimitError for n > kMaxEnumerationOrder.
std::vector<Graph> enumerate_connected_regular(int n);

}  // namespace oddsub
