#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddsub/cli.hpp"
#include "oddsub/oracle.hpp"

namespace oddsub {

/// Line graphs L(G) of seeded uniform random graphs G on `base_order` vertices with
/// min_edges..max_edges edges. Samples whose line graph has an isolated vertex are
/// redrawn, so every result is claw-free with minimum degree >= 1 and order m.
std::vector<Graph> random_line_graphs(int count, std::uint64_t seed, int base_order, int min_edges, int max_edges);

RunReport scan_wangwu(const SearchOptions& options = {});
RunReport scan_cycle_table(const SearchOptions& options = {});
RunReport scan_counterexample_orders(int first, int last);
RunReport scan_clawfree_random(int base_order, int trials, std::uint64_t seed);

/// Dispatches `name[:args]`; `default_seed` fills in an omitted seed.
RunReport run_scan(const std::string& spec, std::uint64_t default_seed, const SearchOptions& options = {});

}  // namespace oddsub
