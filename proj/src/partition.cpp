#include "oddsub/partition.hpp"

#include <stdexcept>

#include "oddsub/gf2.hpp"

namespace oddsub {

namespace {

// x_v = 1 puts v in the first part. Kept vertices need sum_{u~v} x_u = want_in,
// discarded vertices need sum_{u~v} (1 - x_u) = 0, i.e. sum x_u = deg(v). Folding
// both cases into one equation gives
//   sum_{u~v} x_u + (want_in + deg(v)) x_v = deg(v)   (mod 2),
// with want_in = 1 for the odd/even split and 0 for the even/even split.
std::vector<std::uint8_t> solve_parity(const Graph& g, int want_in) {
    Gf2System sys(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> coeffs(g.neighbors(v).begin(), g.neighbors(v).end());
        if ((want_in + g.degree(v)) % 2 == 1) coeffs.push_back(v);
        sys.add_equation(coeffs, g.degree(v) % 2 == 1);
    }
    auto x = sys.solve();
    if (!x) throw std::logic_error("parity system has no solution; the partition always exists");
    return *x;
}

std::pair<VertexSet, VertexSet> split(const std::vector<std::uint8_t>& x) {
    std::vector<Vertex> in, out;
    for (std::size_t v = 0; v < x.size(); ++v) (x[v] ? in : out).push_back(static_cast<Vertex>(v));
    return {VertexSet(std::move(in)), VertexSet(std::move(out))};
}

}  // namespace

GallaiPartition gallai_partition(const Graph& g) {
    auto [odd, even] = split(solve_parity(g, 1));
    return {std::move(odd), std::move(even)};
}

EvenEvenPartition even_even_partition(const Graph& g) {
    auto [first, second] = split(solve_parity(g, 0));
    return {std::move(first), std::move(second)};
}

}  // namespace oddsub
