#include "oddsub/gf2.hpp"

#include <utility>

namespace oddsub {

Gf2System::Gf2System(int variables)
    : variables_(variables), words_((static_cast<std::size_t>(variables) + 63) / 64) {}

void Gf2System::add_equation(const std::vector<int>& coeffs, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (int i : coeffs) row[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63);
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs ? 1 : 0);
}

std::optional<std::vector<std::uint8_t>> Gf2System::solve() const {
    auto rows = rows_;
    auto rhs = rhs_;
    const std::size_t m = rows.size();
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < variables_ && rank < m; ++col) {
        const std::size_t w = static_cast<std::size_t>(col) >> 6;
        const std::uint64_t b = std::uint64_t{1} << (col & 63);
        std::size_t pivot = rank;
        while (pivot < m && (rows[pivot][w] & b) == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != rank && (rows[r][w] & b) != 0) {
                for (std::size_t k = 0; k < words_; ++k) rows[r][k] ^= rows[rank][k];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Rows below the rank are all-zero; a 1 on their right-hand side is a contradiction.
    for (std::size_t r = rank; r < m; ++r) {
        if (rhs[r] != 0) return std::nullopt;
    }
    std::vector<std::uint8_t> x(static_cast<std::size_t>(variables_), 0);
    for (std::size_t r = 0; r < rank; ++r) x[static_cast<std::size_t>(pivot_col[r])] = rhs[r];
    return x;
}

}  // namespace oddsub
