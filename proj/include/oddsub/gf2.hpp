#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace oddsub {

/// Linear system A x = b over GF(2), rows stored as packed bit vectors.
class Gf2System {
public:
    explicit Gf2System(int variables);

    int variables() const { return variables_; }
    std::size_t equations() const { return rows_.size(); }

    /// Appends the equation sum_{i in coeffs} x_i = rhs; repeated indices cancel.
    void add_equation(const std::vector<int>& coeffs, bool rhs);

    /// Gauss-Jordan elimination. Columns are scanned left to right and the pivot is
    /// the first remaining row with a 1; free variables are set to 0. Empty when
    /// the system is inconsistent.
    std::optional<std::vector<std::uint8_t>> solve() const;

private:
    int variables_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::uint8_t> rhs_;
};

}  // namespace oddsub
