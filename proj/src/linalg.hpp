#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace voa {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row major

// Exact Gauss-Jordan elimination over the coefficient field. Within each
// column the pivot is the entry of smallest size hint, which keeps rational
// coefficient growth in check on the structured systems we solve.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

    // Reduces v against the current rows; returns the reduced vector.
    Vec reduce(Vec v) const;
    // Reduces and, if nonzero, inserts as a new pivot row. True if inserted.
    bool add(Vec v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    bool contains(const Vec& v) const;

    // Pivot column of each stored row.
    const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

private:
    std::size_t ncols_;
    std::vector<Vec> rows_;  // each normalized to pivot 1, fully reduced
    std::vector<std::size_t> pivot_cols_;
};

std::size_t mat_rank(const Mat& rows, std::size_t ncols);

// Solves sum_i x_i columns[i] = target exactly. Returns one solution with all
// free variables set to zero (columns earlier in the list become pivots
// preferentially), or nullopt if the system is inconsistent.
std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target);

// Basis of the right nullspace of the matrix (rows x ncols).
std::vector<Vec> nullspace(const Mat& rows, std::size_t ncols);

}  // namespace voa
