#include "linalg.hpp"

#include <stdexcept>

namespace voa {

Vec RowEchelon::reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivot_cols_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot rows are normalized to 1
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (rows_[r][j].is_zero()) continue;
            v[j] -= f * rows_[r][j];
        }
    }
    return v;
}

bool RowEchelon::add(Vec v) {
    v = reduce(std::move(v));
    // pick the nonzero entry with the smallest representation as pivot
    std::size_t best = ncols_;
    std::size_t best_sz = 0;
    for (std::size_t j = 0; j < ncols_; ++j) {
        if (v[j].is_zero()) continue;
        std::size_t sz = v[j].size_hint();
        if (best == ncols_ || sz < best_sz) {
            best = j;
            best_sz = sz;
        }
    }
    if (best == ncols_) return false;
    Scalar inv = v[best].inverse();
    for (auto& c : v)
        if (!c.is_zero()) c = c * inv;
    // back-substitute into existing rows so the basis stays fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][best];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (v[j].is_zero()) continue;
            rows_[r][j] -= f * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivot_cols_.push_back(best);
    return true;
}

bool RowEchelon::contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

std::size_t mat_rank(const Mat& rows, std::size_t ncols) {
    RowEchelon re(ncols);
    for (const auto& r : rows) re.add(r);
    return re.rank();
}

std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target) {
    if (columns.empty()) {
        for (const auto& c : target)
            if (!c.is_zero()) return std::nullopt;
        return Vec{};
    }
    std::size_t m = target.size();
    std::size_t n = columns.size();
    // augmented rows [A | b], eliminated with plain leftmost pivoting so that
    // earlier columns are preferred as pivots (free variables become zero)
    Mat aug(m, Vec(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = columns[j][i];
        aug[i][n] = target[i];
    }
    std::vector<std::size_t> pivot_row_of_col(n, m);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = m;
        std::size_t sel_sz = 0;
        for (std::size_t i = row; i < m; ++i) {
            if (aug[i][col].is_zero()) continue;
            std::size_t sz = aug[i][col].size_hint();
            if (sel == m || sz < sel_sz) {
                sel = i;
                sel_sz = sz;
            }
        }
        if (sel == m) continue;
        std::swap(aug[row], aug[sel]);
        Scalar inv = aug[row][col].inverse();
        for (auto& c : aug[row])
            if (!c.is_zero()) c = c * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col].is_zero()) continue;
            Scalar f = aug[i][col];
            for (std::size_t j = col; j <= n; ++j) {
                if (aug[row][j].is_zero()) continue;
                aug[i][j] -= f * aug[row][j];
            }
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    // inconsistent iff a zero row has nonzero rhs
    for (std::size_t i = row; i < m; ++i)
        if (!aug[i][n].is_zero()) return std::nullopt;
    Vec x(n, Scalar(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] != m) x[col] = aug[pivot_row_of_col[col]][n];
    return x;
}

std::vector<Vec> nullspace(const Mat& rows, std::size_t ncols) {
    std::size_t m = rows.size();
    Mat a = rows;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m; ++col) {
        std::size_t sel = m;
        std::size_t sel_sz = 0;
        for (std::size_t i = row; i < m; ++i) {
            if (a[i][col].is_zero()) continue;
            std::size_t sz = a[i][col].size_hint();
            if (sel == m || sz < sel_sz) {
                sel = i;
                sel_sz = sz;
            }
        }
        if (sel == m) continue;
        std::swap(a[row], a[sel]);
        Scalar inv = a[row][col].inverse();
        for (auto& c : a[row])
            if (!c.is_zero()) c = c * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                if (a[row][j].is_zero()) continue;
                a[i][j] -= f * a[row][j];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace voa
