#include "xrc/linalg.hpp"

#include <algorithm>

namespace xrc {

void LinearSystem::add_row(std::vector<Rational> row) {
    if (row.size() != cols_) throw DomainError("size-error: row width mismatch");
    // Reduce against the current basis.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = row[pivots_[r]];
        if (c != 0) {
            Rational f = c;  // basis rows have a unit pivot
            for (size_t j = pivots_[r]; j < cols_; ++j)
                if (rows_[r][j] != 0) row[j] -= f * rows_[r][j];
        }
    }
    size_t p = cols_;
    for (size_t j = 0; j < cols_; ++j)
        if (row[j] != 0) {
            p = j;
            break;
        }
    if (p == cols_) return;  // dependent row
    Rational inv = Rational(1) / row[p];
    for (size_t j = p; j < cols_; ++j)
        if (row[j] != 0) row[j] *= inv;
    // Eliminate the new pivot from the stored rows to keep full RREF.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = rows_[r][p];
        if (c != 0)
            for (size_t j = p; j < cols_; ++j)
                if (row[j] != 0) rows_[r][j] -= c * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
}

std::vector<std::vector<Rational>> LinearSystem::nullspace_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols_, Rational(0));
        x[f] = 1;
        for (size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = -rows_[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace xrc
