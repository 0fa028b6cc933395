#pragma once

#include <vector>

#include "xrc/rational.hpp"

namespace xrc {

/// Incremental exact row reduction over Q. Rows are inserted one at a time and
/// the stored set is kept in reduced row echelon form, so the rank and a
/// nullspace basis are available at any point.
class LinearSystem {
public:
    explicit LinearSystem(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    size_t rank() const { return rows_.size(); }

    void add_row(std::vector<Rational> row);

    // Basis of {x : Ax = 0}, one vector per free column.
    std::vector<std::vector<Rational>> nullspace_basis() const;

private:
    size_t cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace xrc
