#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tannaka/exact/matrix.hpp"

namespace tannaka::exact {

/// Column-compressed matrix for the permutation-like maps of the symmetric
/// structure. Same column convention as Matrix; each column keeps its
/// nonzero entries sorted by row.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

    static SparseMatrix identity(std::size_t n, Field field = Field::rationals());
    static SparseMatrix from_dense(const Matrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
    /// Replaces column j; entries must be nonzero with increasing rows.
    void set_column(std::size_t j, std::vector<Entry> entries);

    Matrix to_dense() const;

    SparseMatrix operator*(const SparseMatrix& rhs) const;
    bool operator==(const SparseMatrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<std::vector<Entry>> columns_;
};

SparseMatrix kron(const SparseMatrix& f, const SparseMatrix& g);

} // namespace tannaka::exact
