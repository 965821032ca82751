#include "tannaka/exact/sparse.hpp"

#include <map>

#include "tannaka/errors.hpp"

namespace tannaka::exact {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n, Field field) {
    SparseMatrix m(n, n, field);
    for (std::size_t j = 0; j < n; ++j) m.columns_[j].emplace_back(j, field.one());
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
    SparseMatrix m(d.rows(), d.cols(), d.field());
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (!d(i, j).is_zero()) m.columns_[j].emplace_back(i, d(i, j));
    return m;
}

void SparseMatrix::set_column(std::size_t j, std::vector<Entry> entries) {
    if (j >= cols_) throw DimensionMismatch("sparse column out of range");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].first >= rows_ || (k > 0 && entries[k - 1].first >= entries[k].first))
            throw InvalidInput("sparse column entries must have increasing rows in range");
        entries[k].second = field_.coerce(entries[k].second);
    }
    std::erase_if(entries, [](const Entry& e) { return e.second.is_zero(); });
    columns_[j] = std::move(entries);
}

Matrix SparseMatrix::to_dense() const {
    Matrix d(rows_, cols_, field_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : columns_[j]) d(i, j) = v;
    return d;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("cannot compose " + std::to_string(rows_) + "x" + std::to_string(cols_) + " with " +
                                std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    if (field_ != rhs.field_) throw FieldMismatch("matrix product across fields");
    SparseMatrix out(rows_, rhs.cols_, field_);
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [k, b] : rhs.columns_[j])
            for (const auto& [i, a] : columns_[k]) {
                auto [it, fresh] = acc.try_emplace(i, a * b);
                if (!fresh) it->second += a * b;
            }
        auto& col = out.columns_[j];
        for (auto& [i, v] : acc)
            if (!v.is_zero()) col.emplace_back(i, std::move(v));
    }
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ && columns_ == rhs.columns_;
}

SparseMatrix kron(const SparseMatrix& f, const SparseMatrix& g) {
    if (f.field() != g.field()) throw FieldMismatch("Kronecker product across fields");
    SparseMatrix out(f.rows() * g.rows(), f.cols() * g.cols(), f.field());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (std::size_t l = 0; l < g.cols(); ++l) {
            std::vector<SparseMatrix::Entry> col;
            col.reserve(f.column(j).size() * g.column(l).size());
            for (const auto& [i, a] : f.column(j))
                for (const auto& [k, b] : g.column(l)) col.emplace_back(i * g.rows() + k, a * b);
            out.set_column(j * g.cols() + l, std::move(col));
        }
    return out;
}

} // namespace tannaka::exact
