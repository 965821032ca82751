#include "tannaka/exact/matrix.hpp"

#include <ostream>
#include <sstream>

#include "tannaka/errors.hpp"

namespace tannaka::exact {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    Scalar one = field.one();
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_strings(const std::vector<std::vector<std::string>>& rows, Field field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.parse(rows[r][c]);
    }
    return m;
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<long long>> rows, Field field) {
    std::vector<std::vector<Scalar>> v;
    for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
    return from_rows(v, field);
}

Matrix Matrix::column(const std::vector<Scalar>& values, Field field) {
    Matrix m(values.size(), 1, field);
    for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, values[i]);
    return m;
}

Matrix Matrix::unit_column(std::size_t n, std::size_t j, Field field) {
    Matrix m(n, 1, field);
    m(j, 0) = field.one();
    return m;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix b(nr, nc, field_);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& s = (*this)(r, c);
            if (r == c ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

Scalar Matrix::max_norm() const {
    Scalar best = field_.zero();
    for (const auto& s : data_)
        if (!s.is_zero() && Scalar::less_magnitude(best, s)) best = s.magnitude();
    return best;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("cannot compose " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " with " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    if (field_ != rhs.field_) throw FieldMismatch("matrix product across fields");
    Matrix out(rows_, rhs.cols_, field_);
    // Structure maps are mostly sparse (permutations, Kronecker blocks), so
    // zero entries on either side are skipped.
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            const Scalar* brow = rhs.data_.data() + k * rhs.cols_;
            Scalar* orow = out.data_.data() + i * rhs.cols_;
            if (a.is_one()) {
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    if (!brow[j].is_zero()) orow[j] += brow[j];
            } else {
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    if (!brow[j].is_zero()) orow[j] += a * brow[j];
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) out.data_[i] -= rhs.data_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& s : out.data_)
        if (!s.is_zero()) s = -s;
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Scalar k = field_.coerce(s);
    Matrix out = *this;
    for (auto& e : out.data_)
        if (!e.is_zero()) e *= k;
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string());
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

} // namespace tannaka::exact
