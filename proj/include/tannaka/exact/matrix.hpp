#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tannaka/exact/scalar.hpp"

namespace tannaka::exact {

/// Dense row-major matrix over one exact field.
///
/// As a linear map the matrix uses the column convention: column j is the
/// image of the j-th domain basis vector, so a map V -> W is stored as a
/// dim W x dim V matrix and composition g o f is the product g * f.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

    static Matrix identity(std::size_t n, Field field = Field::rationals());
    static Matrix zero(std::size_t rows, std::size_t cols, Field field = Field::rationals()) {
        return Matrix(rows, cols, field);
    }
    /// Entries are coerced into `field`; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field field = Field::rationals());
    static Matrix from_strings(const std::vector<std::vector<std::string>>& rows, Field field);
    /// Integer literal convenience, mostly for tests.
    static Matrix of(std::initializer_list<std::initializer_list<long long>> rows,
                     Field field = Field::rationals());
    /// Single column holding `values`.
    static Matrix column(const std::vector<Scalar>& values, Field field);
    /// The j-th standard basis column of length n.
    static Matrix unit_column(std::size_t n, std::size_t j, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.coerce(v); }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Matrix col(std::size_t c) const;
    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Largest entry magnitude (see Scalar::magnitude); zero for empty matrices.
    Scalar max_norm() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;

    bool operator==(const Matrix& rhs) const;

    std::vector<std::vector<std::string>> to_strings() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<Scalar> data_;
};

/// A linear map between coordinate spaces, in the column convention of
/// Matrix (codomain_dim x domain_dim).
using LinearMap = Matrix;

inline std::size_t domain_dim(const LinearMap& f) { return f.cols(); }
inline std::size_t codomain_dim(const LinearMap& f) { return f.rows(); }

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace tannaka::exact
