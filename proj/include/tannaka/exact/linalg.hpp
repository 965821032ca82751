#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tannaka/exact/matrix.hpp"

namespace tannaka::exact {

struct RrefResult {
    Matrix echelon;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of K^ambient_dim, stored as the nonzero rows of a reduced
/// echelon matrix. Two SubspaceBasis values compare equal iff they span the
/// same subspace.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(std::size_t ambient_dim, Field field);

    /// Span of the columns of `vectors` (ambient_dim x k).
    static SubspaceBasis span_of_columns(const Matrix& vectors);
    /// Span of the rows of `vectors` (k x ambient_dim).
    static SubspaceBasis span_of_rows(const Matrix& vectors);
    static SubspaceBasis whole(std::size_t ambient_dim, Field field);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return echelon_.rows(); }
    Field field() const { return field_; }

    /// Basis vectors as rows, in reduced echelon form.
    const Matrix& echelon() const { return echelon_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Basis vectors as columns (ambient_dim x dim).
    Matrix columns() const { return echelon_.transpose(); }

    bool contains(const Matrix& column) const;
    bool contains(const SubspaceBasis& other) const;
    bool operator==(const SubspaceBasis& rhs) const;

private:
    std::size_t ambient_dim_ = 0;
    Field field_{};
    Matrix echelon_;
    std::vector<std::size_t> pivots_;
};

SubspaceBasis kernel_basis(const LinearMap& f);
SubspaceBasis image_basis(const LinearMap& f);
SubspaceBasis intersect_subspaces(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum_subspaces(const SubspaceBasis& a, const SubspaceBasis& b);

/// Kronecker product under the global convention: basis vector e_i (x) e_j
/// of the product has index i * dim_g + j.
LinearMap kron(const LinearMap& f, const LinearMap& g);
/// Left-to-right Kronecker product of a list (identity 1x1 for an empty list).
LinearMap kron_all(const std::vector<LinearMap>& factors, Field field);

/// Block diagonal f (+) g.
LinearMap direct_sum(const LinearMap& f, const LinearMap& g);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

/// Some X with a * X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_linear_system(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Quotient of K^ambient_dim by a relation subspace.
///
/// Representatives are the non-pivot coordinates of the relation echelon:
/// `section` sends the k-th quotient basis vector to e_{representatives[k]}
/// and `proj` reduces a vector modulo the relations before reading off those
/// coordinates.
struct Quotient {
    LinearMap proj;
    LinearMap section;
    std::vector<std::size_t> representatives;

    std::size_t dim() const { return proj.rows(); }
};

Quotient quotient(std::size_t ambient_dim, const SubspaceBasis& relations);

} // namespace tannaka::exact
