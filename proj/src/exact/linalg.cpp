#include "tannaka/exact/linalg.hpp"

#include <algorithm>

#include "tannaka/errors.hpp"

namespace tannaka::exact {

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}, 0};
    Matrix& a = out.echelon;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
        Scalar inv = a(r, c).inverse();
        if (!inv.is_one())
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---------------------------------------------------------------- subspaces

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, Field field)
    : ambient_dim_(ambient_dim), field_(field), echelon_(0, ambient_dim, field) {}

SubspaceBasis SubspaceBasis::span_of_rows(const Matrix& vectors) {
    RrefResult r = rref(vectors);
    SubspaceBasis s(vectors.cols(), vectors.field());
    s.echelon_ = r.echelon.block(0, 0, r.rank, vectors.cols());
    s.pivots_ = std::move(r.pivots);
    return s;
}

SubspaceBasis SubspaceBasis::span_of_columns(const Matrix& vectors) { return span_of_rows(vectors.transpose()); }

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim, Field field) {
    return span_of_rows(Matrix::identity(ambient_dim, field));
}

bool SubspaceBasis::contains(const Matrix& column) const {
    if (column.rows() != ambient_dim_ || column.cols() != 1) throw DimensionMismatch("vector length mismatch");
    Matrix residue = column;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        Scalar coeff = residue(pivots_[k], 0);
        if (coeff.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            if (!echelon_(k, j).is_zero()) residue(j, 0) -= coeff * echelon_(k, j);
    }
    return residue.is_zero();
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    for (std::size_t k = 0; k < other.dim(); ++k)
        if (!contains(other.echelon_.block(k, 0, 1, ambient_dim_).transpose())) return false;
    return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& rhs) const {
    return ambient_dim_ == rhs.ambient_dim_ && echelon_ == rhs.echelon_;
}

SubspaceBasis kernel_basis(const LinearMap& f) {
    RrefResult r = rref(f);
    const std::size_t n = f.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Matrix> vectors;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Matrix v(n, 1, f.field());
        v(free, 0) = f.field().one();
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v(r.pivots[k], 0) = -r.echelon(k, free);
        vectors.push_back(std::move(v));
    }
    if (vectors.empty()) return SubspaceBasis(n, f.field());
    return SubspaceBasis::span_of_columns(hstack(vectors));
}

SubspaceBasis image_basis(const LinearMap& f) { return SubspaceBasis::span_of_columns(f); }

SubspaceBasis sum_subspaces(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
    return SubspaceBasis::span_of_rows(vstack({a.echelon(), b.echelon()}));
}

SubspaceBasis intersect_subspaces(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
    if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(a.ambient_dim(), a.field());
    // x = A s = B t  <=>  (s, t) in ker [A | -B]
    Matrix ca = a.columns();
    Matrix joined = hstack({ca, -b.columns()});
    SubspaceBasis k = kernel_basis(joined);
    if (k.dim() == 0) return SubspaceBasis(a.ambient_dim(), a.field());
    Matrix coeffs = k.columns().block(0, 0, a.dim(), k.dim());
    return SubspaceBasis::span_of_columns(ca * coeffs);
}

// ---------------------------------------------------------------- products

LinearMap kron(const LinearMap& f, const LinearMap& g) {
    if (f.field() != g.field()) throw FieldMismatch("Kronecker product across fields");
    LinearMap out(f.rows() * g.rows(), f.cols() * g.cols(), f.field());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& a = f(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& b = g(k, l);
                    if (b.is_zero()) continue;
                    out(i * g.rows() + k, j * g.cols() + l) = a.is_one() ? b : a * b;
                }
        }
    return out;
}

LinearMap kron_all(const std::vector<LinearMap>& factors, Field field) {
    LinearMap out = Matrix::identity(1, field);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

LinearMap direct_sum(const LinearMap& f, const LinearMap& g) {
    LinearMap out(f.rows() + g.rows(), f.cols() + g.cols(), f.field());
    out.set_block(0, 0, f);
    out.set_block(f.rows(), f.cols(), g);
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw DimensionMismatch("hstack row mismatch");
        cols += b.cols();
    }
    Matrix out(rows, cols, blocks.front().field());
    std::size_t c = 0;
    for (const auto& b : blocks) {
        out.set_block(0, c, b);
        c += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks.front().cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols, blocks.front().field());
    std::size_t r = 0;
    for (const auto& b : blocks) {
        out.set_block(r, 0, b);
        r += b.rows();
    }
    return out;
}

// ---------------------------------------------------------------- solving

std::optional<Matrix> solve_linear_system(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("right-hand side has wrong length");
    const std::size_t n = a.cols();
    RrefResult r = rref(hstack({a, b}));
    for (auto p : r.pivots)
        if (p >= n) return std::nullopt;
    Matrix x(n, b.cols(), a.field());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[k], j) = r.echelon(k, n + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    RrefResult r = rref(hstack({m, Matrix::identity(n, m.field())}));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    return r.echelon.block(0, n, n, n);
}

Quotient quotient(std::size_t ambient_dim, const SubspaceBasis& relations) {
    if (relations.ambient_dim() != ambient_dim) throw DimensionMismatch("relations live in a different space");
    const Field field = relations.field();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : relations.pivots()) is_pivot[p] = true;

    Quotient q;
    std::vector<std::size_t> slot(ambient_dim, 0);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        if (!is_pivot[i]) {
            slot[i] = q.representatives.size();
            q.representatives.push_back(i);
        }
    const std::size_t dim = q.representatives.size();

    q.section = Matrix(ambient_dim, dim, field);
    for (std::size_t k = 0; k < dim; ++k) q.section(q.representatives[k], k) = field.one();

    // e_rep -> its own slot; e_pivot -> e_pivot - row = -(row off the pivot).
    q.proj = Matrix(dim, ambient_dim, field);
    for (std::size_t k = 0; k < dim; ++k) q.proj(k, q.representatives[k]) = field.one();
    const Matrix& ech = relations.echelon();
    for (std::size_t r = 0; r < relations.dim(); ++r) {
        std::size_t p = relations.pivots()[r];
        for (std::size_t j = 0; j < ambient_dim; ++j)
            if (!is_pivot[j] && !ech(r, j).is_zero()) q.proj(slot[j], p) = -ech(r, j);
    }
    return q;
}

} // namespace tannaka::exact
