#include "tannaka/moncat/pairing.hpp"

#include "tannaka/errors.hpp"
#include "tannaka/exact/linalg.hpp"

namespace tannaka::moncat {

using exact::Matrix;

DualPairing standard_pairing(std::size_t dim, exact::Field field) {
    DualPairing p{dim, Matrix(1, dim * dim, field), Matrix(dim * dim, 1, field)};
    for (std::size_t i = 0; i < dim; ++i) {
        p.eval(0, i * dim + i) = field.one();
        p.coeval(i * dim + i, 0) = field.one();
    }
    return p;
}

exact::Report triangle_report(const DualPairing& p) {
    exact::Report report;
    const std::size_t n = p.space_dim;
    if (p.eval.rows() != 1 || p.eval.cols() != n * n || p.coeval.rows() != n * n || p.coeval.cols() != 1) {
        report.add(exact::check_flag("pairing shape", false, "eval must be 1xn^2 and coeval n^2x1"));
        return report;
    }
    const exact::Field field = p.eval.field();
    Matrix id = Matrix::identity(n, field);
    Matrix first = exact::kron(id, p.eval) * exact::kron(p.coeval, id);
    Matrix second = exact::kron(p.eval, id) * exact::kron(id, p.coeval);
    report.add(exact::check_equal("triangle V", first, id));
    report.add(exact::check_equal("triangle V^v", second, id));
    return report;
}

bool check_triangles(const DualPairing& p) { return triangle_report(p).ok(); }

exact::LinearMap dual_map(const exact::LinearMap& f, const DualPairing& p_dom, const DualPairing& p_cod) {
    const std::size_t x = p_dom.space_dim;
    const std::size_t y = p_cod.space_dim;
    if (f.rows() != x || f.cols() != y)
        throw DimensionMismatch("dual_map: f is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                " but the pairings have dims " + std::to_string(x) + ", " + std::to_string(y));
    const exact::Field field = f.field();
    Matrix id_x = Matrix::identity(x, field);
    Matrix id_y = Matrix::identity(y, field);
    Matrix insert = exact::kron(id_x, p_cod.coeval);                     // X^v -> X^v Y Y^v
    Matrix apply = exact::kron(exact::kron(id_x, f), id_y);               // -> X^v X Y^v
    Matrix contract = exact::kron(p_dom.eval, id_y);                     // -> Y^v
    return contract * apply * insert;
}

} // namespace tannaka::moncat
